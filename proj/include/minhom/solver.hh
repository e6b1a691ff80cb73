/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINHOM_SOLVER_HH
#define MINHOM_SOLVER_HH 1

#include <minhom/errors.hh>
#include <minhom/graph.hh>
#include <minhom/homomorphism.hh>
#include <minhom/max_flow.hh>
#include <minhom/ordering.hh>

#include <string>
#include <vector>

namespace minhom
{
    /**
     * The arc relation of a reflexive template read in a Min-Max ordering:
     * row a (by position) is the interval [lo[a], hi[a]], and both bounds are
     * nondecreasing. psi[b] is the first position a with hi[a] >= b.
     * Positions are 0-based.
     */
    struct BandProfile
    {
        std::vector<int> lo, hi, psi;

        auto size() const -> int { return int(lo.size()); }
        auto contains(int a, int b) const -> bool { return lo[a] <= b && b <= hi[a]; }
    };

    class BandViolation : public Error
    {
        public:
            enum class Kind
            {
                RowNotInterval,
                LowerBoundDecreases,
                UpperBoundDecreases
            };

            BandViolation(Kind kind, int position, const std::string & message) :
                Error(message),
                _kind(kind),
                _position(position)
            {
            }

            auto kind() const -> Kind { return _kind; }

            /// The row (position in the ordering) where the violation shows.
            auto position() const -> int { return _position; }

        private:
            Kind _kind;
            int _position;
    };

    /// Throws BandViolation when the ordering is not Min-Max for H, PreconditionError if H is not reflexive.
    auto band_profile(const Digraph & h, const Ordering & order) -> BandProfile;

    /**
     * One implication between threshold variables of the two ends of an arc uv
     * of the instance. Level L of a vertex means "its image sits at position
     * >= L"; level 0 always holds and never appears here.
     */
    struct ThresholdImplication
    {
        bool from_tail;
        int from_level;
        int to_level;
    };

    /// Implications that make (image of u, image of v) lie in the arc relation, for an arc uv.
    auto arc_implications(const BandProfile & profile) -> std::vector<ThresholdImplication>;

    /// Do the threshold vectors of positions a (tail) and b (head) satisfy all implications?
    auto satisfies_implications(const std::vector<ThresholdImplication> & implications, int tail_position, int head_position) -> bool;

    /// The network whose minimum cut, plus its offset, is the minimum homomorphism cost.
    struct CutEncoding
    {
        CutNetwork network;

        /// level_node[u][L - 1] is the node of "image of u at position >= L", L = 1..p-1.
        std::vector<std::vector<int> > level_node;
    };

    auto encode_min_cut(const Digraph & h, const Ordering & order, const Digraph & g, const CostMatrix & costs) -> CutEncoding;

    /**
     * A minimum-cost homomorphism of G to H, found with one minimum cut. H must
     * be reflexive and order a Min-Max ordering of it. The returned cost is a
     * fresh re-summation of c_{f(u)}(u), and is checked against the cut value.
     */
    auto solve(const Digraph & h, const Ordering & order, const Digraph & g, const CostMatrix & costs) -> Homomorphism;
}

#endif
