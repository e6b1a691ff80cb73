/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINHOM_ORDERING_HH
#define MINHOM_ORDERING_HH 1

#include <minhom/graph.hh>

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace minhom
{
    /// A linear order on {0, ..., n-1}: sequence[k] is the vertex at position k.
    class Ordering
    {
        private:
            std::vector<Vertex> _sequence, _position;

        public:
            Ordering() = default;

            /// Throws PreconditionError unless sequence is a permutation of 0..n-1.
            explicit Ordering(std::vector<Vertex> sequence);

            static auto identity(int n) -> Ordering;

            auto size() const -> int { return int(_sequence.size()); }
            auto sequence() const -> const std::vector<Vertex> & { return _sequence; }
            auto at(int position) const -> Vertex { return _sequence.at(position); }
            auto position(Vertex v) const -> int { return _position.at(v); }
            auto before(Vertex a, Vertex b) const -> bool { return _position.at(a) < _position.at(b); }

            auto reversed() const -> Ordering;

            auto operator== (const Ordering &) const -> bool = default;
    };

    struct BipartiteOrdering
    {
        Ordering white, black;

        auto operator== (const BipartiteOrdering &) const -> bool = default;
    };

    /// Exponential searches refuse inputs larger than max_vertices unless override_limit is set.
    struct SearchLimits
    {
        int max_vertices = 10;
        bool override_limit = false;
    };

    /**
     * The defining condition: for positions i < j and s < r with ir, js arcs,
     * both is and jr must be arcs. Works for any digraph, loops or not.
     */
    auto is_min_max(const Digraph & h, const Ordering & order) -> bool;

    /**
     * For reflexive H only: every arc ik with j strictly between forces ij and
     * jk, and every arc ki forces kj and ji.
     */
    auto is_min_max_reflexive(const Digraph & h, const Ordering & order) -> bool;

    auto is_bipartite_min_max(const BipartiteGraph & b, const BipartiteOrdering & order) -> bool;

    /// Lexicographically first Min-Max ordering, by pruned search over permutations.
    auto find_min_max_bruteforce(const Digraph & h, const SearchLimits & limits = { }) -> std::optional<Ordering>;

    /// Calls visit on every Min-Max ordering in lexicographic order, until visit returns false.
    auto for_each_min_max(const Digraph & h, const std::function<bool (const Ordering &)> & visit,
            const SearchLimits & limits = { }) -> void;

    /**
     * First bipartite Min-Max ordering, building white and black sequences
     * alternately (white first) and pruning any prefix that already fails.
     */
    auto find_bipartite_min_max(const BipartiteGraph & b, const SearchLimits & limits = { }) -> std::optional<BipartiteOrdering>;

    auto for_each_bipartite_min_max(const BipartiteGraph & b, const std::function<bool (const BipartiteOrdering &)> & visit,
            const SearchLimits & limits = { }) -> void;

    /**
     * The witness pattern of a stuck exchange, named after the two cases of the
     * sufficiency argument. A mirror is the same pattern with u and v exchanged.
     */
    enum class StuckCase
    {
        Case1,
        Case2,
        Case1Mirror,
        Case2Mirror
    };

    auto stuck_case_name(StuckCase c) -> std::string;

    /**
     * Exchanges were exhausted with (u, v) still improper: v' before u' among
     * whites but u'' before v'' among blacks. s is a white copy that separates
     * v'' from u'', t a black copy that separates u' from v'.
     */
    struct StuckReport
    {
        Vertex u, v, s, t;
        StuckCase kind;
        BipartiteOrdering final_order;
        int swaps;
    };

    struct ExchangeSuccess
    {
        Ordering order;
        int swaps;
    };

    using ExchangeOutcome = std::variant<ExchangeSuccess, StuckReport>;

    /**
     * Turn a bipartite Min-Max ordering of B(H) into a Min-Max ordering of H by
     * transposing improper pairs, or report where it gets stuck.
     *
     * Improper pairs are scanned by (white position of v, white position of u).
     * For each, transposing u'' and v'' is tried first, then u' and v'; a
     * transposition is taken only if the result is still a bipartite Min-Max
     * ordering. Every transposition of an improper pair strictly increases the
     * number of proper pairs, so at most n(n-1)/2 happen.
     *
     * Throws PreconditionError if H is not reflexive or the start ordering is
     * not a bipartite Min-Max ordering of B(H); throws InternalError if the
     * final ordering is somehow not Min-Max.
     */
    auto exchange_construct(const Digraph & h, const BipartiteOrdering & start) -> ExchangeOutcome;

    /// Does (u, v, s, t) have one of the four case patterns in B(H)? Returns the first that fits.
    auto classify_stuck_witnesses(const Digraph & h, Vertex u, Vertex v, Vertex s, Vertex t) -> std::optional<StuckCase>;
}

#endif
