/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minhom/solver.hh>
#include <minhom/errors.hh>

#include <algorithm>

using std::string;
using std::to_string;
using std::vector;

namespace minhom
{
    auto band_profile(const Digraph & h, const Ordering & order) -> BandProfile
    {
        if (order.size() != h.size())
            throw PreconditionError("ordering does not match the template");
        if (! h.is_reflexive())
            throw PreconditionError("band profiles need a reflexive template");

        int p = h.size();
        auto arc = [&] (int a, int b) { return h.has_arc(order.at(a), order.at(b)); };

        BandProfile result;
        for (int a = 0 ; a < p ; ++a) {
            int lo = a, hi = a;
            while (lo > 0 && arc(a, lo - 1))
                --lo;
            while (hi + 1 < p && arc(a, hi + 1))
                ++hi;
            for (int b = 0 ; b < p ; ++b)
                if (arc(a, b) && (b < lo || b > hi))
                    throw BandViolation(BandViolation::Kind::RowNotInterval, a,
                            "row of " + h.name(order.at(a)) + " is not an interval around it: it reaches "
                            + h.name(order.at(b)) + " but skips a vertex in between");
            if (a > 0 && lo < result.lo.back())
                throw BandViolation(BandViolation::Kind::LowerBoundDecreases, a,
                        "row of " + h.name(order.at(a)) + " starts before the row of " + h.name(order.at(a - 1)));
            if (a > 0 && hi < result.hi.back())
                throw BandViolation(BandViolation::Kind::UpperBoundDecreases, a,
                        "row of " + h.name(order.at(a)) + " ends before the row of " + h.name(order.at(a - 1)));
            result.lo.push_back(lo);
            result.hi.push_back(hi);
        }

        for (int b = 0 ; b < p ; ++b) {
            int a = 0;
            while (result.hi[a] < b)
                ++a;
            result.psi.push_back(a);
        }
        return result;
    }

    auto arc_implications(const BandProfile & profile) -> vector<ThresholdImplication>
    {
        vector<ThresholdImplication> result;
        // tail at >= a forces head at >= lo[a]
        for (int a = 1 ; a < profile.size() ; ++a)
            if (profile.lo[a] >= 1)
                result.push_back(ThresholdImplication{ true, a, profile.lo[a] });
        // head at >= b forces tail at >= psi[b]
        for (int b = 1 ; b < profile.size() ; ++b)
            if (profile.psi[b] >= 1)
                result.push_back(ThresholdImplication{ false, b, profile.psi[b] });
        return result;
    }

    auto satisfies_implications(const vector<ThresholdImplication> & implications, int tail_position, int head_position) -> bool
    {
        for (auto & i : implications) {
            int from = i.from_tail ? tail_position : head_position;
            int to = i.from_tail ? head_position : tail_position;
            if (from >= i.from_level && to < i.to_level)
                return false;
        }
        return true;
    }

    auto encode_min_cut(const Digraph & h, const Ordering & order, const Digraph & g, const CostMatrix & costs) -> CutEncoding
    {
        check_cost_shape(g, h, costs);
        auto profile = band_profile(h, order);
        int p = h.size();

        CutEncoding result;
        auto & net = result.network;
        result.level_node.resize(g.size());

        for (Vertex u = 0 ; u < g.size() ; ++u) {
            // shift so every position costs >= 0 for this vertex
            auto least = costs.at(u, order.at(0));
            for (int a = 1 ; a < p ; ++a)
                least = std::min(least, costs.at(u, order.at(a)));
            net.offset += least;

            auto & levels = result.level_node[u];
            for (int level = 1 ; level < p ; ++level)
                levels.push_back(net.add_node());

            if (p == 1)
                continue;

            // Cutting the chain just after position a puts u at a.
            net.add_arc(CutNetwork::source, levels[0], costs.at(u, order.at(0)) - least);
            for (int a = 1 ; a + 1 < p ; ++a)
                net.add_arc(levels[a - 1], levels[a], costs.at(u, order.at(a)) - least);
            net.add_arc(levels[p - 2], CutNetwork::sink, costs.at(u, order.at(p - 1)) - least);
            for (int level = 2 ; level < p ; ++level)
                net.add_infinite_arc(levels[level - 1], levels[level - 2]);
        }

        auto implications = arc_implications(profile);
        for (auto & arc : g.arcs())
            for (auto & i : implications) {
                Vertex from = i.from_tail ? arc.from : arc.to;
                Vertex to = i.from_tail ? arc.to : arc.from;
                net.add_infinite_arc(result.level_node[from][i.from_level - 1], result.level_node[to][i.to_level - 1]);
            }

        return result;
    }

    auto solve(const Digraph & h, const Ordering & order, const Digraph & g, const CostMatrix & costs) -> Homomorphism
    {
        auto encoding = encode_min_cut(h, order, g, costs);
        auto cut = max_flow(encoding.network);

        Homomorphism result;
        for (Vertex u = 0 ; u < g.size() ; ++u) {
            int position = 0;
            for (int level = 1 ; level < h.size() ; ++level)
                if (cut.source_side[encoding.level_node[u][level - 1]])
                    position = level;
            result.image.push_back(order.at(position));
        }

        // Cross-checks: the cut is finite and the assignment reproduces its value.
        auto cut_value = cut_capacity(encoding.network, cut.source_side);
        if (cut_value != cut.value)
            throw InternalError("residual cut capacity " + cut_value.to_string() + " differs from flow value " + cut.value.to_string());

        auto check = verify_homomorphism(g, h, result.image, costs);
        if (! check.valid)
            throw InternalError("minimum cut decoded to a non-homomorphism");
        if (check.cost != cut.value + encoding.network.offset)
            throw InternalError("re-summed cost " + check.cost.to_string() + " differs from cut value plus offset "
                    + (cut.value + encoding.network.offset).to_string());
        result.cost = check.cost;
        return result;
    }
}
