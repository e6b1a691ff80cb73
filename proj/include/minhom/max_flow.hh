/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINHOM_MAX_FLOW_HH
#define MINHOM_MAX_FLOW_HH 1

#include <minhom/rational.hh>

#include <vector>

namespace minhom
{
    /**
     * A flow network with exact rational capacities. Node 0 is the source and
     * node 1 the sink. Infinite capacity is a separate flag, never a big number.
     */
    class CutNetwork
    {
        public:
            struct CapacityArc
            {
                int from, to;
                bool infinite;
                Rational capacity;
            };

        private:
            int _nodes = 2;
            std::vector<CapacityArc> _arcs;

        public:
            static constexpr int source = 0, sink = 1;

            Rational offset;

            auto add_node() -> int { return _nodes++; }
            auto node_count() const -> int { return _nodes; }

            /// Throws PreconditionError on a negative capacity or an unknown node.
            auto add_arc(int from, int to, Rational capacity) -> void;
            auto add_infinite_arc(int from, int to) -> void;

            auto arcs() const -> const std::vector<CapacityArc> & { return _arcs; }
    };

    struct CutResult
    {
        Rational value;

        /// source_side[n] iff node n is reachable from the source in the final residual graph.
        std::vector<bool> source_side;
    };

    /**
     * Maximum flow by Dinic's algorithm on integers, after multiplying every
     * capacity by the least common denominator. Returns the flow value (which
     * equals the minimum cut capacity) and the source side of a minimum cut.
     * The offset is not included. Throws OverflowError if the scaled
     * capacities do not fit in 64 bits, and PreconditionError if every cut
     * has infinite capacity.
     */
    auto max_flow(const CutNetwork & net) -> CutResult;

    /// Capacity of the cut with the given source side; infinite arcs crossing it make this throw.
    auto cut_capacity(const CutNetwork & net, const std::vector<bool> & source_side) -> Rational;
}

#endif
