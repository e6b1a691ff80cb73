/* vim: set sw=4 sts=4 et foldmethod=syntax : */

// The forbidden subgraph lists used for certificates, checked against a
// plain enumeration of minimal graphs without a (bipartite) Min-Max ordering.

#include <minhom/ordering.hh>
#include <minhom/recognition.hh>

#include "support.hh"

#include <doctest.h>

using namespace minhom;
using std::string;
using std::vector;

namespace
{
    auto has_min_max(const UndirectedGraph & g) -> bool
    {
        return find_min_max_bruteforce(as_symmetric_digraph(g)).has_value();
    }

    auto delete_vertex(const UndirectedGraph & g, Vertex v) -> UndirectedGraph
    {
        vector<Vertex> keep;
        for (int w = 0 ; w < g.size() ; ++w)
            if (w != v)
                keep.push_back(w);
        return induced_subgraph(g, keep);
    }

    auto delete_vertex(const BipartiteGraph & b, bool white, Vertex v) -> BipartiteGraph
    {
        vector<std::pair<Vertex, Vertex> > edges;
        for (auto [w, k] : b.edges()) {
            if ((white && w == v) || (! white && k == v))
                continue;
            edges.emplace_back(white && w > v ? w - 1 : w, ! white && k > v ? k - 1 : k);
        }
        return BipartiteGraph::with_size(b.white_size() - (white ? 1 : 0), b.black_size() - (white ? 0 : 1), edges);
    }

    auto same_bigraph(const BipartiteGraph & a, const BipartiteGraph & b) -> bool
    {
        return a.white_size() == b.white_size() && a.black_size() == b.black_size()
            && a.edge_count() == b.edge_count() && find_induced(a, b).has_value();
    }

    auto is_even_cycle(const BipartiteGraph & b) -> bool
    {
        if (b.white_size() != b.black_size() || b.edge_count() != 2 * b.white_size())
            return false;
        for (int w = 0 ; w < b.white_size() ; ++w)
            if (b.white_degree(w) != 2)
                return false;
        for (int k = 0 ; k < b.black_size() ; ++k)
            if (b.black_degree(k) != 2)
                return false;
        return same_bigraph(b, bipartite_cycle(b.white_size()));
    }
}

TEST_CASE("minimal reflexive graphs without a Min-Max ordering are the listed patterns")
{
    vector<std::pair<string, UndirectedGraph> > expected{
        { "C4", reflexive_cycle(4) }, { "C5", reflexive_cycle(5) }, { "C6", reflexive_cycle(6) },
        { "claw", claw() }, { "net", net() }, { "tent", tent() } };
    vector<bool> seen(expected.size(), false);
    long minimal = 0;

    for (int n = 1 ; n <= 6 ; ++n) {
        vector<Edge> slots;
        for (int a = 0 ; a < n ; ++a)
            for (int b = a + 1 ; b < n ; ++b)
                slots.push_back(Edge{ a, b });
        for (unsigned mask = 0 ; mask < (1u << slots.size()) ; ++mask) {
            vector<Edge> edges;
            for (int v = 0 ; v < n ; ++v)
                edges.push_back(Edge{ v, v });
            for (std::size_t i = 0 ; i < slots.size() ; ++i)
                if (mask >> i & 1)
                    edges.push_back(slots[i]);
            auto g = UndirectedGraph::with_size(n, edges);
            if (has_min_max(g))
                continue;
            bool is_minimal = true;
            for (int v = 0 ; v < n && is_minimal ; ++v)
                is_minimal = has_min_max(delete_vertex(g, v));
            if (! is_minimal)
                continue;

            ++minimal;
            bool matched = false;
            for (std::size_t p = 0 ; p < expected.size() ; ++p)
                if (test::plain_isomorphic(g, expected[p].second)) {
                    seen[p] = true;
                    matched = true;
                }
            CHECK_MESSAGE(matched, "unexpected minimal graph on " << n << " vertices, edge mask " << mask);
        }
    }

    CHECK(minimal > 0);
    for (std::size_t p = 0 ; p < expected.size() ; ++p)
        CHECK_MESSAGE(seen[p], expected[p].first << " never appeared");
}

TEST_CASE("minimal bipartite graphs without a bipartite Min-Max ordering are the listed patterns")
{
    vector<NamedBigraph> expected;
    for (auto & n : proper_interval_bigraph_obstructions(8))
        if (n.name != "C6" && n.name != "C8")
            expected.push_back(n);
    REQUIRE(expected.size() == 6);
    vector<bool> seen(expected.size(), false);

    for (int whites = 1 ; whites <= 7 ; ++whites)
        for (int blacks = 1 ; whites + blacks <= 8 ; ++blacks) {
            int slots = whites * blacks;
            for (unsigned long mask = 0 ; mask < (1ul << slots) ; ++mask) {
                vector<std::pair<Vertex, Vertex> > edges;
                for (int i = 0 ; i < slots ; ++i)
                    if (mask >> i & 1)
                        edges.emplace_back(i / blacks, i % blacks);
                auto b = BipartiteGraph::with_size(whites, blacks, edges);

                // Isolated vertices never make a graph minimal; skip them cheaply.
                bool isolated = false;
                for (int w = 0 ; w < whites && ! isolated ; ++w)
                    isolated = b.white_degree(w) == 0;
                for (int k = 0 ; k < blacks && ! isolated ; ++k)
                    isolated = b.black_degree(k) == 0;
                if (isolated || find_bipartite_min_max(b))
                    continue;

                bool is_minimal = true;
                for (int w = 0 ; w < whites && is_minimal ; ++w)
                    is_minimal = find_bipartite_min_max(delete_vertex(b, true, w)).has_value();
                for (int k = 0 ; k < blacks && is_minimal ; ++k)
                    is_minimal = find_bipartite_min_max(delete_vertex(b, false, k)).has_value();
                if (! is_minimal || is_even_cycle(b))
                    continue;

                bool matched = false;
                for (std::size_t p = 0 ; p < expected.size() ; ++p)
                    if (same_bigraph(expected[p].graph, b)) {
                        seen[p] = true;
                        matched = true;
                    }
                CHECK_MESSAGE(matched, "unexpected minimal bigraph " << whites << "+" << blacks << ", edge mask " << mask);
            }
        }

    for (std::size_t p = 0 ; p < expected.size() ; ++p)
        CHECK_MESSAGE(seen[p], expected[p].name << (expected[p].swapped ? " (swapped)" : "") << " never appeared");
}
