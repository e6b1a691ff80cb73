/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINHOM_TESTS_SUPPORT_HH
#define MINHOM_TESTS_SUPPORT_HH 1

#include <minhom/graph.hh>
#include <minhom/hardness.hh>
#include <minhom/homomorphism.hh>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace minhom::test
{
    inline auto random_digraph(std::mt19937 & rng, int n, bool reflexive, unsigned percent = 50) -> Digraph
    {
        std::vector<Arc> arcs;
        for (int a = 0 ; a < n ; ++a)
            for (int b = 0 ; b < n ; ++b)
                if ((a == b && reflexive) || (a != b && rng() % 100 < percent))
                    arcs.push_back(Arc{ a, b });
        return Digraph::with_size(n, arcs);
    }

    inline auto random_three_coloured(std::mt19937 & rng, int n, unsigned percent = 50) -> ThreeColouredGraph
    {
        std::vector<ColourClass> colour;
        for (int v = 0 ; v < n ; ++v)
            colour.push_back(ColourClass(rng() % 3));
        std::vector<Edge> edges;
        for (int a = 0 ; a < n ; ++a)
            for (int b = a + 1 ; b < n ; ++b)
                if (colour[a] != colour[b] && rng() % 100 < percent)
                    edges.push_back(Edge{ a, b });
        return ThreeColouredGraph(UndirectedGraph::with_size(n, edges), colour);
    }

    inline auto random_costs(std::mt19937 & rng, int instance_size, int template_size, int high = 9) -> CostMatrix
    {
        CostMatrix costs(instance_size, template_size);
        for (int u = 0 ; u < instance_size ; ++u)
            for (int i = 0 ; i < template_size ; ++i)
                costs.set(u, i, Rational(long(rng() % (high + 1))));
        return costs;
    }

    /// Every map V(G) -> V(H), no pruning at all. Only for tiny cases.
    inline auto plain_min_cost(const Digraph & g, const Digraph & h, const CostMatrix & costs) -> std::optional<Rational>
    {
        int n = g.size(), m = h.size();
        std::vector<Vertex> f(n, 0);
        std::optional<Rational> best;
        while (true) {
            bool ok = true;
            for (auto & a : g.arcs())
                if (! h.has_arc(f[a.from], f[a.to])) {
                    ok = false;
                    break;
                }
            if (ok) {
                Rational c;
                for (int u = 0 ; u < n ; ++u)
                    c += costs.at(u, f[u]);
                if (! best || c < *best)
                    best = c;
            }

            int k = 0;
            while (k < n && ++f[k] == m)
                f[k++] = 0;
            if (k == n)
                break;
        }
        return best;
    }

    /// Size of the largest independent set, by trying every subset.
    inline auto plain_alpha(const UndirectedGraph & x) -> int
    {
        int n = x.size(), best = 0;
        for (unsigned mask = 0 ; mask < (1u << n) ; ++mask) {
            bool ok = true;
            for (int a = 0 ; a < n && ok ; ++a)
                for (int b = a + 1 ; b < n && ok ; ++b)
                    if ((mask >> a & 1) && (mask >> b & 1) && x.has_edge(a, b))
                        ok = false;
            if (ok)
                best = std::max(best, __builtin_popcount(mask));
        }
        return best;
    }

    /// Min-Max by definition, over every quadruple, for any ordering given as a sequence.
    inline auto plain_min_max(const Digraph & h, const std::vector<Vertex> & seq) -> bool
    {
        int n = int(seq.size());
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                for (int s = 0 ; s < n ; ++s)
                    for (int r = s + 1 ; r < n ; ++r)
                        if (h.has_arc(seq[i], seq[r]) && h.has_arc(seq[j], seq[s])
                                && ! (h.has_arc(seq[i], seq[s]) && h.has_arc(seq[j], seq[r])))
                            return false;
        return true;
    }

    /// Bipartite Min-Max by definition, orderings given as sequences of white and black vertices.
    inline auto plain_bipartite_min_max(const BipartiteGraph & b, const std::vector<Vertex> & white,
            const std::vector<Vertex> & black) -> bool
    {
        int w = int(white.size()), k = int(black.size());
        for (int i = 0 ; i < w ; ++i)
            for (int j = i + 1 ; j < w ; ++j)
                for (int s = 0 ; s < k ; ++s)
                    for (int r = s + 1 ; r < k ; ++r)
                        if (b.has_edge(white[i], black[r]) && b.has_edge(white[j], black[s])
                                && ! (b.has_edge(white[i], black[s]) && b.has_edge(white[j], black[r])))
                            return false;
        return true;
    }

    inline auto plain_has_bipartite_min_max(const BipartiteGraph & b) -> bool
    {
        std::vector<Vertex> white(b.white_size()), black(b.black_size());
        std::iota(white.begin(), white.end(), 0);
        do {
            std::iota(black.begin(), black.end(), 0);
            do
                if (plain_bipartite_min_max(b, white, black))
                    return true;
            while (std::next_permutation(black.begin(), black.end()));
        } while (std::next_permutation(white.begin(), white.end()));
        return false;
    }

    inline auto plain_has_min_max(const Digraph & h) -> bool
    {
        std::vector<Vertex> p(h.size());
        std::iota(p.begin(), p.end(), 0);
        do
            if (plain_min_max(h, p))
                return true;
        while (std::next_permutation(p.begin(), p.end()));
        return false;
    }

    /// Isomorphism of small undirected graphs by trying every bijection.
    inline auto plain_isomorphic(const UndirectedGraph & a, const UndirectedGraph & b) -> bool
    {
        if (a.size() != b.size() || a.edge_count() != b.edge_count())
            return false;
        std::vector<Vertex> p(a.size());
        std::iota(p.begin(), p.end(), 0);
        do {
            bool ok = true;
            for (int x = 0 ; x < a.size() && ok ; ++x)
                for (int y = 0 ; y < a.size() && ok ; ++y)
                    if (a.has_edge(x, y) != b.has_edge(p[x], p[y]))
                        ok = false;
            if (ok)
                return true;
        } while (std::next_permutation(p.begin(), p.end()));
        return false;
    }

    inline auto plain_isomorphic(const Digraph & a, const Digraph & b) -> bool
    {
        if (a.size() != b.size() || a.arc_count() != b.arc_count())
            return false;
        std::vector<Vertex> p(a.size());
        std::iota(p.begin(), p.end(), 0);
        do {
            bool ok = true;
            for (int x = 0 ; x < a.size() && ok ; ++x)
                for (int y = 0 ; y < a.size() && ok ; ++y)
                    if (a.has_arc(x, y) != b.has_arc(p[x], p[y]))
                        ok = false;
            if (ok)
                return true;
        } while (std::next_permutation(p.begin(), p.end()));
        return false;
    }
}

#endif
