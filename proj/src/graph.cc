/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minhom/graph.hh>
#include <minhom/errors.hh>

#include <algorithm>
#include <cctype>
#include <functional>

using std::function;
using std::map;
using std::nullopt;
using std::optional;
using std::pair;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace minhom
{
    namespace
    {
        auto valid_name(const string & name) -> bool
        {
            auto primes = name.find('\'');
            auto stem = name.substr(0, primes);
            if (stem.empty())
                return false;
            for (char c : stem)
                if (! (std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                    return false;
            if (primes != string::npos)
                for (auto i = primes ; i < name.size() ; ++i)
                    if (name[i] != '\'')
                        return false;
            return true;
        }

        auto build_index(const vector<string> & names) -> map<string, Vertex, std::less<> >
        {
            map<string, Vertex, std::less<> > result;
            for (Vertex v = 0 ; v < Vertex(names.size()) ; ++v) {
                if (! valid_name(names[v]))
                    throw PreconditionError("invalid vertex name '" + names[v] + "'");
                if (! result.emplace(names[v], v).second)
                    throw PreconditionError("duplicate vertex '" + names[v] + "'");
            }
            return result;
        }

        /**
         * Backtracking over pattern vertices in index order. adjacent_p / adjacent_h
         * answer the directed question "is there an arc a -> b"; for undirected
         * graphs they are symmetric. compatible filters candidates before any
         * adjacency work is done.
         */
        auto search_induced(int pattern_size, int host_size,
                const function<bool (int, int)> & adjacent_p,
                const function<bool (int, int)> & adjacent_h,
                const function<bool (int, int)> & compatible) -> optional<vector<int> >
        {
            if (pattern_size > host_size)
                return nullopt;

            vector<int> image(pattern_size, -1);
            vector<bool> used(host_size, false);

            function<bool (int)> extend = [&] (int p) -> bool {
                if (p == pattern_size)
                    return true;

                for (int h = 0 ; h < host_size ; ++h) {
                    if (used[h] || ! compatible(p, h))
                        continue;

                    bool ok = true;
                    for (int q = 0 ; q < p && ok ; ++q)
                        ok = adjacent_p(p, q) == adjacent_h(h, image[q]) && adjacent_p(q, p) == adjacent_h(image[q], h);
                    if (! ok)
                        continue;

                    image[p] = h;
                    used[h] = true;
                    if (extend(p + 1))
                        return true;
                    used[h] = false;
                }
                image[p] = -1;
                return false;
            };

            if (extend(0))
                return image;
            return nullopt;
        }

        auto check_vertex_list(int size, const vector<Vertex> & vertices) -> void
        {
            vector<bool> seen(size, false);
            for (auto v : vertices) {
                if (v < 0 || v >= size)
                    throw PreconditionError("unknown vertex index " + to_string(v));
                if (seen[v])
                    throw PreconditionError("vertex index " + to_string(v) + " repeated");
                seen[v] = true;
            }
        }

        auto injective_into(const vector<Vertex> & image, int host_size) -> bool
        {
            vector<bool> seen(host_size, false);
            for (auto v : image) {
                if (v < 0 || v >= host_size || seen[v])
                    return false;
                seen[v] = true;
            }
            return true;
        }
    }

    auto default_vertex_names(int n) -> vector<string>
    {
        vector<string> result;
        for (int i = 0 ; i < n ; ++i)
            result.push_back(n <= 26 ? string(1, char('a' + i)) : "v" + to_string(i));
        return result;
    }

    Digraph::Digraph(vector<string> names, const vector<Arc> & arcs) :
        _names(std::move(names)),
        _index(build_index(_names)),
        _out(size(), size()),
        _in(size(), size())
    {
        for (auto & a : arcs) {
            if (a.from < 0 || a.from >= size() || a.to < 0 || a.to >= size())
                throw PreconditionError("arc endpoint out of range");
            if (_out.test(a.from, a.to))
                throw PreconditionError("duplicate arc " + _names[a.from] + "->" + _names[a.to]);
            _out.set(a.from, a.to);
            _in.set(a.to, a.from);
            ++_arc_count;
        }
    }

    auto Digraph::with_size(int n, const vector<Arc> & arcs) -> Digraph
    {
        return Digraph(default_vertex_names(n), arcs);
    }

    auto Digraph::from_names(vector<string> names, const vector<pair<string, string> > & arcs) -> Digraph
    {
        auto index = build_index(names);
        vector<Arc> resolved;
        for (auto & [from, to] : arcs) {
            auto f = index.find(from), t = index.find(to);
            if (f == index.end())
                throw PreconditionError("unknown vertex '" + from + "'");
            if (t == index.end())
                throw PreconditionError("unknown vertex '" + to + "'");
            resolved.push_back(Arc{ f->second, t->second });
        }
        return Digraph(std::move(names), resolved);
    }

    auto Digraph::find(string_view name) const -> optional<Vertex>
    {
        auto i = _index.find(name);
        if (i == _index.end())
            return nullopt;
        return i->second;
    }

    auto Digraph::index_of(string_view name) const -> Vertex
    {
        if (auto v = find(name))
            return *v;
        throw PreconditionError("unknown vertex '" + string(name) + "'");
    }

    auto Digraph::arcs() const -> vector<Arc>
    {
        vector<Arc> result;
        result.reserve(_arc_count);
        for (Vertex u = 0 ; u < size() ; ++u)
            for (Vertex v = 0 ; v < size() ; ++v)
                if (has_arc(u, v))
                    result.push_back(Arc{ u, v });
        return result;
    }

    auto Digraph::is_reflexive() const -> bool
    {
        for (Vertex v = 0 ; v < size() ; ++v)
            if (! has_loop(v))
                return false;
        return true;
    }

    auto Digraph::is_symmetric() const -> bool
    {
        return _out == _in;
    }

    UndirectedGraph::UndirectedGraph(vector<string> names, const vector<Edge> & edges) :
        _names(std::move(names)),
        _index(build_index(_names)),
        _adj(size(), size())
    {
        for (auto & e : edges) {
            if (e.first < 0 || e.first >= size() || e.second < 0 || e.second >= size())
                throw PreconditionError("edge endpoint out of range");
            if (_adj.test(e.first, e.second))
                throw PreconditionError("duplicate edge " + _names[e.first] + "-" + _names[e.second]);
            _adj.set(e.first, e.second);
            _adj.set(e.second, e.first);
            ++_edge_count;
        }
    }

    auto UndirectedGraph::with_size(int n, const vector<Edge> & edges) -> UndirectedGraph
    {
        return UndirectedGraph(default_vertex_names(n), edges);
    }

    auto UndirectedGraph::find(string_view name) const -> optional<Vertex>
    {
        auto i = _index.find(name);
        if (i == _index.end())
            return nullopt;
        return i->second;
    }

    auto UndirectedGraph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (Vertex u = 0 ; u < size() ; ++u)
            for (Vertex v = u ; v < size() ; ++v)
                if (has_edge(u, v))
                    result.push_back(Edge{ u, v });
        return result;
    }

    auto UndirectedGraph::is_reflexive() const -> bool
    {
        for (Vertex v = 0 ; v < size() ; ++v)
            if (! has_loop(v))
                return false;
        return true;
    }

    auto UndirectedGraph::reflexive_closure() const -> UndirectedGraph
    {
        auto e = edges();
        for (Vertex v = 0 ; v < size() ; ++v)
            if (! has_loop(v))
                e.push_back(Edge{ v, v });
        return UndirectedGraph(_names, e);
    }

    BipartiteGraph::BipartiteGraph(vector<string> white_names, vector<string> black_names,
            const vector<pair<Vertex, Vertex> > & edges) :
        _white_names(std::move(white_names)),
        _black_names(std::move(black_names)),
        _adj(white_size(), black_size())
    {
        for (auto & [w, b] : edges) {
            if (w < 0 || w >= white_size() || b < 0 || b >= black_size())
                throw PreconditionError("bipartite edge endpoint out of range");
            if (_adj.test(w, b))
                throw PreconditionError("duplicate bipartite edge");
            _adj.set(w, b);
            ++_edge_count;
        }
    }

    auto BipartiteGraph::with_size(int white, int black, const vector<pair<Vertex, Vertex> > & edges) -> BipartiteGraph
    {
        vector<string> w, b;
        for (int i = 0 ; i < white ; ++i)
            w.push_back("w" + to_string(i));
        for (int i = 0 ; i < black ; ++i)
            b.push_back("b" + to_string(i));
        return BipartiteGraph(w, b, edges);
    }

    auto BipartiteGraph::edges() const -> vector<pair<Vertex, Vertex> >
    {
        vector<pair<Vertex, Vertex> > result;
        for (Vertex w = 0 ; w < white_size() ; ++w)
            for (Vertex b = 0 ; b < black_size() ; ++b)
                if (has_edge(w, b))
                    result.emplace_back(w, b);
        return result;
    }

    auto BipartiteGraph::white_degree(Vertex w) const -> int
    {
        return _adj.row_count(w);
    }

    auto BipartiteGraph::black_degree(Vertex b) const -> int
    {
        int result = 0;
        for (Vertex w = 0 ; w < white_size() ; ++w)
            if (has_edge(w, b))
                ++result;
        return result;
    }

    auto BipartiteGraph::swap_colours() const -> BipartiteGraph
    {
        vector<pair<Vertex, Vertex> > swapped;
        for (auto & [w, b] : edges())
            swapped.emplace_back(b, w);
        std::sort(swapped.begin(), swapped.end());
        return BipartiteGraph(_black_names, _white_names, swapped);
    }

    auto symmetric_subgraph(const Digraph & h) -> UndirectedGraph
    {
        vector<Edge> edges;
        for (Vertex u = 0 ; u < h.size() ; ++u)
            for (Vertex v = u ; v < h.size() ; ++v)
                if (h.has_arc(u, v) && h.has_arc(v, u))
                    edges.push_back(Edge{ u, v });
        return UndirectedGraph(h.names(), edges);
    }

    auto underlying_graph(const Digraph & h) -> UndirectedGraph
    {
        vector<Edge> edges;
        for (Vertex u = 0 ; u < h.size() ; ++u)
            for (Vertex v = u ; v < h.size() ; ++v)
                if (h.has_arc(u, v) || h.has_arc(v, u))
                    edges.push_back(Edge{ u, v });
        return UndirectedGraph(h.names(), edges);
    }

    auto bipartite_double(const Digraph & h) -> BipartiteGraph
    {
        vector<string> white, black;
        for (auto & n : h.names()) {
            white.push_back(n + "'");
            black.push_back(n + "''");
        }
        vector<pair<Vertex, Vertex> > edges;
        for (auto & a : h.arcs())
            edges.emplace_back(a.from, a.to);
        return BipartiteGraph(white, black, edges);
    }

    auto converse(const Digraph & h) -> Digraph
    {
        vector<Arc> arcs;
        for (auto & a : h.arcs())
            arcs.push_back(Arc{ a.to, a.from });
        std::sort(arcs.begin(), arcs.end());
        return Digraph(h.names(), arcs);
    }

    auto as_symmetric_digraph(const UndirectedGraph & g) -> Digraph
    {
        vector<Arc> arcs;
        for (Vertex u = 0 ; u < g.size() ; ++u)
            for (Vertex v = 0 ; v < g.size() ; ++v)
                if (g.has_edge(u, v))
                    arcs.push_back(Arc{ u, v });
        return Digraph(g.names(), arcs);
    }

    auto induced_subgraph(const Digraph & h, const vector<Vertex> & vertices) -> Digraph
    {
        check_vertex_list(h.size(), vertices);
        vector<string> names;
        for (auto v : vertices)
            names.push_back(h.name(v));
        vector<Arc> arcs;
        for (int i = 0 ; i < int(vertices.size()) ; ++i)
            for (int j = 0 ; j < int(vertices.size()) ; ++j)
                if (h.has_arc(vertices[i], vertices[j]))
                    arcs.push_back(Arc{ i, j });
        return Digraph(names, arcs);
    }

    auto induced_subgraph(const Digraph & h, const vector<string> & names) -> Digraph
    {
        vector<Vertex> vertices;
        for (auto & n : names)
            vertices.push_back(h.index_of(n));
        return induced_subgraph(h, vertices);
    }

    auto induced_subgraph(const UndirectedGraph & g, const vector<Vertex> & vertices) -> UndirectedGraph
    {
        check_vertex_list(g.size(), vertices);
        vector<string> names;
        for (auto v : vertices)
            names.push_back(g.name(v));
        vector<Edge> edges;
        for (int i = 0 ; i < int(vertices.size()) ; ++i)
            for (int j = i ; j < int(vertices.size()) ; ++j)
                if (g.has_edge(vertices[i], vertices[j]))
                    edges.push_back(Edge{ i, j });
        return UndirectedGraph(names, edges);
    }

    auto find_induced(const Digraph & pattern, const Digraph & host) -> optional<Embedding>
    {
        auto result = search_induced(pattern.size(), host.size(),
                [&] (int a, int b) { return pattern.has_arc(a, b); },
                [&] (int a, int b) { return host.has_arc(a, b); },
                [&] (int p, int h) {
                    return pattern.has_loop(p) == host.has_loop(h)
                        && pattern.out_degree(p) <= host.out_degree(h)
                        && pattern.in_degree(p) <= host.in_degree(h);
                });
        if (! result)
            return nullopt;
        return Embedding{ *result };
    }

    auto find_induced(const UndirectedGraph & pattern, const UndirectedGraph & host) -> optional<Embedding>
    {
        auto result = search_induced(pattern.size(), host.size(),
                [&] (int a, int b) { return pattern.has_edge(a, b); },
                [&] (int a, int b) { return host.has_edge(a, b); },
                [&] (int p, int h) {
                    return pattern.has_loop(p) == host.has_loop(h) && pattern.degree(p) <= host.degree(h);
                });
        if (! result)
            return nullopt;
        return Embedding{ *result };
    }

    auto find_induced(const BipartiteGraph & pattern, const BipartiteGraph & host) -> optional<BipartiteEmbedding>
    {
        // Flatten: whites first, then blacks.
        int pw = pattern.white_size(), hw = host.white_size();
        auto p_adj = [&] (int a, int b) {
            if (a < pw && b >= pw)
                return pattern.has_edge(a, b - pw);
            if (a >= pw && b < pw)
                return pattern.has_edge(b, a - pw);
            return false;
        };
        auto h_adj = [&] (int a, int b) {
            if (a < hw && b >= hw)
                return host.has_edge(a, b - hw);
            if (a >= hw && b < hw)
                return host.has_edge(b, a - hw);
            return false;
        };
        auto compatible = [&] (int p, int h) {
            bool p_white = p < pw, h_white = h < hw;
            if (p_white != h_white)
                return false;
            return p_white
                ? pattern.white_degree(p) <= host.white_degree(h)
                : pattern.black_degree(p - pw) <= host.black_degree(h - hw);
        };

        if (pattern.white_size() > host.white_size() || pattern.black_size() > host.black_size())
            return nullopt;

        auto result = search_induced(pw + pattern.black_size(), hw + host.black_size(), p_adj, h_adj, compatible);
        if (! result)
            return nullopt;

        BipartiteEmbedding e;
        for (int i = 0 ; i < pw ; ++i)
            e.white.push_back((*result)[i]);
        for (int i = pw ; i < int(result->size()) ; ++i)
            e.black.push_back((*result)[i] - hw);
        return e;
    }

    auto is_induced_embedding(const Digraph & pattern, const Digraph & host, const Embedding & e) -> bool
    {
        if (int(e.image.size()) != pattern.size() || ! injective_into(e.image, host.size()))
            return false;
        for (Vertex a = 0 ; a < pattern.size() ; ++a)
            for (Vertex b = 0 ; b < pattern.size() ; ++b)
                if (pattern.has_arc(a, b) != host.has_arc(e.image[a], e.image[b]))
                    return false;
        return true;
    }

    auto is_induced_embedding(const UndirectedGraph & pattern, const UndirectedGraph & host, const Embedding & e) -> bool
    {
        if (int(e.image.size()) != pattern.size() || ! injective_into(e.image, host.size()))
            return false;
        for (Vertex a = 0 ; a < pattern.size() ; ++a)
            for (Vertex b = a ; b < pattern.size() ; ++b)
                if (pattern.has_edge(a, b) != host.has_edge(e.image[a], e.image[b]))
                    return false;
        return true;
    }

    auto is_induced_embedding(const BipartiteGraph & pattern, const BipartiteGraph & host, const BipartiteEmbedding & e) -> bool
    {
        if (int(e.white.size()) != pattern.white_size() || int(e.black.size()) != pattern.black_size())
            return false;
        if (! injective_into(e.white, host.white_size()) || ! injective_into(e.black, host.black_size()))
            return false;
        for (Vertex w = 0 ; w < pattern.white_size() ; ++w)
            for (Vertex b = 0 ; b < pattern.black_size() ; ++b)
                if (pattern.has_edge(w, b) != host.has_edge(e.white[w], e.black[b]))
                    return false;
        return true;
    }
}
