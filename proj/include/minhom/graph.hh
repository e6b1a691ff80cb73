/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINHOM_GRAPH_HH
#define MINHOM_GRAPH_HH 1

#include <minhom/bit_matrix.hh>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace minhom
{
    /// Dense index of a vertex, assigned by declaration order.
    using Vertex = int;

    struct Arc
    {
        Vertex from, to;

        auto operator<=> (const Arc &) const = default;
    };

    /// Unordered pair, stored with first <= second. A loop has first == second.
    struct Edge
    {
        Vertex first, second;

        auto operator<=> (const Edge &) const = default;
    };

    /**
     * Names "a", "b", ... for up to 26 vertices, then "v0", "v1", ...
     */
    auto default_vertex_names(int n) -> std::vector<std::string>;

    /**
     * A directed graph with named vertices, loops allowed, no parallel arcs.
     *
     * Immutable once built. Vertex names are alphanumeric tokens (underscores
     * and a trailing run of primes are also accepted, for B(H) style names);
     * internally vertices are dense indices in declaration order.
     */
    class Digraph
    {
        private:
            std::vector<std::string> _names;
            std::map<std::string, Vertex, std::less<>> _index;
            BitMatrix _out, _in;
            long _arc_count = 0;

        public:
            Digraph() = default;

            /// Throws PreconditionError on duplicate names, bad names, bad or duplicate arcs.
            explicit Digraph(std::vector<std::string> names, const std::vector<Arc> & arcs = { });

            /// Vertices named by default_vertex_names(n).
            static auto with_size(int n, const std::vector<Arc> & arcs = { }) -> Digraph;

            static auto from_names(std::vector<std::string> names,
                    const std::vector<std::pair<std::string, std::string> > & arcs) -> Digraph;

            auto size() const -> int { return int(_names.size()); }
            auto name(Vertex v) const -> const std::string & { return _names.at(v); }
            auto names() const -> const std::vector<std::string> & { return _names; }
            auto find(std::string_view name) const -> std::optional<Vertex>;
            auto index_of(std::string_view name) const -> Vertex;

            auto has_arc(Vertex from, Vertex to) const -> bool { return _out.test(from, to); }
            auto has_loop(Vertex v) const -> bool { return _out.test(v, v); }
            auto arc_count() const -> long { return _arc_count; }

            /// Sorted by (from, to).
            auto arcs() const -> std::vector<Arc>;

            auto out_degree(Vertex v) const -> int { return _out.row_count(v); }
            auto in_degree(Vertex v) const -> int { return _in.row_count(v); }

            auto is_reflexive() const -> bool;
            auto is_symmetric() const -> bool;

            auto operator== (const Digraph & other) const -> bool
            {
                return _names == other._names && _out == other._out;
            }
    };

    class UndirectedGraph
    {
        private:
            std::vector<std::string> _names;
            std::map<std::string, Vertex, std::less<>> _index;
            BitMatrix _adj;
            long _edge_count = 0;

        public:
            UndirectedGraph() = default;

            explicit UndirectedGraph(std::vector<std::string> names, const std::vector<Edge> & edges = { });

            static auto with_size(int n, const std::vector<Edge> & edges = { }) -> UndirectedGraph;

            auto size() const -> int { return int(_names.size()); }
            auto name(Vertex v) const -> const std::string & { return _names.at(v); }
            auto names() const -> const std::vector<std::string> & { return _names; }
            auto find(std::string_view name) const -> std::optional<Vertex>;

            auto has_edge(Vertex a, Vertex b) const -> bool { return _adj.test(a, b); }
            auto has_loop(Vertex v) const -> bool { return _adj.test(v, v); }

            /// Counts loops as edges.
            auto edge_count() const -> long { return _edge_count; }

            /// Sorted, normalised so that first <= second.
            auto edges() const -> std::vector<Edge>;

            /// Neighbours other than v itself.
            auto degree(Vertex v) const -> int { return _adj.row_count(v) - (has_loop(v) ? 1 : 0); }

            auto is_reflexive() const -> bool;

            /// Same graph with a loop on every vertex.
            auto reflexive_closure() const -> UndirectedGraph;

            auto operator== (const UndirectedGraph & other) const -> bool
            {
                return _names == other._names && _adj == other._adj;
            }
    };

    /**
     * A bipartite graph with a fixed white / black colouring. Edges always
     * join a white vertex to a black vertex, so there are no loops.
     */
    class BipartiteGraph
    {
        private:
            std::vector<std::string> _white_names, _black_names;
            BitMatrix _adj;
            long _edge_count = 0;

        public:
            BipartiteGraph() = default;

            /// Edges are (white index, black index) pairs.
            BipartiteGraph(std::vector<std::string> white_names, std::vector<std::string> black_names,
                    const std::vector<std::pair<Vertex, Vertex> > & edges = { });

            static auto with_size(int white, int black,
                    const std::vector<std::pair<Vertex, Vertex> > & edges = { }) -> BipartiteGraph;

            auto white_size() const -> int { return int(_white_names.size()); }
            auto black_size() const -> int { return int(_black_names.size()); }
            auto white_name(Vertex w) const -> const std::string & { return _white_names.at(w); }
            auto black_name(Vertex b) const -> const std::string & { return _black_names.at(b); }

            auto has_edge(Vertex white, Vertex black) const -> bool { return _adj.test(white, black); }
            auto edge_count() const -> long { return _edge_count; }
            auto edges() const -> std::vector<std::pair<Vertex, Vertex> >;

            auto white_degree(Vertex w) const -> int;
            auto black_degree(Vertex b) const -> int;

            /// The same graph with the colour classes exchanged.
            auto swap_colours() const -> BipartiteGraph;

            auto operator== (const BipartiteGraph & other) const -> bool
            {
                return _white_names == other._white_names && _black_names == other._black_names && _adj == other._adj;
            }
    };

    /// Pattern vertex i is sent to host vertex image[i].
    struct Embedding
    {
        std::vector<Vertex> image;

        auto operator== (const Embedding &) const -> bool = default;
    };

    /// Colour-respecting: white pattern vertices go to white host vertices.
    struct BipartiteEmbedding
    {
        std::vector<Vertex> white, black;

        auto operator== (const BipartiteEmbedding &) const -> bool = default;
    };

    /// S(H): edge uv iff both uv and vu are arcs. Loops carry over.
    auto symmetric_subgraph(const Digraph & h) -> UndirectedGraph;

    /// U(H): edge uv iff uv or vu is an arc.
    auto underlying_graph(const Digraph & h) -> UndirectedGraph;

    /// B(H): white v', black v'', edge v'w'' per arc vw. White and black i both come from vertex i.
    auto bipartite_double(const Digraph & h) -> BipartiteGraph;

    auto converse(const Digraph & h) -> Digraph;

    /// The symmetric digraph with an arc each way per edge (and a loop per loop).
    auto as_symmetric_digraph(const UndirectedGraph & g) -> Digraph;

    /// Vertices appear in the order given. Throws PreconditionError on unknown or repeated vertices.
    auto induced_subgraph(const Digraph & h, const std::vector<Vertex> & vertices) -> Digraph;
    auto induced_subgraph(const Digraph & h, const std::vector<std::string> & names) -> Digraph;
    auto induced_subgraph(const UndirectedGraph & g, const std::vector<Vertex> & vertices) -> UndirectedGraph;

    /**
     * First induced copy of pattern inside host, searching pattern vertices in
     * index order and host candidates in ascending index order. Loop status has
     * to match, as does every arc / non-arc between images.
     */
    auto find_induced(const Digraph & pattern, const Digraph & host) -> std::optional<Embedding>;
    auto find_induced(const UndirectedGraph & pattern, const UndirectedGraph & host) -> std::optional<Embedding>;
    auto find_induced(const BipartiteGraph & pattern, const BipartiteGraph & host) -> std::optional<BipartiteEmbedding>;

    auto is_induced_embedding(const Digraph & pattern, const Digraph & host, const Embedding & e) -> bool;
    auto is_induced_embedding(const UndirectedGraph & pattern, const UndirectedGraph & host, const Embedding & e) -> bool;
    auto is_induced_embedding(const BipartiteGraph & pattern, const BipartiteGraph & host, const BipartiteEmbedding & e) -> bool;
}

#endif
