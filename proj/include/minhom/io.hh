/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINHOM_IO_HH
#define MINHOM_IO_HH 1

#include <minhom/graph.hh>
#include <minhom/homomorphism.hh>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace minhom
{
    struct ObstructionCatalog;
    struct GadgetInstance;
    class ThreeColouredGraph;

    struct DigraphFile
    {
        std::string name;
        Digraph graph;
    };

    /**
     * Grammar, one directive per line, '#' starts a comment:
     *
     *   digraph <name>
     *   vertices: <id> <id> ...
     *   arcs: <id>-><id> ...        (may repeat)
     *   reflexive                   (optional: adds every missing loop)
     *
     * Throws ParseError with the line and column of the first problem.
     */
    auto parse_digraph(std::string_view text) -> DigraphFile;

    /// Explicit loops, arcs sorted, no reflexive line: parse_digraph gives the value back.
    auto serialize_digraph(const Digraph & h, const std::string & name) -> std::string;

    /**
     * Comma separated. The first row is a corner cell followed by template
     * vertex ids, every later row an instance vertex id followed by one
     * rational per template vertex ("p/q", integer or decimal).
     */
    auto parse_costs(std::string_view text, const Digraph & g, const Digraph & h) -> CostMatrix;

    auto serialize_costs(const CostMatrix & costs, const Digraph & g, const Digraph & h) -> std::string;

    /**
     *   graph <name>
     *   U: <id> ...
     *   V: <id> ...
     *   W: <id> ...
     *   edges: <id>-<id> ...        (may repeat)
     */
    auto parse_three_coloured(std::string_view text) -> ThreeColouredGraph;

    auto serialize_three_coloured(const ThreeColouredGraph & x, const std::string & name) -> std::string;

    /// Reads a whole file; throws Error if it cannot be opened.
    auto read_file(const std::filesystem::path & path) -> std::string;

    auto write_file(const std::filesystem::path & path, const std::string & content) -> void;

    /// member<k>.digraph per member plus index.txt and catalog.txt. Returns the files written.
    auto write_catalog(const ObstructionCatalog & catalog, const std::filesystem::path & dir) -> std::vector<std::filesystem::path>;

    /// instance.digraph, template.digraph, costs.csv, provenance.txt, budget.txt.
    auto write_gadget(const GadgetInstance & g, const ThreeColouredGraph & x, const std::string & template_name,
            const std::filesystem::path & dir) -> std::vector<std::filesystem::path>;

    auto provenance_text(const GadgetInstance & g, const ThreeColouredGraph & x) -> std::string;

    /// Graphviz text; highlighted vertices are drawn filled.
    auto to_dot(const Digraph & h, const std::string & name, const std::vector<Vertex> & highlighted = { }) -> std::string;

    auto to_dot(const BipartiteGraph & b, const std::string & name,
            const std::vector<Vertex> & white_highlighted = { }, const std::vector<Vertex> & black_highlighted = { }) -> std::string;
}

#endif
