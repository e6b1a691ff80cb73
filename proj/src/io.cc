/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minhom/io.hh>
#include <minhom/errors.hh>
#include <minhom/hardness.hh>
#include <minhom/recognition.hh>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

using std::map;
using std::optional;
using std::set;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace fs = std::filesystem;

namespace minhom
{
    namespace
    {
        struct Token
        {
            string text;
            int column;
        };

        struct Line
        {
            int number;
            vector<Token> tokens;
        };

        auto is_space(char c) -> bool
        {
            return c == ' ' || c == '\t' || c == '\r';
        }

        /// Split into non-empty lines of whitespace separated tokens, dropping comments.
        auto tokenize(string_view text) -> vector<Line>
        {
            vector<Line> lines;
            int number = 0;
            std::size_t start = 0;
            while (start <= text.size()) {
                auto stop = text.find('\n', start);
                if (stop == string_view::npos)
                    stop = text.size();
                auto raw = text.substr(start, stop - start);
                ++number;
                if (auto hash = raw.find('#') ; hash != string_view::npos)
                    raw = raw.substr(0, hash);

                Line line{ number, { } };
                std::size_t i = 0;
                while (i < raw.size()) {
                    while (i < raw.size() && is_space(raw[i]))
                        ++i;
                    std::size_t j = i;
                    while (j < raw.size() && ! is_space(raw[j]))
                        ++j;
                    if (j > i)
                        line.tokens.push_back(Token{ string(raw.substr(i, j - i)), int(i) + 1 });
                    i = j;
                }
                if (! line.tokens.empty())
                    lines.push_back(std::move(line));
                start = stop + 1;
            }
            return lines;
        }

        auto fail(const string & message, const Line & line, int column) -> ParseError
        {
            return ParseError(message, line.number, column);
        }

        auto last_line(string_view text) -> int
        {
            return 1 + int(std::count(text.begin(), text.end(), '\n'));
        }

        /// Checks the name rules of Digraph without building one.
        auto check_name(const Token & t, const Line & line) -> void
        {
            try {
                Digraph probe(vector<string>{ t.text });
            }
            catch (const PreconditionError &) {
                throw fail("invalid vertex id '" + t.text + "'", line, t.column);
            }
        }

        struct VertexTable
        {
            vector<string> names;
            map<string, Vertex> index;
            bool declared = false;

            auto declare(const Line & line, std::size_t from) -> void
            {
                if (declared)
                    throw fail("vertices declared twice", line, line.tokens.front().column);
                declared = true;
                for (auto k = from ; k < line.tokens.size() ; ++k) {
                    auto & t = line.tokens[k];
                    check_name(t, line);
                    if (! index.emplace(t.text, Vertex(names.size())).second)
                        throw fail("duplicate vertex id '" + t.text + "'", line, t.column);
                    names.push_back(t.text);
                }
            }

            auto lookup(const string & name, const Line & line, int column) const -> Vertex
            {
                auto i = index.find(name);
                if (i == index.end())
                    throw fail("unknown vertex '" + name + "'", line, column);
                return i->second;
            }
        };

        auto require_header(const vector<Line> & lines, const string & keyword) -> string
        {
            if (lines.empty())
                throw ParseError("empty input, expected '" + keyword + " <name>'", 1, 1);
            auto & first = lines.front();
            if (first.tokens[0].text != keyword)
                throw fail("expected '" + keyword + " <name>'", first, first.tokens[0].column);
            if (first.tokens.size() != 2)
                throw fail("expected exactly one name after '" + keyword + "'", first,
                        first.tokens.size() > 2 ? first.tokens[2].column : first.tokens[0].column);
            return first.tokens[1].text;
        }

        /// Split "a->b" (or "a-b") at the separator, reporting errors at the token position.
        auto split_pair(const Token & t, const Line & line, const string & separator) -> std::pair<string, string>
        {
            auto at = t.text.find(separator);
            if (at == string::npos || at == 0 || at + separator.size() == t.text.size())
                throw fail("expected <id>" + separator + "<id>, found '" + t.text + "'", line, t.column);
            return { t.text.substr(0, at), t.text.substr(at + separator.size()) };
        }

        auto split_cells(string_view row) -> vector<string>
        {
            vector<string> cells;
            std::size_t start = 0;
            while (true) {
                auto comma = row.find(',', start);
                auto cell = row.substr(start, comma == string_view::npos ? string_view::npos : comma - start);
                while (! cell.empty() && is_space(cell.front()))
                    cell.remove_prefix(1);
                while (! cell.empty() && is_space(cell.back()))
                    cell.remove_suffix(1);
                cells.emplace_back(cell);
                if (comma == string_view::npos)
                    break;
                start = comma + 1;
            }
            return cells;
        }
    }

    auto parse_digraph(string_view text) -> DigraphFile
    {
        auto lines = tokenize(text);
        auto name = require_header(lines, "digraph");

        VertexTable vertices;
        vector<Arc> arcs;
        set<Arc> seen;
        bool reflexive = false;

        for (std::size_t l = 1 ; l < lines.size() ; ++l) {
            auto & line = lines[l];
            auto & key = line.tokens[0];
            if (key.text == "vertices:")
                vertices.declare(line, 1);
            else if (key.text == "arcs:") {
                if (! vertices.declared)
                    throw fail("arcs given before vertices", line, key.column);
                for (std::size_t k = 1 ; k < line.tokens.size() ; ++k) {
                    auto & t = line.tokens[k];
                    auto [from, to] = split_pair(t, line, "->");
                    Arc a{ vertices.lookup(from, line, t.column),
                        vertices.lookup(to, line, t.column + int(from.size()) + 2) };
                    if (! seen.insert(a).second)
                        throw fail("duplicate arc " + t.text, line, t.column);
                    arcs.push_back(a);
                }
            }
            else if (key.text == "reflexive") {
                if (line.tokens.size() != 1)
                    throw fail("unexpected text after 'reflexive'", line, line.tokens[1].column);
                reflexive = true;
            }
            else
                throw fail("unknown directive '" + key.text + "'", line, key.column);
        }

        if (! vertices.declared)
            throw ParseError("missing 'vertices:' line", last_line(text), 1);

        if (reflexive)
            for (Vertex v = 0 ; v < Vertex(vertices.names.size()) ; ++v)
                if (seen.insert(Arc{ v, v }).second)
                    arcs.push_back(Arc{ v, v });

        return DigraphFile{ name, Digraph(vertices.names, arcs) };
    }

    auto serialize_digraph(const Digraph & h, const string & name) -> string
    {
        string out = "digraph " + name + "\nvertices:";
        for (auto & n : h.names())
            out += " " + n;
        out += "\narcs:";
        for (auto & a : h.arcs())
            out += " " + h.name(a.from) + "->" + h.name(a.to);
        out += "\n";
        return out;
    }

    auto parse_costs(string_view text, const Digraph & g, const Digraph & h) -> CostMatrix
    {
        struct Row
        {
            int number;
            vector<string> cells;
        };

        vector<Row> rows;
        int number = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto stop = text.find('\n', start);
            if (stop == string_view::npos)
                stop = text.size();
            auto raw = text.substr(start, stop - start);
            ++number;
            if (auto hash = raw.find('#') ; hash != string_view::npos)
                raw = raw.substr(0, hash);
            if (raw.find_first_not_of(" \t\r") != string_view::npos)
                rows.push_back(Row{ number, split_cells(raw) });
            start = stop + 1;
        }

        if (rows.empty())
            throw ParseError("empty cost table", 1, 1);

        auto & header = rows.front();
        if (int(header.cells.size()) - 1 != h.size())
            throw ParseError("dimension mismatch: header names " + to_string(header.cells.size() - 1)
                    + " template vertices, template has " + to_string(h.size()), header.number, 1);

        vector<Vertex> column_vertex;
        set<Vertex> columns_seen;
        for (std::size_t c = 1 ; c < header.cells.size() ; ++c) {
            auto v = h.find(header.cells[c]);
            if (! v)
                throw ParseError("dimension mismatch: '" + header.cells[c] + "' is not a template vertex", header.number, int(c) + 1);
            if (! columns_seen.insert(*v).second)
                throw ParseError("template vertex '" + header.cells[c] + "' appears twice", header.number, int(c) + 1);
            column_vertex.push_back(*v);
        }

        CostMatrix costs(g.size(), h.size());
        vector<bool> row_seen(g.size(), false);
        for (std::size_t r = 1 ; r < rows.size() ; ++r) {
            auto & row = rows[r];
            auto u = g.find(row.cells[0]);
            if (! u)
                throw ParseError("dimension mismatch: '" + row.cells[0] + "' is not an instance vertex", row.number, 1);
            if (row_seen[*u])
                throw ParseError("instance vertex '" + row.cells[0] + "' appears twice", row.number, 1);
            row_seen[*u] = true;
            if (row.cells.size() < header.cells.size())
                throw ParseError("missing cell: row '" + row.cells[0] + "' has " + to_string(row.cells.size() - 1)
                        + " values, expected " + to_string(h.size()), row.number, int(row.cells.size()) + 1);
            if (row.cells.size() > header.cells.size())
                throw ParseError("row '" + row.cells[0] + "' has more values than template vertices", row.number, int(header.cells.size()) + 1);

            for (std::size_t c = 1 ; c < row.cells.size() ; ++c) {
                if (row.cells[c].empty())
                    throw ParseError("missing cell", row.number, int(c) + 1);
                try {
                    costs.set(*u, column_vertex[c - 1], Rational::parse(row.cells[c]));
                }
                catch (const ParseError &) {
                    throw;
                }
                catch (const Error & e) {
                    throw ParseError("malformed rational '" + row.cells[c] + "': " + e.what(), row.number, int(c) + 1);
                }
            }
        }

        for (Vertex u = 0 ; u < g.size() ; ++u)
            if (! row_seen[u])
                throw ParseError("dimension mismatch: no row for instance vertex '" + g.name(u) + "'", last_line(text), 1);

        return costs;
    }

    auto serialize_costs(const CostMatrix & costs, const Digraph & g, const Digraph & h) -> string
    {
        check_cost_shape(g, h, costs);
        string out = "cost";
        for (auto & n : h.names())
            out += "," + n;
        out += "\n";
        for (Vertex u = 0 ; u < g.size() ; ++u) {
            out += g.name(u);
            for (Vertex i = 0 ; i < h.size() ; ++i)
                out += "," + costs.at(u, i).to_string();
            out += "\n";
        }
        return out;
    }

    auto parse_three_coloured(string_view text) -> ThreeColouredGraph
    {
        auto lines = tokenize(text);
        require_header(lines, "graph");

        vector<string> names;
        map<string, Vertex> index;
        vector<ColourClass> colour;
        set<ColourClass> declared;
        vector<Edge> edges;
        set<Edge> seen;

        for (std::size_t l = 1 ; l < lines.size() ; ++l) {
            auto & line = lines[l];
            auto & key = line.tokens[0];
            optional<ColourClass> c;
            if (key.text == "U:")
                c = ColourClass::U;
            else if (key.text == "V:")
                c = ColourClass::V;
            else if (key.text == "W:")
                c = ColourClass::W;

            if (c) {
                if (! declared.insert(*c).second)
                    throw fail("class " + key.text + " declared twice", line, key.column);
                for (std::size_t k = 1 ; k < line.tokens.size() ; ++k) {
                    auto & t = line.tokens[k];
                    check_name(t, line);
                    if (! index.emplace(t.text, Vertex(names.size())).second)
                        throw fail("duplicate vertex id '" + t.text + "'", line, t.column);
                    names.push_back(t.text);
                    colour.push_back(*c);
                }
            }
            else if (key.text == "edges:") {
                for (std::size_t k = 1 ; k < line.tokens.size() ; ++k) {
                    auto & t = line.tokens[k];
                    auto [a, b] = split_pair(t, line, "-");
                    auto ia = index.find(a), ib = index.find(b);
                    if (ia == index.end())
                        throw fail("unknown vertex '" + a + "'", line, t.column);
                    if (ib == index.end())
                        throw fail("unknown vertex '" + b + "'", line, t.column + int(a.size()) + 1);
                    if (ia->second == ib->second)
                        throw fail("loop on " + a, line, t.column);
                    Edge e{ std::min(ia->second, ib->second), std::max(ia->second, ib->second) };
                    if (! seen.insert(e).second)
                        throw fail("duplicate edge " + t.text, line, t.column);
                    if (colour[e.first] == colour[e.second])
                        throw fail("edge " + t.text + " joins two vertices of class " + colour_class_name(colour[e.first]),
                                line, t.column);
                    edges.push_back(e);
                }
            }
            else
                throw fail("unknown directive '" + key.text + "'", line, key.column);
        }

        return ThreeColouredGraph(UndirectedGraph(names, edges), colour);
    }

    auto serialize_three_coloured(const ThreeColouredGraph & x, const string & name) -> string
    {
        string out = "graph " + name + "\n";
        for (auto c : { ColourClass::U, ColourClass::V, ColourClass::W }) {
            out += colour_class_name(c) + ":";
            for (Vertex v = 0 ; v < x.size() ; ++v)
                if (x.colour(v) == c)
                    out += " " + x.graph().name(v);
            out += "\n";
        }
        out += "edges:";
        for (auto & e : x.graph().edges())
            out += " " + x.graph().name(e.first) + "-" + x.graph().name(e.second);
        out += "\n";
        return out;
    }

    auto read_file(const fs::path & path) -> string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw Error("cannot open " + path.string());
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto write_file(const fs::path & path, const string & content) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! (out << content))
            throw Error("cannot write " + path.string());
    }

    auto write_catalog(const ObstructionCatalog & catalog, const fs::path & dir) -> vector<fs::path>
    {
        fs::create_directories(dir);
        vector<fs::path> written;

        int width = int(to_string(std::max<std::size_t>(catalog.members.size(), 1) - 1).size());
        string index;
        for (int m = 0 ; m < int(catalog.members.size()) ; ++m) {
            auto & member = catalog.members[m];
            std::ostringstream file;
            file << "member" << std::setw(width) << std::setfill('0') << m << ".digraph";
            auto path = dir / file.str();
            write_file(path, serialize_digraph(member.graph, "member" + to_string(m)));
            written.push_back(path);

            index += file.str() + " name=" + catalog.member_name(m) + " class=" + to_string(member.converse_class)
                + " converse=" + to_string(member.converse) + " code=" + to_string(member.code) + "\n";
        }

        write_file(dir / "index.txt", index);
        written.push_back(dir / "index.txt");
        write_file(dir / "catalog.txt", serialize_catalog(catalog));
        written.push_back(dir / "catalog.txt");
        return written;
    }

    auto provenance_text(const GadgetInstance & g, const ThreeColouredGraph & x) -> string
    {
        string out;
        for (Vertex v = 0 ; v < g.instance.size() ; ++v) {
            auto & p = g.provenance.at(v);
            out += g.instance.name(v);
            if (p.intermediate)
                out += " intermediate " + p.tag + " edge " + x.graph().name(p.source_edge.first) + "-"
                    + x.graph().name(p.source_edge.second) + "\n";
            else
                out += " original " + x.graph().name(p.original) + " class " + colour_class_name(x.colour(p.original)) + "\n";
        }
        return out;
    }

    auto write_gadget(const GadgetInstance & g, const ThreeColouredGraph & x, const string & template_name,
            const fs::path & dir) -> vector<fs::path>
    {
        fs::create_directories(dir);
        vector<std::pair<string, string> > files{
            { "instance.digraph", serialize_digraph(g.instance, "instance") },
            { "template.digraph", serialize_digraph(g.template_graph, template_name) },
            { "costs.csv", serialize_costs(g.costs, g.instance, g.template_graph) },
            { "provenance.txt", provenance_text(g, x) },
            { "budget.txt", "budget: " + g.budget.to_string() + "\n" }
        };

        vector<fs::path> written;
        for (auto & [file, content] : files) {
            write_file(dir / file, content);
            written.push_back(dir / file);
        }
        return written;
    }

    auto to_dot(const Digraph & h, const string & name, const vector<Vertex> & highlighted) -> string
    {
        set<Vertex> marked(highlighted.begin(), highlighted.end());
        string out = "digraph \"" + name + "\" {\n";
        for (Vertex v = 0 ; v < h.size() ; ++v)
            out += "  \"" + h.name(v) + "\"" + (marked.contains(v) ? " [style=filled, fillcolor=lightblue]" : "") + ";\n";
        for (auto & a : h.arcs())
            out += "  \"" + h.name(a.from) + "\" -> \"" + h.name(a.to) + "\";\n";
        out += "}\n";
        return out;
    }

    auto to_dot(const BipartiteGraph & b, const string & name,
            const vector<Vertex> & white_highlighted, const vector<Vertex> & black_highlighted) -> string
    {
        set<Vertex> white_marked(white_highlighted.begin(), white_highlighted.end());
        set<Vertex> black_marked(black_highlighted.begin(), black_highlighted.end());
        string out = "graph \"" + name + "\" {\n";
        for (Vertex w = 0 ; w < b.white_size() ; ++w)
            out += "  \"" + b.white_name(w) + "\" [shape=circle" + (white_marked.contains(w) ? ", style=filled, fillcolor=lightblue" : "") + "];\n";
        for (Vertex k = 0 ; k < b.black_size() ; ++k)
            out += "  \"" + b.black_name(k) + "\" [shape=box" + (black_marked.contains(k) ? ", style=filled, fillcolor=lightblue" : "") + "];\n";
        for (auto & [w, k] : b.edges())
            out += "  \"" + b.white_name(w) + "\" -- \"" + b.black_name(k) + "\";\n";
        out += "}\n";
        return out;
    }
}
