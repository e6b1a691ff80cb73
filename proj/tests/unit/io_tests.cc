/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minhom/errors.hh>
#include <minhom/hardness.hh>
#include <minhom/io.hh>
#include <minhom/recognition.hh>

#include "../support.hh"

#include <doctest.h>

#include <filesystem>

using namespace minhom;
using std::string;
using std::vector;

namespace
{
    auto parse_error(std::string_view text) -> std::optional<ParseError>
    {
        try {
            parse_digraph(text);
        }
        catch (const ParseError & e) {
            return e;
        }
        return std::nullopt;
    }
}

TEST_CASE("parse_digraph examples")
{
    auto f = parse_digraph("digraph h\nvertices: a b\narcs: a->a b->b a->b");
    CHECK(f.name == "h");
    CHECK(f.graph.size() == 2);
    CHECK(f.graph.arc_count() == 3);
    CHECK(f.graph.has_arc(0, 1));

    auto e = parse_error("digraph h\nvertices: a b\narcs: a->c");
    REQUIRE(e);
    CHECK(string(e->what()).find("unknown vertex") != string::npos);
    CHECK(e->line() == 3);
    CHECK(e->column() == 10);

    auto dup = parse_error("digraph h\nvertices: a a");
    REQUIRE(dup);
    CHECK(string(dup->what()).find("duplicate vertex id") != string::npos);
    CHECK(dup->column() == 13);

    CHECK(parse_error("digraph h\nvertices: a b\narcs: a->b a->b"));
    CHECK(parse_error("digraph h\nvertices: a\nedges: a-a"));
    CHECK(parse_error("vertices: a"));
    CHECK(parse_error("digraph h\narcs: a->a"));
    CHECK(parse_error("digraph h\nvertices: a b\narcs: ab"));
}

TEST_CASE("parse_digraph comments and the reflexive flag")
{
    auto f = parse_digraph("# a comment\ndigraph t   # trailing\nvertices: x y z\narcs: x->y\narcs: y->z\nreflexive\n");
    CHECK(f.graph.size() == 3);
    CHECK(f.graph.is_reflexive());
    CHECK(f.graph.arc_count() == 5);

    // An explicit loop plus the flag is not a duplicate.
    CHECK(parse_digraph("digraph t\nvertices: x\narcs: x->x\nreflexive").graph.arc_count() == 1);
}

TEST_CASE("digraph round trips")
{
    for (auto & m : default_catalog().members) {
        auto text = serialize_digraph(m.graph, "member");
        auto back = parse_digraph(text);
        CHECK(back.graph == m.graph);
        CHECK(back.name == "member");
        CHECK(serialize_digraph(back.graph, back.name) == text);
    }

    std::mt19937 rng(83);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        auto h = test::random_digraph(rng, int(rng() % 8), rng() % 2);
        CHECK(parse_digraph(serialize_digraph(h, "r")).graph == h);
    }
}

TEST_CASE("parse_costs examples")
{
    auto g = Digraph::from_names({ "u" }, { });
    auto h = Digraph::from_names({ "a" }, { { "a", "a" } });
    CHECK(parse_costs("cost,a\nu,5\n", g, h).at(0, 0) == Rational(5));
    CHECK(parse_costs("cost,a\nu,1/3\n", g, h).at(0, 0) == Rational(1, 3));
    CHECK(parse_costs("cost,a\nu,0.25\n", g, h).at(0, 0) == Rational(1, 4));

    auto h2 = Digraph::from_names({ "a", "b" }, { { "a", "a" }, { "b", "b" } });
    auto check_message = [&] (const string & text, const string & fragment) {
        try {
            parse_costs(text, g, h2);
            FAIL("no error for " << text);
        }
        catch (const ParseError & e) {
            CHECK(string(e.what()).find(fragment) != string::npos);
        }
    };
    check_message("cost,a\nu,1\n", "dimension mismatch");
    check_message("cost,a,b\nu,1\n", "missing cell");
    check_message("cost,a,b\nu,1,x\n", "malformed rational");
    check_message("cost,a,b\nu,1,1/0\n", "malformed rational");
    check_message("cost,a,b\n", "dimension mismatch");
    check_message("cost,a,c\nu,1,2\n", "dimension mismatch");
}

TEST_CASE("cost round trips")
{
    std::mt19937 rng(89);
    auto g = test::random_digraph(rng, 4, false);
    auto h = test::random_digraph(rng, 3, true);
    CostMatrix c(4, 3);
    for (int u = 0 ; u < 4 ; ++u)
        for (int i = 0 ; i < 3 ; ++i)
            c.set(u, i, Rational(long(rng() % 19) - 9, 1 + long(rng() % 5)));
    CHECK(parse_costs(serialize_costs(c, g, h), g, h) == c);
}

TEST_CASE("three-coloured round trips")
{
    std::mt19937 rng(97);
    for (int trial = 0 ; trial < 30 ; ++trial) {
        auto x = test::random_three_coloured(rng, int(rng() % 8));
        auto back = parse_three_coloured(serialize_three_coloured(x, "x"));
        REQUIRE(back.size() == x.size());
        CHECK(back.graph().edge_count() == x.graph().edge_count());
        // Vertices come back grouped by class, so compare through the names.
        for (int v = 0 ; v < x.size() ; ++v) {
            auto bv = back.graph().find(x.graph().name(v));
            REQUIRE(bv);
            CHECK(back.colour(*bv) == x.colour(v));
            for (int w = 0 ; w < x.size() ; ++w)
                CHECK(back.graph().has_edge(*bv, *back.graph().find(x.graph().name(w))) == x.graph().has_edge(v, w));
        }
        auto text = serialize_three_coloured(back, "x");
        CHECK(serialize_three_coloured(parse_three_coloured(text), "x") == text);
    }

    CHECK_THROWS_AS(parse_three_coloured("graph x\nU: a b\nV:\nW:\nedges: a-b"), ParseError);
    CHECK_THROWS_AS(parse_three_coloured("graph x\nU: a\nV: b\nW:\nedges: a-c"), ParseError);
}

TEST_CASE("catalog and gadget directories")
{
    auto dir = std::filesystem::temp_directory_path() / "minhom-io-tests";
    std::filesystem::remove_all(dir);

    auto files = write_catalog(labeled_catalog(), dir / "catalog");
    CHECK(files.size() == labeled_catalog().members.size() + 2);
    for (std::size_t m = 0 ; m < labeled_catalog().members.size() ; ++m) {
        auto back = parse_digraph(read_file(dir / "catalog" / ("member" + std::to_string(m) + ".digraph")));
        CHECK(back.graph == labeled_catalog().members[m].graph);
    }
    CHECK(read_file(dir / "catalog" / "catalog.txt") == serialize_catalog(labeled_catalog()));

    auto x = ThreeColouredGraph(UndirectedGraph::with_size(2, { { 0, 1 } }), { ColourClass::U, ColourClass::W });
    auto g = gadget(4, x, 1);
    auto written = write_gadget(g, x, "H4", dir / "gadget");
    CHECK(written.size() == 5);
    auto instance = parse_digraph(read_file(dir / "gadget" / "instance.digraph")).graph;
    auto templ = parse_digraph(read_file(dir / "gadget" / "template.digraph")).graph;
    CHECK(instance == g.instance);
    CHECK(templ == g.template_graph);
    CHECK(parse_costs(read_file(dir / "gadget" / "costs.csv"), instance, templ) == g.costs);
    CHECK(read_file(dir / "gadget" / "provenance.txt").find("m_uw") != string::npos);

    CHECK_THROWS_AS(read_file(dir / "does-not-exist"), Error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("dot export")
{
    auto h = Digraph::from_names({ "a", "b" }, { { "a", "b" } });
    auto dot = to_dot(h, "h", { 1 });
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("\"a\" -> \"b\"") != string::npos);
    CHECK(to_dot(bipartite_double(h), "b").find("graph") != string::npos);
}
