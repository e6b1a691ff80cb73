/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minhom/errors.hh>
#include <minhom/oracle.hh>
#include <minhom/ordering.hh>
#include <minhom/recognition.hh>

#include "../support.hh"

#include <doctest.h>

using namespace minhom;
using std::vector;

namespace
{
    auto reflexive_path(int n) -> UndirectedGraph
    {
        vector<Edge> edges;
        for (int v = 0 ; v < n ; ++v) {
            edges.push_back(Edge{ v, v });
            if (v + 1 < n)
                edges.push_back(Edge{ v, v + 1 });
        }
        return UndirectedGraph::with_size(n, edges);
    }

    auto expect_s_certificate(const UndirectedGraph & g, const std::string & pattern) -> void
    {
        auto verdict = is_proper_interval(g);
        REQUIRE(! verdict.yes());
        REQUIRE(verdict.certificate);
        CHECK(verdict.certificate->pattern == pattern);
        CHECK(is_induced_embedding(proper_interval_pattern(pattern), g, verdict.certificate->embedding));
    }

    auto tag(const DichotomyVerdict & v) -> bool
    {
        return std::holds_alternative<Polynomial>(v);
    }
}

TEST_CASE("pattern shapes")
{
    CHECK(claw().edge_count() == 4 + 3);
    CHECK(net().edge_count() == 6 + 6);
    CHECK(tent().edge_count() == 6 + 9);
    CHECK(reflexive_cycle(5).edge_count() == 10);
    CHECK(bipartite_cycle(3).edge_count() == 6);
    CHECK(biclaw().edge_count() == 6);
    CHECK(binet().edge_count() == 7);
    CHECK(bitent().edge_count() == 8);
    CHECK(biclaw().white_size() + biclaw().black_size() == 7);
    CHECK(proper_interval_pattern("C7") == reflexive_cycle(7));
    CHECK(proper_interval_bigraph_pattern("binet", true) == binet().swap_colours());
    CHECK_THROWS_AS(proper_interval_pattern("C3"), PreconditionError);
    CHECK_THROWS_AS(proper_interval_pattern("kite"), PreconditionError);
    CHECK_THROWS_AS(proper_interval_bigraph_pattern("C5", false), PreconditionError);

    auto names = [] (const vector<NamedGraph> & v) {
        vector<std::string> r;
        for (auto & n : v)
            r.push_back(n.name);
        return r;
    };
    CHECK(names(proper_interval_obstructions(6)) == vector<std::string>{ "C4", "claw", "C5", "C6", "net", "tent" });
    CHECK(proper_interval_bigraph_obstructions(8).size() == 1 + 6 + 1);
}

TEST_CASE("is_proper_interval examples")
{
    auto p4 = is_proper_interval(reflexive_path(4));
    REQUIRE(p4.yes());
    CHECK(is_min_max(as_symmetric_digraph(reflexive_path(4)), *p4.ordering));

    expect_s_certificate(reflexive_cycle(4), "C4");
    expect_s_certificate(net(), "net");
    expect_s_certificate(claw(), "claw");
    expect_s_certificate(tent(), "tent");
    expect_s_certificate(reflexive_cycle(6), "C6");

    CHECK_THROWS_AS(is_proper_interval(UndirectedGraph::with_size(2, { { 0, 1 } })), PreconditionError);
}

TEST_CASE("is_proper_interval on random reflexive graphs")
{
    std::mt19937 rng(61);
    for (int trial = 0 ; trial < 200 ; ++trial) {
        int n = 1 + int(rng() % 7);
        vector<Edge> edges;
        for (int a = 0 ; a < n ; ++a) {
            edges.push_back(Edge{ a, a });
            for (int b = a + 1 ; b < n ; ++b)
                if (rng() % 100 < 45)
                    edges.push_back(Edge{ a, b });
        }
        auto g = UndirectedGraph::with_size(n, edges);
        auto v = is_proper_interval(g);
        CHECK(v.yes() == test::plain_has_min_max(as_symmetric_digraph(g)));
        if (v.yes())
            CHECK(is_min_max(as_symmetric_digraph(g), *v.ordering));
        else {
            REQUIRE(v.certificate);
            CHECK(is_induced_embedding(proper_interval_pattern(v.certificate->pattern), g, v.certificate->embedding));
        }
    }
}

TEST_CASE("is_proper_interval_bigraph examples")
{
    auto c6 = is_proper_interval_bigraph(bipartite_cycle(3));
    REQUIRE(! c6.yes());
    CHECK(c6.certificate->pattern == "C6");

    CHECK(is_proper_interval_bigraph(BipartiteGraph::with_size(1, 1, { { 0, 0 } })).yes());
    auto c4 = is_proper_interval_bigraph(bipartite_cycle(2));
    REQUIRE(c4.yes());
    CHECK(is_bipartite_min_max(bipartite_cycle(2), *c4.ordering));

    for (auto & [name, pattern] : vector<std::pair<std::string, BipartiteGraph> >{
            { "biclaw", biclaw() }, { "binet", binet() }, { "bitent", bitent() } })
        for (bool swapped : { false, true }) {
            auto g = swapped ? pattern.swap_colours() : pattern;
            auto v = is_proper_interval_bigraph(g);
            REQUIRE(! v.yes());
            CHECK(v.certificate->pattern == name);
            CHECK(v.certificate->swapped == swapped);
            CHECK(is_induced_embedding(proper_interval_bigraph_pattern(name, swapped), g, v.certificate->embedding));
        }
}

TEST_CASE("derive_obstruction_catalog examples")
{
    CHECK(derive_obstruction_catalog(2).members.empty());
    CHECK(derive_obstruction_catalog(2).class_count == 0);

    auto three = derive_obstruction_catalog(3);
    CHECK(three.class_count == 1);
    for (auto & m : three.members)
        CHECK(m.graph.size() == 3);

    auto & four = default_catalog();
    CHECK(four.class_count == 6);
    int on_three = 0, on_four = 0;
    for (int c = 0 ; c < four.class_count ; ++c)
        (four.members[four.class_members(c).front()].graph.size() == 3 ? on_three : on_four)++;
    CHECK(on_three == 1);
    CHECK(on_four == 5);

    CHECK_THROWS_AS(derive_obstruction_catalog(0), PreconditionError);
    CHECK_THROWS_AS(derive_obstruction_catalog(6), PreconditionError);
}

TEST_CASE("catalog members are minimal obstructions")
{
    auto & catalog = default_catalog();
    for (int i = 0 ; i < int(catalog.members.size()) ; ++i) {
        auto & m = catalog.members[i];
        CHECK(m.graph.is_reflexive());
        CHECK(! test::plain_has_min_max(m.graph));
        CHECK(is_proper_interval(symmetric_subgraph(m.graph)).yes());
        CHECK(is_proper_interval_bigraph(bipartite_double(m.graph)).yes());
        for (int v = 0 ; v < m.graph.size() ; ++v) {
            vector<Vertex> keep;
            for (int w = 0 ; w < m.graph.size() ; ++w)
                if (w != v)
                    keep.push_back(w);
            CHECK(test::plain_has_min_max(induced_subgraph(m.graph, keep)));
        }
        CHECK(test::plain_isomorphic(converse(m.graph), catalog.members[m.converse].graph));
        CHECK(catalog.members[m.converse].converse_class == m.converse_class);
    }
}

TEST_CASE("catalog serialization is stable")
{
    auto a = serialize_catalog(derive_obstruction_catalog(4, 1));
    auto b = serialize_catalog(derive_obstruction_catalog(4, 4));
    auto c = serialize_catalog(derive_obstruction_catalog(4, 1));
    CHECK(a == b);
    CHECK(a == c);
    CHECK(! a.empty());
}

TEST_CASE("classify examples")
{
    vector<Arc> c4;
    for (int v = 0 ; v < 4 ; ++v) {
        c4.push_back(Arc{ v, v });
        c4.push_back(Arc{ v, (v + 1) % 4 });
        c4.push_back(Arc{ (v + 1) % 4, v });
    }
    auto h = Digraph::with_size(4, c4);
    auto verdict = classify(h);
    REQUIRE(std::holds_alternative<NPComplete>(verdict));
    auto & cert = std::get<NPComplete>(verdict).certificate;
    REQUIRE(std::holds_alternative<SCertificate>(cert));
    CHECK(std::get<SCertificate>(cert).pattern == "C4");
    CHECK(certificate_is_valid(h, cert, default_catalog()));
    CHECK(describe(h, cert, default_catalog()).rfind("induced C4 in S(H): ", 0) == 0);

    auto single = classify(Digraph::with_size(1, { { 0, 0 } }));
    REQUIRE(std::holds_alternative<Polynomial>(single));
    CHECK(std::get<Polynomial>(single).ordering.size() == 1);

    auto tt = Digraph::with_size(3, { { 0, 0 }, { 1, 1 }, { 2, 2 }, { 0, 1 }, { 0, 2 }, { 1, 2 } });
    auto tv = classify(tt);
    REQUIRE(std::holds_alternative<Polynomial>(tv));
    CHECK(std::get<Polynomial>(tv).ordering.sequence() == vector<Vertex>{ 0, 1, 2 });

    CHECK_THROWS_AS(classify(Digraph::with_size(2, { { 0, 1 } })), PreconditionError);
}

TEST_CASE("catalog members classify as NP-complete with themselves as certificate")
{
    auto & catalog = default_catalog();
    for (int i = 0 ; i < int(catalog.members.size()) ; ++i) {
        auto & h = catalog.members[i].graph;
        auto v = classify(h);
        REQUIRE(std::holds_alternative<NPComplete>(v));
        auto & cert = std::get<NPComplete>(v).certificate;
        REQUIRE(std::holds_alternative<HCertificate>(cert));
        CHECK(std::get<HCertificate>(cert).member == i);
        CHECK(certificate_is_valid(h, cert, catalog));
    }
}

TEST_CASE("classify matches brute force on every reflexive digraph up to four vertices")
{
    for (int n = 1 ; n <= 4 ; ++n)
        for (auto & h : enumerate_reflexive_digraphs(n)) {
            auto v = classify(h);
            CHECK(tag(v) == test::plain_has_min_max(h));
            CHECK(tag(v) == tag(classify(converse(h))));
            if (auto p = std::get_if<Polynomial>(&v))
                CHECK(test::plain_min_max(h, p->ordering.sequence()));
            else
                CHECK(certificate_is_valid(h, std::get<NPComplete>(v).certificate, default_catalog()));
        }
}

TEST_CASE("classify matches brute force on random five-vertex digraphs")
{
    std::mt19937 rng(67);
    int polynomial = 0;
    for (int trial = 0 ; trial < 500 ; ++trial) {
        auto h = test::random_digraph(rng, 5, true, 15 + unsigned(rng() % 60));
        auto v = classify(h);
        bool has = find_min_max_bruteforce(h).has_value();
        CHECK(tag(v) == has);
        CHECK(tag(v) == tag(classify(converse(h))));
        if (auto p = std::get_if<Polynomial>(&v)) {
            ++polynomial;
            CHECK(is_min_max(h, p->ordering));
        }
        else
            CHECK(certificate_is_valid(h, std::get<NPComplete>(v).certificate, default_catalog()));
    }
    CHECK(polynomial > 0);
    CHECK(polynomial < 500);
}

TEST_CASE("first_failed_condition follows the order of the conditions")
{
    // Symmetric C4 breaks S(H) first; a catalog member only breaks the last condition.
    auto & catalog = default_catalog();
    auto m = catalog.members.front().graph;
    auto c = first_failed_condition(m, catalog);
    REQUIRE(c);
    CHECK(std::holds_alternative<HCertificate>(*c));
    CHECK(! first_failed_condition(Digraph::with_size(2, { { 0, 0 }, { 1, 1 } }), catalog));
}
