/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minhom/recognition.hh>
#include <minhom/errors.hh>
#include <minhom/io.hh>
#include <minhom/oracle.hh>

#include "parallel.hh"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

using std::map;
using std::optional;
using std::pair;
using std::string;
using std::to_string;
using std::vector;

namespace minhom
{
    namespace
    {
        auto reflexive(int n, vector<Edge> edges) -> UndirectedGraph
        {
            for (int v = 0 ; v < n ; ++v)
                edges.push_back(Edge{ v, v });
            return UndirectedGraph::with_size(n, edges);
        }

        auto parse_cycle_length(const string & name) -> optional<int>
        {
            if (name.size() < 2 || name[0] != 'C')
                return std::nullopt;
            int k = 0;
            for (auto c : name.substr(1)) {
                if (c < '0' || c > '9' || k > 1000)
                    return std::nullopt;
                k = 10 * k + (c - '0');
            }
            return k;
        }

        /// Decide S(H) without building a certificate.
        auto symmetric_part_ok(const Digraph & h, const SearchLimits & limits) -> bool
        {
            return find_min_max_bruteforce(as_symmetric_digraph(symmetric_subgraph(h)), limits).has_value();
        }
    }

    auto claw() -> UndirectedGraph
    {
        return reflexive(4, { { 0, 1 }, { 0, 2 }, { 0, 3 } });
    }

    auto net() -> UndirectedGraph
    {
        return reflexive(6, { { 0, 1 }, { 1, 2 }, { 0, 2 }, { 0, 3 }, { 1, 4 }, { 2, 5 } });
    }

    auto tent() -> UndirectedGraph
    {
        return reflexive(6, { { 0, 1 }, { 1, 2 }, { 0, 2 }, { 0, 3 }, { 1, 3 }, { 1, 4 }, { 2, 4 }, { 0, 5 }, { 2, 5 } });
    }

    auto reflexive_cycle(int k) -> UndirectedGraph
    {
        if (k < 3)
            throw PreconditionError("a cycle needs at least three vertices");
        vector<Edge> edges;
        for (int i = 0 ; i < k ; ++i)
            edges.push_back(Edge{ std::min(i, (i + 1) % k), std::max(i, (i + 1) % k) });
        return reflexive(k, edges);
    }

    auto bipartite_cycle(int k) -> BipartiteGraph
    {
        if (k < 2)
            throw PreconditionError("a bipartite cycle needs at least two vertices of each colour");
        vector<pair<Vertex, Vertex> > edges;
        for (int i = 0 ; i < k ; ++i) {
            edges.emplace_back(i, i);
            edges.emplace_back(i, (i + k - 1) % k);
        }
        return BipartiteGraph::with_size(k, k, edges);
    }

    auto biclaw() -> BipartiteGraph
    {
        return BipartiteGraph::with_size(3, 4, { { 0, 0 }, { 0, 3 }, { 1, 0 }, { 1, 2 }, { 2, 0 }, { 2, 1 } });
    }

    auto binet() -> BipartiteGraph
    {
        // w0 b0 w1 b1 is the four-cycle; b3, b2 and w2 hang off w0, w1 and b0.
        return BipartiteGraph::with_size(3, 4, { { 0, 0 }, { 0, 1 }, { 0, 3 }, { 1, 0 }, { 1, 1 }, { 1, 2 }, { 2, 0 } });
    }

    auto bitent() -> BipartiteGraph
    {
        return BipartiteGraph::with_size(3, 4, { { 0, 0 }, { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 0 }, { 1, 2 }, { 2, 0 }, { 2, 1 } });
    }

    auto proper_interval_pattern(const string & name) -> UndirectedGraph
    {
        if (name == "claw")
            return claw();
        if (name == "net")
            return net();
        if (name == "tent")
            return tent();
        if (auto k = parse_cycle_length(name) ; k && *k >= 4)
            return reflexive_cycle(*k);
        throw PreconditionError("unknown proper interval obstruction '" + name + "'");
    }

    auto proper_interval_bigraph_pattern(const string & name, bool swapped) -> BipartiteGraph
    {
        BipartiteGraph result;
        if (name == "biclaw")
            result = biclaw();
        else if (name == "binet")
            result = binet();
        else if (name == "bitent")
            result = bitent();
        else if (auto k = parse_cycle_length(name) ; k && *k >= 6 && *k % 2 == 0)
            result = bipartite_cycle(*k / 2);
        else
            throw PreconditionError("unknown proper interval bigraph obstruction '" + name + "'");
        return swapped ? result.swap_colours() : result;
    }

    auto proper_interval_obstructions(int max_size) -> vector<NamedGraph>
    {
        vector<NamedGraph> result;
        for (int n = 4 ; n <= max_size ; ++n) {
            // Within one size, names sort as C<n>, claw, net, tent.
            result.push_back(NamedGraph{ "C" + to_string(n), reflexive_cycle(n) });
            if (n == 4)
                result.push_back(NamedGraph{ "claw", claw() });
            if (n == 6) {
                result.push_back(NamedGraph{ "net", net() });
                result.push_back(NamedGraph{ "tent", tent() });
            }
        }
        return result;
    }

    auto proper_interval_bigraph_obstructions(int max_size) -> vector<NamedBigraph>
    {
        vector<NamedBigraph> result;
        for (int n = 6 ; n <= max_size ; ++n) {
            if (n % 2 == 0)
                result.push_back(NamedBigraph{ "C" + to_string(n), false, bipartite_cycle(n / 2) });
            if (n == 7)
                for (auto & name : { "biclaw", "binet", "bitent" })
                    for (bool swapped : { false, true })
                        result.push_back(NamedBigraph{ name, swapped, proper_interval_bigraph_pattern(name, swapped) });
        }
        return result;
    }

    auto is_proper_interval(const UndirectedGraph & g, const SearchLimits & limits) -> ProperIntervalVerdict
    {
        if (! g.is_reflexive())
            throw PreconditionError("proper interval recognition needs a reflexive graph");

        if (auto order = find_min_max_bruteforce(as_symmetric_digraph(g), limits))
            return ProperIntervalVerdict{ order, std::nullopt };

        for (auto & [name, pattern] : proper_interval_obstructions(g.size()))
            if (auto e = find_induced(pattern, g))
                return ProperIntervalVerdict{ std::nullopt, SCertificate{ name, *e } };

        throw InternalError("graph has no Min-Max ordering but contains none of the forbidden subgraphs");
    }

    auto is_proper_interval_bigraph(const BipartiteGraph & b, const SearchLimits & limits) -> ProperIntervalBigraphVerdict
    {
        if (auto order = find_bipartite_min_max(b, limits))
            return ProperIntervalBigraphVerdict{ order, std::nullopt };

        for (auto & [name, swapped, pattern] : proper_interval_bigraph_obstructions(b.white_size() + b.black_size()))
            if (auto e = find_induced(pattern, b))
                return ProperIntervalBigraphVerdict{ std::nullopt, BCertificate{ name, swapped, *e } };

        throw InternalError("bigraph has no bipartite Min-Max ordering but contains none of the forbidden subgraphs");
    }

    auto ObstructionCatalog::class_members(int c) const -> vector<int>
    {
        vector<int> result;
        for (int m = 0 ; m < int(members.size()) ; ++m)
            if (members[m].converse_class == c)
                result.push_back(m);
        return result;
    }

    auto ObstructionCatalog::without_class(int c) const -> ObstructionCatalog
    {
        ObstructionCatalog result;
        result.max_size = max_size;

        vector<int> new_index(members.size(), -1);
        for (int m = 0 ; m < int(members.size()) ; ++m)
            if (members[m].converse_class != c) {
                new_index[m] = int(result.members.size());
                result.members.push_back(members[m]);
            }

        for (auto & m : result.members) {
            m.converse = new_index[m.converse];
            if (m.converse_class > c)
                --m.converse_class;
        }
        result.class_count = class_count - (c >= 0 && c < class_count ? 1 : 0);
        return result;
    }

    auto ObstructionCatalog::member_name(int m) const -> string
    {
        auto & member = members.at(m);
        if (member.obstruction_index)
            return "H" + to_string(*member.obstruction_index);

        auto & partner = members.at(member.converse);
        if (partner.obstruction_index)
            return "H" + to_string(*partner.obstruction_index) + "^c";

        auto name = "O" + to_string(member.converse_class + 1);
        return member.converse < m ? name + "^c" : name;
    }

    auto derive_obstruction_catalog(int max_size, int threads) -> ObstructionCatalog
    {
        if (max_size < 1 || max_size > 5)
            throw PreconditionError("catalog size must be between 1 and 5");

        ObstructionCatalog catalog;
        catalog.max_size = max_size;

        for (int n = 1 ; n <= max_size ; ++n) {
            auto candidates = enumerate_reflexive_digraphs(n, threads);
            vector<char> keep(candidates.size(), 0);

            parallel_for(long(candidates.size()), threads, [&] (long i) {
                auto & h = candidates[i];
                if (find_min_max_bruteforce(h))
                    return;
                if (! symmetric_part_ok(h, { }) || ! find_bipartite_min_max(bipartite_double(h)))
                    return;

                // Having a Min-Max ordering is inherited by induced subgraphs, so
                // checking the one-vertex deletions is enough for minimality.
                for (Vertex drop = 0 ; drop < n ; ++drop) {
                    vector<Vertex> rest;
                    for (Vertex v = 0 ; v < n ; ++v)
                        if (v != drop)
                            rest.push_back(v);
                    if (! find_min_max_bruteforce(induced_subgraph(h, rest)))
                        return;
                }
                keep[i] = 1;
            });

            for (std::size_t i = 0 ; i < candidates.size() ; ++i)
                if (keep[i])
                    catalog.members.push_back(CatalogMember{ candidates[i], canonical_code(candidates[i]), -1, -1, std::nullopt, { } });
        }

        map<pair<int, std::uint64_t>, int> by_code;
        for (int m = 0 ; m < int(catalog.members.size()) ; ++m)
            by_code.emplace(pair{ catalog.members[m].graph.size(), catalog.members[m].code }, m);

        for (int m = 0 ; m < int(catalog.members.size()) ; ++m) {
            auto & member = catalog.members[m];
            auto c = by_code.find(pair{ member.graph.size(), canonical_code(converse(member.graph)) });
            if (c == by_code.end())
                throw InternalError("the converse of a minimal obstruction is missing from the catalog");
            member.converse = c->second;
            if (member.converse < m)
                member.converse_class = catalog.members[member.converse].converse_class;
            else
                member.converse_class = catalog.class_count++;
        }

        return catalog;
    }

    auto default_catalog() -> const ObstructionCatalog &
    {
        static const ObstructionCatalog catalog = derive_obstruction_catalog(4);
        return catalog;
    }

    auto serialize_catalog(const ObstructionCatalog & catalog) -> string
    {
        std::ostringstream out;
        out << "catalog max_size=" << catalog.max_size << " members=" << catalog.members.size()
            << " classes=" << catalog.class_count << "\n";
        for (int m = 0 ; m < int(catalog.members.size()) ; ++m) {
            auto & member = catalog.members[m];
            out << "member " << m << " name=" << catalog.member_name(m) << " vertices=" << member.graph.size()
                << " code=" << member.code << " class=" << member.converse_class << " converse=" << member.converse;
            if (! member.labels.empty()) {
                out << " labels=";
                for (std::size_t x = 0 ; x < member.labels.size() ; ++x)
                    out << (x ? "," : "") << "x" << x + 1 << ":" << member.graph.name(member.labels[x]);
            }
            out << "\n" << serialize_digraph(member.graph, catalog.member_name(m));
        }
        return out.str();
    }

    namespace
    {
        struct ConditionResult
        {
            optional<Certificate> certificate;
            optional<BipartiteOrdering> bipartite_order;
        };

        auto check_conditions(const Digraph & h, const ObstructionCatalog & catalog, const SearchLimits & limits) -> ConditionResult
        {
            auto s = is_proper_interval(symmetric_subgraph(h), limits);
            if (! s.yes())
                return ConditionResult{ Certificate{ *s.certificate }, std::nullopt };

            auto b = is_proper_interval_bigraph(bipartite_double(h), limits);
            if (! b.yes())
                return ConditionResult{ Certificate{ *b.certificate }, std::nullopt };

            for (int m = 0 ; m < int(catalog.members.size()) ; ++m)
                if (auto e = find_induced(catalog.members[m].graph, h))
                    return ConditionResult{ Certificate{ HCertificate{ m, *e } }, std::nullopt };

            return ConditionResult{ std::nullopt, b.ordering };
        }
    }

    auto first_failed_condition(const Digraph & h, const ObstructionCatalog & catalog,
            const SearchLimits & limits) -> optional<Certificate>
    {
        return check_conditions(h, catalog, limits).certificate;
    }

    auto classify(const Digraph & h, const ObstructionCatalog & catalog, const SearchLimits & limits) -> DichotomyVerdict
    {
        if (! h.is_reflexive())
            throw PreconditionError("classification needs a reflexive template");

        auto conditions = check_conditions(h, catalog, limits);
        if (conditions.certificate)
            return NPComplete{ *conditions.certificate };

        auto outcome = exchange_construct(h, *conditions.bipartite_order);
        if (auto success = std::get_if<ExchangeSuccess>(&outcome))
            return Polynomial{ success->order };

        if (auto order = find_min_max_bruteforce(h, limits))
            return Polynomial{ *order };

        throw InternalError("template satisfies all three conditions but has no Min-Max ordering");
    }

    auto certificate_is_valid(const Digraph & h, const Certificate & c, const ObstructionCatalog & catalog) -> bool
    {
        try {
            if (auto s = std::get_if<SCertificate>(&c))
                return is_induced_embedding(proper_interval_pattern(s->pattern), symmetric_subgraph(h), s->embedding);
            if (auto b = std::get_if<BCertificate>(&c))
                return is_induced_embedding(proper_interval_bigraph_pattern(b->pattern, b->swapped),
                        bipartite_double(h), b->embedding);
            auto & hc = std::get<HCertificate>(c);
            if (hc.member < 0 || hc.member >= int(catalog.members.size()))
                return false;
            return is_induced_embedding(catalog.members[hc.member].graph, h, hc.embedding);
        }
        catch (const PreconditionError &) {
            return false;
        }
    }

    auto describe(const Digraph & h, const Certificate & c, const ObstructionCatalog & catalog) -> string
    {
        string result;
        if (auto s = std::get_if<SCertificate>(&c)) {
            result = "induced " + s->pattern + " in S(H):";
            for (auto v : s->embedding.image)
                result += " " + h.name(v);
        }
        else if (auto b = std::get_if<BCertificate>(&c)) {
            result = "induced " + b->pattern + (b->swapped ? " (colours swapped)" : "") + " in B(H):";
            for (auto v : b->embedding.white)
                result += " " + h.name(v) + "'";
            for (auto v : b->embedding.black)
                result += " " + h.name(v) + "''";
        }
        else {
            auto & hc = std::get<HCertificate>(c);
            result = "induced " + catalog.member_name(hc.member) + " in H:";
            for (auto v : hc.embedding.image)
                result += " " + h.name(v);
        }
        return result;
    }
}
