/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minhom/hardness.hh>
#include <minhom/errors.hh>

#include <algorithm>
#include <numeric>
#include <map>
#include <set>

using std::map;
using std::optional;
using std::pair;
using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace minhom
{
    namespace
    {
        constexpr Label x1 = 0, x2 = 1, x3 = 2, x4 = 3;

        constexpr auto U = ColourClass::U, V = ColourClass::V, W = ColourClass::W;

        auto end(ColourClass c) -> GadgetEnd
        {
            return GadgetEnd{ false, c };
        }

        const GadgetEnd mid{ true, ColourClass::U };

        auto direct(ColourClass from, ColourClass to, string note) -> EdgeRule
        {
            EdgeRule r;
            r.first = from;
            r.second = to;
            r.arcs = { { end(from), end(to) } };
            r.note = std::move(note);
            return r;
        }

        auto via(ColourClass first, ColourClass second, vector<pair<GadgetEnd, GadgetEnd> > arcs, string tag,
                ColourClass decided_by, Label if_in, Label if_out, vector<Label> penalised, string note) -> EdgeRule
        {
            EdgeRule r;
            r.first = first;
            r.second = second;
            r.arcs = std::move(arcs);
            r.intermediate_tag = std::move(tag);
            r.decided_by = decided_by;
            r.intermediate_if_in = if_in;
            r.intermediate_if_out = if_out;
            r.penalised = std::move(penalised);
            r.note = std::move(note);
            return r;
        }

        auto build_specs() -> vector<GadgetSpec>
        {
            vector<GadgetSpec> specs;

            // Every class defaults to x2; only membership in the set moves a vertex off it.
            specs.push_back(GadgetSpec{ 2, { ClassRule{ x1, x2 }, ClassRule{ x4, x2 }, ClassRule{ x3, x2 } }, {
                    direct(U, V, "U-V edge: arc from the U end to the V end"),
                    direct(U, W, "U-W edge: arc from the U end to the W end"),
                    direct(W, V, "W-V edge: arc from the W end to the V end")
                    } });

            specs.push_back(GadgetSpec{ 4, { ClassRule{ x3, x1 }, ClassRule{ x2, x3 }, ClassRule{ x4, x1 } }, {
                    direct(V, U, "U-V edge: a single arc, V end to U end"),
                    via(U, W, { { end(U), mid }, { mid, end(W) } }, "m_uw", U, x1, x2, { x3, x4 },
                            "U-W edge: two-step path from U through m to W; m follows u"),
                    via(V, W, { { end(V), mid }, { mid, end(W) } }, "m_vw", W, x3, x1, { x2, x4 },
                            "V-W edge: two-step path from V through m to W; m follows w")
                    } });

            specs.push_back(GadgetSpec{ 5, { ClassRule{ x2, x1 }, ClassRule{ x4, x2 }, ClassRule{ x1, x3 } }, {
                    direct(U, V, "U-V edge: arc from the U end to the V end"),
                    via(U, W, { { end(U), mid }, { end(W), mid } }, "m_uw", U, x3, x4, { x1, x2 },
                            "U-W edge: both ends point into m; m follows u"),
                    via(W, V, { { end(W), mid }, { mid, end(V) } }, "m_wv", W, x2, x3, { x1, x4 },
                            "W-V edge: two-step path from W through m to V; m follows w")
                    } });

            specs.push_back(GadgetSpec{ 6, { ClassRule{ x1, x2 }, ClassRule{ x3, x1 }, ClassRule{ x4, x3 } }, {
                    direct(U, V, "U-V edge: arc from the U end to the V end"),
                    via(U, W, { { end(U), mid }, { mid, end(W) } }, "m_uw", U, x2, x3, { x1, x4 },
                            "U-W edge: two-step path from U through m to W; m follows u"),
                    direct(W, V, "V-W edge: arc from the W end to the V end")
                    } });

            return specs;
        }

        auto class_index(ColourClass c) -> int
        {
            return int(c);
        }

        auto label_of(const GadgetSpec & spec, ColourClass c, bool in_set) -> Label
        {
            auto & r = spec.classes[class_index(c)];
            return in_set ? r.in_set : r.default_label;
        }

        auto find_rule(const GadgetSpec & spec, ColourClass a, ColourClass b) -> const EdgeRule &
        {
            for (auto & r : spec.edges)
                if ((r.first == a && r.second == b) || (r.first == b && r.second == a))
                    return r;
            throw InternalError("gadget table has no rule for a pair of colour classes");
        }

        auto is_penalised(const EdgeRule & r, Label y) -> bool
        {
            return std::find(r.penalised.begin(), r.penalised.end(), y) != r.penalised.end();
        }

        /// Resolve the label at one end of a rule arc, given endpoint labels and the intermediate's label.
        auto resolve(const EdgeRule & r, const GadgetEnd & e, Label first, Label second, Label middle) -> Label
        {
            if (e.intermediate)
                return middle;
            return e.endpoint == r.first ? first : second;
        }

        auto all_labelings() -> vector<vector<Vertex> >
        {
            vector<vector<Vertex> > result;
            vector<Vertex> p{ 0, 1, 2, 3 };
            do
                result.push_back(p);
            while (std::next_permutation(p.begin(), p.end()));
            return result;
        }
    }

    auto colour_class_name(ColourClass c) -> string
    {
        switch (c) {
            case ColourClass::U: return "U";
            case ColourClass::V: return "V";
            case ColourClass::W: return "W";
        }
        throw InternalError("bad colour class");
    }

    ThreeColouredGraph::ThreeColouredGraph(UndirectedGraph graph, vector<ColourClass> colour) :
        _graph(std::move(graph)),
        _colour(std::move(colour))
    {
        if (int(_colour.size()) != _graph.size())
            throw PreconditionError("colouring has " + to_string(_colour.size()) + " entries for "
                    + to_string(_graph.size()) + " vertices");
        for (auto & e : _graph.edges()) {
            if (e.first == e.second)
                throw PreconditionError("three-coloured graph has a loop on " + _graph.name(e.first));
            if (_colour[e.first] == _colour[e.second])
                throw PreconditionError("edge " + _graph.name(e.first) + "-" + _graph.name(e.second)
                        + " lies inside colour class " + colour_class_name(_colour[e.first]));
        }
    }

    auto gadget_spec(int obstruction) -> const GadgetSpec &
    {
        static const vector<GadgetSpec> specs = build_specs();
        int lookup = obstruction == 3 ? 2 : obstruction;
        for (auto & s : specs)
            if (s.obstruction == lookup)
                return s;
        throw PreconditionError("no gadget construction for obstruction " + to_string(obstruction));
    }

    auto labeling_constraints(int obstruction) -> LabelingConstraints
    {
        auto & spec = gadget_spec(obstruction);
        set<LabelArc> required;
        set<vector<LabelArc> > conjunctions;

        for (auto & rule : spec.edges)
            for (bool first_in : { false, true })
                for (bool second_in : { false, true }) {
                    Label a = label_of(spec, rule.first, first_in), b = label_of(spec, rule.second, second_in);

                    if (! (first_in && second_in)) {
                        // The forward map is used with this membership pattern, so
                        // every arc it sends the rule's arcs to has to exist.
                        Label middle = 0;
                        if (! rule.intermediate_tag.empty()) {
                            bool decider_in = rule.decided_by == rule.first ? first_in : second_in;
                            middle = decider_in ? rule.intermediate_if_in : rule.intermediate_if_out;
                        }
                        for (auto & [from, to] : rule.arcs)
                            required.insert(LabelArc{ resolve(rule, from, a, b, middle), resolve(rule, to, a, b, middle) });
                    }
                    else if (rule.intermediate_tag.empty()) {
                        // Both ends in the set cheaply: must be impossible.
                        auto & [from, to] = rule.arcs.front();
                        conjunctions.insert({ LabelArc{ resolve(rule, from, a, b, 0), resolve(rule, to, a, b, 0) } });
                    }
                    else {
                        // No unpenalised intermediate label may complete the path.
                        for (Label y = 0 ; y < 4 ; ++y) {
                            if (is_penalised(rule, y))
                                continue;
                            vector<LabelArc> both;
                            for (auto & [from, to] : rule.arcs)
                                both.push_back(LabelArc{ resolve(rule, from, a, b, y), resolve(rule, to, a, b, y) });
                            std::sort(both.begin(), both.end());
                            both.erase(std::unique(both.begin(), both.end()), both.end());
                            conjunctions.insert(both);
                        }
                    }
                }

        // Drop arcs already required from each conjunction; what is left must not all be present.
        LabelingConstraints result;
        result.required.assign(required.begin(), required.end());
        set<LabelArc> forbidden;
        set<vector<LabelArc> > remaining;
        for (auto & c : conjunctions) {
            vector<LabelArc> rest;
            for (auto & a : c)
                if (! required.contains(a))
                    rest.push_back(a);
            if (rest.empty())
                throw InternalError("gadget table for obstruction " + to_string(obstruction) + " is self-contradictory");
            if (rest.size() == 1)
                forbidden.insert(rest.front());
            else
                remaining.insert(rest);
        }

        // A conjunction containing an already forbidden arc is automatically satisfied.
        result.forbidden.assign(forbidden.begin(), forbidden.end());
        for (auto & c : remaining)
            if (std::none_of(c.begin(), c.end(), [&] (const LabelArc & a) { return forbidden.contains(a); }))
                result.forbidden_conjunctions.push_back(c);

        return result;
    }

    auto satisfies(const Digraph & h, const vector<Vertex> & labels, const LabelingConstraints & c) -> bool
    {
        auto arc = [&] (const LabelArc & a) { return h.has_arc(labels.at(a.from), labels.at(a.to)); };
        for (auto & a : c.required)
            if (! arc(a))
                return false;
        for (auto & a : c.forbidden)
            if (arc(a))
                return false;
        for (auto & conj : c.forbidden_conjunctions)
            if (std::all_of(conj.begin(), conj.end(), arc))
                return false;
        return true;
    }

    auto proof_shape(int obstruction) -> optional<LabelingConstraints>
    {
        constexpr Label u = 0, v = 1, s = 2, t = 3;
        switch (obstruction) {
            case 2:
                // u and v form a digon, s points into v, v points to t, and nothing else.
                return LabelingConstraints{
                    { { u, v }, { v, u }, { s, v }, { v, t } },
                    { { v, s }, { u, s }, { s, u }, { t, v }, { u, t }, { t, u }, { s, t }, { t, s } }, { } };
            case 3:
                // Two digons meeting at v, u -> s one way only, and v -> t.
                return LabelingConstraints{
                    { { u, v }, { v, u }, { s, v }, { v, s }, { u, s }, { v, t } },
                    { { s, u }, { t, v }, { u, t }, { t, u }, { s, t }, { t, s } }, { } };
            case 4:
                // Disjoint digons uv and st joined by s -> v and u -> t. Arcs v -> s and t -> u are not fixed.
                return LabelingConstraints{
                    { { u, v }, { v, u }, { s, t }, { t, s }, { s, v }, { u, t } },
                    { { s, u }, { u, s }, { v, t }, { t, v } }, { } };
            default:
                return std::nullopt;
        }
    }

    auto matches_proof_shape(const Digraph & h, int obstruction) -> bool
    {
        auto shape = proof_shape(obstruction);
        if (! shape)
            return true;
        if (h.size() != 4)
            return false;
        for (auto & l : all_labelings())
            if (satisfies(h, l, *shape))
                return true;
        return false;
    }

    auto identify_labeled_obstructions(const ObstructionCatalog & catalog) -> Identification
    {
        Identification result;
        result.catalog = catalog;
        auto & members = result.catalog.members;
        for (auto & m : members) {
            m.obstruction_index.reset();
            m.labels.clear();
        }

        vector<int> small;
        for (int m = 0 ; m < int(members.size()) ; ++m)
            if (members[m].graph.size() == 3)
                small.push_back(m);
        if (small.empty())
            throw InternalError("catalog has no three-vertex member");
        if (std::any_of(small.begin(), small.end(),
                    [&] (int m) { return members[m].converse_class != members[small.front()].converse_class; }))
            result.ambiguities.push_back("several three-vertex classes; the first is taken as H1");
        members[small.front()].obstruction_index = 1;

        auto labelings = all_labelings();
        map<int, set<int> > candidates;
        for (int i = 2 ; i <= 6 ; ++i) {
            auto constraints = labeling_constraints(i);
            for (int m = 0 ; m < int(members.size()) ; ++m) {
                if (members[m].graph.size() != 4)
                    continue;
                bool shape = matches_proof_shape(members[m].graph, i);
                for (auto & l : labelings)
                    if (satisfies(members[m].graph, l, constraints)) {
                        result.matches[i].push_back(LabelingMatch{ m, l });
                        if (shape)
                            candidates[i].insert(members[m].converse_class);
                    }
            }
            if (candidates[i].empty())
                throw InternalError("no catalog member satisfies the labelling constraints of obstruction " + to_string(i));
        }

        // Obstructions 2 and 3 share one construction, so their candidate sets
        // overlap; the proof shapes and elimination separate them.
        map<int, int> assigned;
        for (bool progress = true ; progress ; ) {
            progress = false;
            for (auto & [i, classes] : candidates) {
                if (assigned.contains(i) || classes.size() != 1)
                    continue;
                int c = *classes.begin();
                assigned[i] = c;
                progress = true;
                for (auto & [j, other] : candidates)
                    if (j != i && other.size() > 1)
                        other.erase(c);
            }
        }

        for (auto & [i, classes] : candidates) {
            if (classes.empty())
                throw InternalError("obstruction " + to_string(i) + " lost every candidate class during elimination");
            if (! assigned.contains(i)) {
                result.ambiguities.push_back("obstruction " + to_string(i) + " still has " + to_string(classes.size())
                        + " candidate classes; the first is taken");
                assigned[i] = *classes.begin();
            }
        }

        for (auto & [i, c] : assigned) {
            // The first member of the class with a matching labelling (a converse may come first).
            auto & ms = result.matches[i];
            auto hit = std::find_if(ms.begin(), ms.end(), [&] (const LabelingMatch & lm) {
                    return members[lm.member].converse_class == c && matches_proof_shape(members[lm.member].graph, i); });
            if (hit == ms.end())
                throw InternalError("assigned class has no labelled member");
            auto & member = members[hit->member];
            if (member.obstruction_index) {
                result.ambiguities.push_back("member " + to_string(hit->member) + " claimed by obstructions "
                        + to_string(*member.obstruction_index) + " and " + to_string(i));
                continue;
            }
            member.obstruction_index = i;
            member.labels = hit->labels;
        }

        return result;
    }

    auto labeled_catalog() -> const ObstructionCatalog &
    {
        static const ObstructionCatalog catalog = identify_labeled_obstructions(default_catalog()).catalog;
        return catalog;
    }

    auto member_with_index(const ObstructionCatalog & catalog, int obstruction) -> int
    {
        for (int m = 0 ; m < int(catalog.members.size()) ; ++m)
            if (catalog.members[m].obstruction_index == obstruction)
                return m;
        throw PreconditionError("catalog has no member identified as H" + to_string(obstruction));
    }

    auto gadget(int obstruction, const ThreeColouredGraph & x, int k, const ObstructionCatalog & catalog) -> GadgetInstance
    {
        if (obstruction < 2 || obstruction > 6)
            throw PreconditionError("gadgets exist for obstructions 2 to 6 only");
        if (k < 0 || k > x.size())
            throw PreconditionError("k must lie between 0 and |V(X)|");

        auto & spec = gadget_spec(obstruction);
        auto & member = catalog.members.at(member_with_index(catalog, obstruction));
        if (member.labels.size() != 4)
            throw PreconditionError("catalog member H" + to_string(obstruction) + " carries no labelling");

        auto & xg = x.graph();
        int n = x.size();
        vector<string> names = xg.names();
        vector<GadgetVertex> provenance;
        for (Vertex v = 0 ; v < n ; ++v)
            provenance.push_back(GadgetVertex{ false, v, Edge{ v, v }, "" });

        vector<Arc> arcs;
        vector<pair<int, const EdgeRule *> > intermediates;
        for (auto & e : xg.edges()) {
            auto & rule = find_rule(spec, x.colour(e.first), x.colour(e.second));
            Vertex first = x.colour(e.first) == rule.first ? e.first : e.second;
            Vertex second = first == e.first ? e.second : e.first;

            Vertex middle = -1;
            if (! rule.intermediate_tag.empty()) {
                middle = Vertex(names.size());
                names.push_back(rule.intermediate_tag + "_" + xg.name(first) + "_" + xg.name(second));
                provenance.push_back(GadgetVertex{ true, -1, e, rule.intermediate_tag });
                intermediates.emplace_back(middle, &rule);
            }

            auto vertex_for = [&] (const GadgetEnd & g) {
                return g.intermediate ? middle : g.endpoint == rule.first ? first : second;
            };
            for (auto & [from, to] : rule.arcs)
                arcs.push_back(Arc{ vertex_for(from), vertex_for(to) });
        }

        Digraph instance(names, arcs);
        auto & h = member.graph;
        CostMatrix costs(instance.size(), h.size(), Rational(n));

        for (Vertex v = 0 ; v < n ; ++v) {
            auto & r = spec.classes[class_index(x.colour(v))];
            costs.set(v, member.labels[r.in_set], Rational(0));
            costs.set(v, member.labels[r.default_label], Rational(1));
        }
        for (auto & [vertex, rule] : intermediates)
            for (Label y = 0 ; y < 4 ; ++y)
                costs.set(vertex, member.labels[y], is_penalised(*rule, y) ? Rational(n) : Rational(0));

        return GadgetInstance{ obstruction, std::move(instance), h, std::move(costs), Rational(n - k), std::move(provenance) };
    }

    auto forward_map(const GadgetInstance & g, const ThreeColouredGraph & x, const vector<Vertex> & independent,
            const ObstructionCatalog & catalog) -> vector<Vertex>
    {
        auto & spec = gadget_spec(g.obstruction);
        auto & labels = catalog.members.at(member_with_index(catalog, g.obstruction)).labels;

        vector<bool> in_set(x.size(), false);
        for (auto v : independent)
            in_set.at(v) = true;

        vector<Vertex> image(g.instance.size(), -1);
        for (int i = 0 ; i < g.instance.size() ; ++i) {
            auto & p = g.provenance[i];
            if (! p.intermediate) {
                image[i] = labels[label_of(spec, x.colour(p.original), in_set[p.original])];
                continue;
            }
            auto & rule = find_rule(spec, x.colour(p.source_edge.first), x.colour(p.source_edge.second));
            Vertex decider = x.colour(p.source_edge.first) == rule.decided_by ? p.source_edge.first : p.source_edge.second;
            image[i] = labels[in_set[decider] ? rule.intermediate_if_in : rule.intermediate_if_out];
        }
        return image;
    }

    auto verify_reduction(int obstruction, const ThreeColouredGraph & x, int k,
            const ObstructionCatalog & catalog, const OracleLimits & limits) -> ReductionCheck
    {
        auto g = gadget(obstruction, x, k, catalog);
        int alpha = max_independent_set(x.graph(), limits);
        auto best = minhom_bruteforce(g.instance, g.template_graph, g.costs, limits);

        bool threshold = (alpha >= k) == (best.cost <= g.budget);
        bool sharp = best.cost == Rational(x.size() - alpha);
        return ReductionCheck{ threshold && sharp, alpha, best.cost };
    }
}
