/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINHOM_HARDNESS_HH
#define MINHOM_HARDNESS_HH 1

#include <minhom/graph.hh>
#include <minhom/homomorphism.hh>
#include <minhom/oracle.hh>
#include <minhom/recognition.hh>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace minhom
{
    enum class ColourClass
    {
        U,
        V,
        W
    };

    auto colour_class_name(ColourClass c) -> std::string;

    /// A loopless graph with a proper colouring by the independent classes U, V, W.
    class ThreeColouredGraph
    {
        private:
            UndirectedGraph _graph;
            std::vector<ColourClass> _colour;

        public:
            ThreeColouredGraph() = default;

            /// Throws PreconditionError on loops, a size mismatch, or an edge inside one class.
            ThreeColouredGraph(UndirectedGraph graph, std::vector<ColourClass> colour);

            auto graph() const -> const UndirectedGraph & { return _graph; }
            auto size() const -> int { return _graph.size(); }
            auto colour(Vertex v) const -> ColourClass { return _colour.at(v); }
            auto colours() const -> const std::vector<ColourClass> & { return _colour; }
    };

    /// Labels x1..x4 are 0..3 here.
    using Label = int;

    /// Where a vertex of one colour class goes: in_set if it is in the independent set, otherwise default_label.
    struct ClassRule
    {
        Label in_set, default_label;
    };

    /// One end of a gadget arc: an endpoint class, or the intermediate vertex.
    struct GadgetEnd
    {
        bool intermediate;
        ColourClass endpoint;
    };

    /**
     * How an edge of X between two colour classes becomes part of G: either a
     * single arc, or two arcs through a fresh intermediate vertex. For the
     * intermediate, the forward map is fixed by the membership of one
     * endpoint, and some labels carry the large penalty cost.
     */
    struct EdgeRule
    {
        ColourClass first, second;
        std::vector<std::pair<GadgetEnd, GadgetEnd> > arcs;
        std::string intermediate_tag;

        ColourClass decided_by = ColourClass::U;
        Label intermediate_if_in = 0, intermediate_if_out = 0;
        std::vector<Label> penalised;

        std::string note;
    };

    struct GadgetSpec
    {
        int obstruction;
        std::array<ClassRule, 3> classes;
        std::vector<EdgeRule> edges;
    };

    /// The construction tables for obstructions 2..6 (3 uses the table of 2).
    auto gadget_spec(int obstruction) -> const GadgetSpec &;

    struct LabelArc
    {
        Label from, to;

        auto operator<=> (const LabelArc &) const = default;
    };

    /**
     * Arcs a labelled template must have (so that the forward map is a
     * homomorphism for every independent set) and must not have (so that no
     * cheap homomorphism puts two adjacent vertices of X in the set). A
     * forbidden conjunction rules out having all of its arcs at once; those
     * of length one are listed under forbidden.
     */
    struct LabelingConstraints
    {
        std::vector<LabelArc> required, forbidden;
        std::vector<std::vector<LabelArc> > forbidden_conjunctions;
    };

    /// Mechanically derived from gadget_spec(obstruction).
    auto labeling_constraints(int obstruction) -> LabelingConstraints;

    /// Does labels (x1..x4 -> vertex) satisfy the constraints in h?
    auto satisfies(const Digraph & h, const std::vector<Vertex> & labels, const LabelingConstraints & c) -> bool;

    /**
     * The full arc pattern that the case analysis of the sufficiency argument
     * pins down for obstructions 2, 3 and 4, over roles u, v, s, t (labels
     * 0..3 here). Obstructions 5 and 6 are left partly open there, so they
     * have no shape and are settled by elimination.
     */
    auto proof_shape(int obstruction) -> std::optional<LabelingConstraints>;

    /// Does some assignment of u, v, s, t to the four vertices of h fit proof_shape(obstruction)?
    auto matches_proof_shape(const Digraph & h, int obstruction) -> bool;

    struct LabelingMatch
    {
        int member;
        std::vector<Vertex> labels;
    };

    struct Identification
    {
        /// The input catalog with obstruction indices and labels filled in.
        ObstructionCatalog catalog;

        /// Every (member, labelling) that satisfies each constraint set, keyed by obstruction index.
        std::map<int, std::vector<LabelingMatch> > matches;

        std::vector<std::string> ambiguities;
    };

    /**
     * Assign indices 1..6. The three-vertex member is 1. For 2..6 the
     * candidates are four-vertex members with a labelling that satisfies the
     * construction's constraints and, where one exists, the proof shape;
     * indices with a single candidate class claim it, and claimed classes
     * are removed from the others until nothing changes. Leftover choices
     * are reported as ambiguities. Throws InternalError if an index ends up
     * with no candidate.
     */
    auto identify_labeled_obstructions(const ObstructionCatalog & catalog) -> Identification;

    /// identify_labeled_obstructions(default_catalog()).catalog, computed once.
    auto labeled_catalog() -> const ObstructionCatalog &;

    /// The member with this obstruction index. Throws PreconditionError when the catalog has none.
    auto member_with_index(const ObstructionCatalog & catalog, int obstruction) -> int;

    struct GadgetVertex
    {
        bool intermediate;

        /// The vertex of X for an original, else -1.
        Vertex original;

        /// For an intermediate: the X edge it was made for, and "m_uw" style tag.
        Edge source_edge;
        std::string tag;
    };

    struct GadgetInstance
    {
        int obstruction;
        Digraph instance;
        Digraph template_graph;
        CostMatrix costs;
        Rational budget;
        std::vector<GadgetVertex> provenance;
    };

    /**
     * Build G and its costs from X so that X has an independent set of size k
     * iff G maps to the template at cost at most |V(X)| - k. Needs
     * 2 <= obstruction <= 6 and 0 <= k <= |V(X)|.
     */
    auto gadget(int obstruction, const ThreeColouredGraph & x, int k,
            const ObstructionCatalog & catalog = labeled_catalog()) -> GadgetInstance;

    /// The homomorphism the construction intends for independent set `independent`.
    auto forward_map(const GadgetInstance & g, const ThreeColouredGraph & x, const std::vector<Vertex> & independent,
            const ObstructionCatalog & catalog = labeled_catalog()) -> std::vector<Vertex>;

    struct ReductionCheck
    {
        bool holds;
        int alpha;
        Rational min_cost;
    };

    /**
     * Brute-force both sides: holds iff (alpha(X) >= k) == (min cost <= |V(X)| - k)
     * and min cost == |V(X)| - alpha(X).
     */
    auto verify_reduction(int obstruction, const ThreeColouredGraph & x, int k,
            const ObstructionCatalog & catalog = labeled_catalog(), const OracleLimits & limits = { }) -> ReductionCheck;
}

#endif
