/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINHOM_RECOGNITION_HH
#define MINHOM_RECOGNITION_HH 1

#include <minhom/graph.hh>
#include <minhom/ordering.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace minhom
{
    struct NamedGraph
    {
        std::string name;
        UndirectedGraph graph;
    };

    struct NamedBigraph
    {
        std::string name;
        bool swapped;
        BipartiteGraph graph;
    };

    /// Reflexive claw K_{1,3}: centre 0, leaves 1..3.
    auto claw() -> UndirectedGraph;

    /// Reflexive net: triangle 0,1,2 with pendants 3 (on 0), 4 (on 1), 5 (on 2).
    auto net() -> UndirectedGraph;

    /// Reflexive tent: triangle 0,1,2 with 3 on {0,1}, 4 on {1,2}, 5 on {2,0}.
    auto tent() -> UndirectedGraph;

    /// Reflexive induced cycle 0-1-...-(k-1)-0.
    auto reflexive_cycle(int k) -> UndirectedGraph;

    /// C_2k with whites w0..w(k-1), blacks b0..b(k-1): w_i ~ b_i and w_i ~ b_(i-1).
    auto bipartite_cycle(int k) -> BipartiteGraph;

    /// Black centre adjacent to three whites, each with its own black pendant.
    auto biclaw() -> BipartiteGraph;

    /// An induced C4 with a pendant on three of its four vertices.
    auto binet() -> BipartiteGraph;

    /// A white vertex adjacent to all four blacks, two more whites on two blacks each.
    auto bitent() -> BipartiteGraph;

    /// Pattern by certificate name: "C<k>", "claw", "net" or "tent". Throws PreconditionError otherwise.
    auto proper_interval_pattern(const std::string & name) -> UndirectedGraph;

    /// "C<2k>", "biclaw", "binet" or "bitent", optionally with colours swapped.
    auto proper_interval_bigraph_pattern(const std::string & name, bool swapped) -> BipartiteGraph;

    /// C_k for 4 <= k <= max_size, claw, net, tent; ordered by size, then name.
    auto proper_interval_obstructions(int max_size) -> std::vector<NamedGraph>;

    /// C_2k for 6 <= 2k <= max_size, biclaw, binet, bitent, in both colourings; ordered by size.
    auto proper_interval_bigraph_obstructions(int max_size) -> std::vector<NamedBigraph>;

    /// An induced forbidden subgraph of S(H).
    struct SCertificate
    {
        std::string pattern;
        Embedding embedding;
    };

    /// An induced forbidden subgraph of B(H). With swapped set, the pattern's colours are exchanged first.
    struct BCertificate
    {
        std::string pattern;
        bool swapped = false;
        BipartiteEmbedding embedding;
    };

    /// An induced copy of catalog member `member` in H.
    struct HCertificate
    {
        int member;
        Embedding embedding;
    };

    using Certificate = std::variant<SCertificate, BCertificate, HCertificate>;

    struct ProperIntervalVerdict
    {
        std::optional<Ordering> ordering;
        std::optional<SCertificate> certificate;

        auto yes() const -> bool { return ordering.has_value(); }
    };

    struct ProperIntervalBigraphVerdict
    {
        std::optional<BipartiteOrdering> ordering;
        std::optional<BCertificate> certificate;

        auto yes() const -> bool { return ordering.has_value(); }
    };

    /**
     * Decide by Min-Max ordering search on the graph viewed as a symmetric
     * digraph; on failure, locate a forbidden subgraph. Throws
     * PreconditionError on a non-reflexive graph.
     */
    auto is_proper_interval(const UndirectedGraph & g, const SearchLimits & limits = { }) -> ProperIntervalVerdict;

    auto is_proper_interval_bigraph(const BipartiteGraph & b, const SearchLimits & limits = { }) -> ProperIntervalBigraphVerdict;

    struct CatalogMember
    {
        Digraph graph;
        std::uint64_t code;

        /// Index of the member isomorphic to the converse (possibly this one).
        int converse;
        int converse_class;

        /// Obstruction index 1..6 and the labelling x1..x4 -> vertex, once identified.
        std::optional<int> obstruction_index;
        std::vector<Vertex> labels;
    };

    /**
     * Minimal reflexive digraphs that pass both the S(H) and B(H) tests but have
     * no Min-Max ordering. Members are sorted by (size, canonical code); both a
     * digraph and its converse appear when they are not isomorphic.
     */
    struct ObstructionCatalog
    {
        int max_size = 0;
        std::vector<CatalogMember> members;
        int class_count = 0;

        auto class_members(int c) const -> std::vector<int>;

        /// A copy with every member of converse class c removed (used as a negative control).
        auto without_class(int c) const -> ObstructionCatalog;

        /// "H2" once identified, "O<k>" (1-based class) otherwise; converses get a "^c" suffix.
        auto member_name(int m) const -> std::string;
    };

    /// Throws PreconditionError unless 1 <= max_size <= 5.
    auto derive_obstruction_catalog(int max_size, int threads = 1) -> ObstructionCatalog;

    /// derive_obstruction_catalog(4), computed once.
    auto default_catalog() -> const ObstructionCatalog &;

    /// Text dump used for the byte-for-byte stability check and the catalog index.
    auto serialize_catalog(const ObstructionCatalog & catalog) -> std::string;

    /**
     * The first failed condition: S(H) not proper interval, else B(H) not a
     * proper interval bigraph, else an induced catalog member. nullopt when
     * all three conditions hold.
     */
    auto first_failed_condition(const Digraph & h, const ObstructionCatalog & catalog,
            const SearchLimits & limits = { }) -> std::optional<Certificate>;

    struct Polynomial
    {
        Ordering ordering;
    };

    struct NPComplete
    {
        Certificate certificate;
    };

    using DichotomyVerdict = std::variant<Polynomial, NPComplete>;

    /**
     * Polynomial with a Min-Max ordering (built by the exchange procedure,
     * brute force as fallback), or NP-complete with the first certificate.
     * Throws PreconditionError for a non-reflexive template.
     */
    auto classify(const Digraph & h, const ObstructionCatalog & catalog = default_catalog(),
            const SearchLimits & limits = { }) -> DichotomyVerdict;

    /// Does the certificate really embed an induced forbidden graph in the right derived graph of H?
    auto certificate_is_valid(const Digraph & h, const Certificate & c, const ObstructionCatalog & catalog) -> bool;

    /// e.g. "induced C4 in S(H): a b c d".
    auto describe(const Digraph & h, const Certificate & c, const ObstructionCatalog & catalog) -> std::string;
}

#endif
