/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINHOM_ORACLE_HH
#define MINHOM_ORACLE_HH 1

#include <minhom/graph.hh>
#include <minhom/homomorphism.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace minhom
{
    struct ObstructionCatalog;

    struct OracleLimits
    {
        /// Search nodes (partial maps extended) before minhom_bruteforce gives up.
        long long max_evaluations = 100'000'000;

        /// Largest graph max_independent_set will take.
        int max_independent_set_vertices = 20;
    };

    /**
     * Exact minimum-cost homomorphism by exhaustive backtracking. Vertices are
     * tried in order of decreasing degree; a branch is cut when its cost plus
     * the cheapest unary cost of every unassigned vertex cannot beat the best
     * so far, and once no two unassigned vertices are adjacent each of them
     * just takes its cheapest consistent image. Throws BudgetExceeded past
     * max_evaluations, and PreconditionError if no homomorphism exists.
     */
    auto minhom_bruteforce(const Digraph & g, const Digraph & h, const CostMatrix & costs,
            const OracleLimits & limits = { }) -> Homomorphism;

    auto max_independent_set(const UndirectedGraph & x, const OracleLimits & limits = { }) -> int;

    /// One maximum independent set, sorted.
    auto maximum_independent_set(const UndirectedGraph & x, const OracleLimits & limits = { }) -> std::vector<Vertex>;

    /**
     * Row-major adjacency matrix bits, first bit most significant, minimised
     * over all vertex permutations. Needs n <= 8.
     */
    auto canonical_code(const Digraph & h) -> std::uint64_t;

    /// The relabelling of H that achieves canonical_code, with default vertex names.
    auto canonical_form(const Digraph & h) -> Digraph;

    auto are_isomorphic(const Digraph & a, const Digraph & b) -> bool;

    /// Rebuild a canonical digraph from its code.
    auto digraph_from_code(int n, std::uint64_t code) -> Digraph;

    /**
     * One canonical representative per isomorphism class of reflexive digraphs
     * on n vertices, sorted by canonical code. The labelled space is split
     * across `threads` workers; the result does not depend on the split.
     */
    auto enumerate_reflexive_digraphs(int n, int threads = 1) -> std::vector<Digraph>;

    struct TheoremMismatch
    {
        Digraph graph;
        bool has_min_max;
        bool conditions_hold;
    };

    struct TheoremReport
    {
        int max_n = 0;
        std::vector<long> classes_per_size;
        long classes_checked = 0, with_min_max = 0;
        std::vector<TheoremMismatch> mismatches;

        /// One "n=<n> code=<code> min_max=<0|1> conditions=<0|1>" line per class.
        std::vector<std::string> listing;

        auto summary() const -> std::string;
    };

    /**
     * For every reflexive digraph on at most max_n vertices, compare brute
     * force Min-Max existence with the three-condition test against catalog.
     */
    auto verify_theorem(int max_n, const ObstructionCatalog & catalog, int threads = 1, bool with_listing = false) -> TheoremReport;
}

#endif
