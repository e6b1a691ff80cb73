/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minhom/oracle.hh>
#include <minhom/errors.hh>
#include <minhom/io.hh>
#include <minhom/recognition.hh>

#include "parallel.hh"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>

using std::array;
using std::int64_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace minhom
{
    namespace
    {
        class MinHomSearch
        {
            private:
                const Digraph & _g;
                const Digraph & _h;
                const OracleLimits & _limits;
                int _n, _m;

                // Costs scaled to integers by the common denominator.
                int64_t _scale = 1;
                vector<vector<int64_t> > _cost;

                vector<Vertex> _order;
                vector<int64_t> _remaining_floor;
                vector<bool> _independent_tail;

                // For each image candidate list, cheapest first.
                vector<vector<Vertex> > _candidates;

                vector<Vertex> _image, _best_image;
                int64_t _best = 0;
                bool _found = false;
                long long _nodes = 0;

                auto consistent(Vertex u, Vertex i) const -> bool
                {
                    if (_g.has_loop(u) && ! _h.has_loop(i))
                        return false;
                    for (Vertex w = 0 ; w < _n ; ++w) {
                        if (w == u || _image[w] < 0)
                            continue;
                        if (_g.has_arc(u, w) && ! _h.has_arc(i, _image[w]))
                            return false;
                        if (_g.has_arc(w, u) && ! _h.has_arc(_image[w], i))
                            return false;
                    }
                    return true;
                }

                auto tick() -> void
                {
                    if (++_nodes > _limits.max_evaluations)
                        throw BudgetExceeded("brute-force MinHOM exceeded " + to_string(_limits.max_evaluations) + " search nodes");
                }

                auto complete_independently(int depth, int64_t so_far) -> void
                {
                    // No two of the remaining vertices are adjacent, so each can
                    // take its cheapest image that agrees with the assigned part.
                    vector<Vertex> chosen;
                    int64_t total = so_far;
                    for (int k = depth ; k < _n ; ++k) {
                        Vertex u = _order[k];
                        tick();
                        bool placed = false;
                        for (auto i : _candidates[u])
                            if (consistent(u, i)) {
                                chosen.push_back(i);
                                total = checked_add(total, _cost[u][i]);
                                placed = true;
                                break;
                            }
                        if (! placed)
                            return;
                    }

                    if (! _found || total < _best) {
                        _found = true;
                        _best = total;
                        _best_image = _image;
                        for (int k = depth ; k < _n ; ++k)
                            _best_image[_order[k]] = chosen[k - depth];
                    }
                }

                auto search(int depth, int64_t so_far) -> void
                {
                    if (_found && checked_add(so_far, _remaining_floor[depth]) >= _best)
                        return;
                    if (_independent_tail[depth]) {
                        complete_independently(depth, so_far);
                        return;
                    }

                    Vertex u = _order[depth];
                    for (auto i : _candidates[u]) {
                        tick();
                        if (! consistent(u, i))
                            continue;
                        _image[u] = i;
                        search(depth + 1, checked_add(so_far, _cost[u][i]));
                        _image[u] = -1;
                    }
                }

            public:
                MinHomSearch(const Digraph & g, const Digraph & h, const CostMatrix & costs, const OracleLimits & limits) :
                    _g(g),
                    _h(h),
                    _limits(limits),
                    _n(g.size()),
                    _m(h.size())
                {
                    for (Vertex u = 0 ; u < _n ; ++u)
                        for (Vertex i = 0 ; i < _m ; ++i)
                            _scale = checked_lcm(_scale, costs.at(u, i).denominator());

                    _cost.assign(_n, vector<int64_t>(_m));
                    for (Vertex u = 0 ; u < _n ; ++u)
                        for (Vertex i = 0 ; i < _m ; ++i)
                            _cost[u][i] = checked_mul(costs.at(u, i).numerator(), _scale / costs.at(u, i).denominator());

                    // Most constrained first: prefer vertices with many already
                    // ordered neighbours, then high degree.
                    auto neighbours = underlying_graph(g);
                    vector<bool> placed(_n, false);
                    vector<int> placed_neighbours(_n, 0);
                    for (int k = 0 ; k < _n ; ++k) {
                        Vertex pick = -1;
                        for (Vertex v = 0 ; v < _n ; ++v)
                            if (! placed[v] && (pick < 0
                                        || placed_neighbours[v] > placed_neighbours[pick]
                                        || (placed_neighbours[v] == placed_neighbours[pick] && neighbours.degree(v) > neighbours.degree(pick))))
                                pick = v;
                        placed[pick] = true;
                        _order.push_back(pick);
                        for (Vertex w = 0 ; w < _n ; ++w)
                            if (w != pick && neighbours.has_edge(pick, w))
                                ++placed_neighbours[w];
                    }

                    _remaining_floor.assign(_n + 1, 0);
                    for (int k = _n - 1 ; k >= 0 ; --k) {
                        Vertex u = _order[k];
                        int64_t cheapest = std::numeric_limits<int64_t>::max();
                        for (Vertex i = 0 ; i < _m ; ++i)
                            cheapest = std::min(cheapest, _cost[u][i]);
                        _remaining_floor[k] = checked_add(_remaining_floor[k + 1], _m ? cheapest : 0);
                    }

                    _independent_tail.assign(_n + 1, true);
                    for (int k = _n - 1 ; k >= 0 ; --k) {
                        bool ok = _independent_tail[k + 1];
                        for (int l = k + 1 ; l < _n && ok ; ++l)
                            if (neighbours.has_edge(_order[k], _order[l]))
                                ok = false;
                        _independent_tail[k] = ok;
                    }

                    _candidates.assign(_n, vector<Vertex>(_m));
                    for (Vertex u = 0 ; u < _n ; ++u) {
                        std::iota(_candidates[u].begin(), _candidates[u].end(), 0);
                        std::stable_sort(_candidates[u].begin(), _candidates[u].end(),
                                [&] (Vertex a, Vertex b) { return _cost[u][a] < _cost[u][b]; });
                    }

                    _image.assign(_n, -1);
                }

                auto run() -> Homomorphism
                {
                    search(0, 0);
                    if (! _found)
                        throw PreconditionError("the instance has no homomorphism to the template");
                    return Homomorphism{ _best_image, Rational(_best, _scale) };
                }
        };

        auto mis_search(const vector<uint64_t> & adj, uint64_t candidates, uint64_t chosen, uint64_t & best) -> void
        {
            if (std::popcount(chosen) + std::popcount(candidates) <= std::popcount(best))
                return;
            if (! candidates) {
                best = chosen;
                return;
            }

            int pick = -1, pick_degree = -1;
            for (uint64_t rest = candidates ; rest ; rest &= rest - 1) {
                int v = std::countr_zero(rest);
                int d = std::popcount(adj[v] & candidates);
                if (d > pick_degree) {
                    pick = v;
                    pick_degree = d;
                }
            }

            uint64_t bit = uint64_t(1) << pick;
            if (pick_degree == 0) {
                best = chosen | candidates;
                return;
            }

            mis_search(adj, candidates & ~bit & ~adj[pick], chosen | bit, best);
            mis_search(adj, candidates & ~bit, chosen, best);
        }

        auto arc_bit(int n, int i, int j) -> uint64_t
        {
            return uint64_t(1) << (n * n - 1 - (i * n + j));
        }

        auto code_under(const Digraph & h, const vector<Vertex> & p) -> uint64_t
        {
            int n = h.size();
            uint64_t code = 0;
            for (int i = 0 ; i < n ; ++i)
                for (int j = 0 ; j < n ; ++j)
                    if (h.has_arc(p[i], p[j]))
                        code |= arc_bit(n, i, j);
            return code;
        }

        auto best_permutation(const Digraph & h) -> vector<Vertex>
        {
            int n = h.size();
            if (n > 8)
                throw PreconditionError("canonical codes are only defined for at most 8 vertices");

            vector<Vertex> p(n), best;
            std::iota(p.begin(), p.end(), 0);
            uint64_t best_code = 0;
            do {
                auto c = code_under(h, p);
                if (best.empty() || c < best_code) {
                    best = p;
                    best_code = c;
                }
            } while (std::next_permutation(p.begin(), p.end()));
            return best;
        }
    }

    auto minhom_bruteforce(const Digraph & g, const Digraph & h, const CostMatrix & costs,
            const OracleLimits & limits) -> Homomorphism
    {
        check_cost_shape(g, h, costs);
        return MinHomSearch(g, h, costs, limits).run();
    }

    auto maximum_independent_set(const UndirectedGraph & x, const OracleLimits & limits) -> vector<Vertex>
    {
        int n = x.size();
        if (n > limits.max_independent_set_vertices || n > 63)
            throw BudgetExceeded("independent set oracle limited to " + to_string(limits.max_independent_set_vertices) + " vertices");

        // Loops are ignored: only edges between distinct vertices matter.
        vector<uint64_t> adj(n, 0);
        for (int a = 0 ; a < n ; ++a)
            for (int b = 0 ; b < n ; ++b)
                if (a != b && x.has_edge(a, b))
                    adj[a] |= uint64_t(1) << b;

        uint64_t all = n ? (uint64_t(1) << n) - 1 : 0, best = 0;
        mis_search(adj, all, 0, best);

        vector<Vertex> result;
        for (int v = 0 ; v < n ; ++v)
            if (best >> v & 1)
                result.push_back(v);
        return result;
    }

    auto max_independent_set(const UndirectedGraph & x, const OracleLimits & limits) -> int
    {
        return int(maximum_independent_set(x, limits).size());
    }

    auto canonical_code(const Digraph & h) -> uint64_t
    {
        return code_under(h, best_permutation(h));
    }

    auto canonical_form(const Digraph & h) -> Digraph
    {
        return digraph_from_code(h.size(), canonical_code(h));
    }

    auto are_isomorphic(const Digraph & a, const Digraph & b) -> bool
    {
        return a.size() == b.size() && a.arc_count() == b.arc_count() && canonical_code(a) == canonical_code(b);
    }

    auto digraph_from_code(int n, uint64_t code) -> Digraph
    {
        if (n < 0 || n > 8)
            throw PreconditionError("canonical codes are only defined for at most 8 vertices");
        if (n < 8 && (code >> (n * n)) != 0)
            throw PreconditionError("code has bits beyond an " + to_string(n) + "-vertex adjacency matrix");

        vector<Arc> arcs;
        for (int i = 0 ; i < n ; ++i)
            for (int j = 0 ; j < n ; ++j)
                if (code & arc_bit(n, i, j))
                    arcs.push_back(Arc{ i, j });
        return Digraph::with_size(n, arcs);
    }

    auto enumerate_reflexive_digraphs(int n, int threads) -> vector<Digraph>
    {
        if (n < 1 || n > 5)
            throw PreconditionError("reflexive digraph enumeration needs 1 <= n <= 5");

        // Off-diagonal slots in row-major order; slot s of a labelled digraph
        // lands on bit table[p][s] of the code under permutation p.
        vector<array<int, 2> > slots;
        for (int i = 0 ; i < n ; ++i)
            for (int j = 0 ; j < n ; ++j)
                if (i != j)
                    slots.push_back({ i, j });
        int slot_count = int(slots.size());
        int byte_count = (slot_count + 7) / 8;

        uint64_t loops = 0;
        for (int i = 0 ; i < n ; ++i)
            loops |= arc_bit(n, i, i);

        vector<vector<Vertex> > perms;
        vector<Vertex> p(n);
        std::iota(p.begin(), p.end(), 0);
        do
            perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));

        // tables[perm][byte][value]: code bits contributed by those eight slots.
        vector<vector<array<uint64_t, 256> > > tables(perms.size(), vector<array<uint64_t, 256> >(byte_count));
        for (std::size_t q = 0 ; q < perms.size() ; ++q) {
            vector<Vertex> inverse(n);
            for (int i = 0 ; i < n ; ++i)
                inverse[perms[q][i]] = i;
            for (int byte = 0 ; byte < byte_count ; ++byte)
                for (int value = 0 ; value < 256 ; ++value) {
                    uint64_t bits = 0;
                    for (int b = 0 ; b < 8 ; ++b) {
                        int s = byte * 8 + b;
                        if (s < slot_count && (value >> b & 1))
                            bits |= arc_bit(n, inverse[slots[s][0]], inverse[slots[s][1]]);
                    }
                    tables[q][byte][value] = bits;
                }
        }

        auto code_for = [&] (std::size_t q, uint64_t mask) {
            uint64_t code = loops;
            for (int byte = 0 ; byte < byte_count ; ++byte)
                code |= tables[q][byte][(mask >> (8 * byte)) & 0xff];
            return code;
        };

        // perms[0] is the identity.
        uint64_t mask_count = uint64_t(1) << slot_count;
        long chunk_count = std::max<long>(1, std::min<long>(long(mask_count), 64));
        vector<vector<uint64_t> > found(chunk_count);

        parallel_for(chunk_count, threads, [&] (long chunk) {
            uint64_t begin = mask_count * chunk / chunk_count, end = mask_count * (chunk + 1) / chunk_count;
            for (uint64_t mask = begin ; mask < end ; ++mask) {
                uint64_t code = code_for(0, mask);
                bool minimal = true;
                for (std::size_t q = 1 ; q < perms.size() && minimal ; ++q)
                    if (code_for(q, mask) < code)
                        minimal = false;
                if (minimal)
                    found[chunk].push_back(code);
            }
        });

        vector<uint64_t> codes;
        for (auto & f : found)
            codes.insert(codes.end(), f.begin(), f.end());
        std::sort(codes.begin(), codes.end());

        vector<Digraph> result;
        result.reserve(codes.size());
        for (auto c : codes)
            result.push_back(digraph_from_code(n, c));
        return result;
    }

    auto TheoremReport::summary() const -> string
    {
        std::ostringstream out;
        out << "reflexive digraphs on at most " << max_n << " vertices\n";
        out << "classes per size:";
        for (auto c : classes_per_size)
            out << " " << c;
        out << "\nclasses checked: " << classes_checked << "\n";
        out << "with a Min-Max ordering: " << with_min_max << "\n";
        out << "mismatches: " << mismatches.size() << "\n";
        for (auto & m : mismatches) {
            out << "mismatch: min_max=" << m.has_min_max << " conditions=" << m.conditions_hold << "\n";
            out << serialize_digraph(m.graph, "mismatch");
        }
        return out.str();
    }

    auto verify_theorem(int max_n, const ObstructionCatalog & catalog, int threads, bool with_listing) -> TheoremReport
    {
        if (max_n < 1 || max_n > 5)
            throw PreconditionError("theorem verification needs 1 <= n <= 5");

        TheoremReport report;
        report.max_n = max_n;

        for (int n = 1 ; n <= max_n ; ++n) {
            auto classes = enumerate_reflexive_digraphs(n, threads);
            vector<char> has(classes.size()), holds(classes.size());

            parallel_for(long(classes.size()), threads, [&] (long i) {
                has[i] = find_min_max_bruteforce(classes[i]).has_value();
                holds[i] = ! first_failed_condition(classes[i], catalog).has_value();
            });

            report.classes_per_size.push_back(long(classes.size()));
            for (std::size_t i = 0 ; i < classes.size() ; ++i) {
                ++report.classes_checked;
                if (has[i])
                    ++report.with_min_max;
                if (has[i] != holds[i])
                    report.mismatches.push_back(TheoremMismatch{ classes[i], bool(has[i]), bool(holds[i]) });
                if (with_listing)
                    report.listing.push_back("n=" + to_string(n) + " code=" + to_string(canonical_code(classes[i]))
                            + " min_max=" + to_string(int(has[i])) + " conditions=" + to_string(int(holds[i])));
            }
        }

        return report;
    }
}
