/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minhom/ordering.hh>
#include <minhom/errors.hh>

#include <algorithm>
#include <numeric>

using std::function;
using std::nullopt;
using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace minhom
{
    namespace
    {
        auto check_limit(int size, const SearchLimits & limits, const string & what) -> void
        {
            if (size > limits.max_vertices && ! limits.override_limit)
                throw BudgetExceeded(what + " has " + to_string(size) + " vertices, over the search limit of "
                        + to_string(limits.max_vertices) + " (override required)");
        }

        auto check_order_size(int expected, const Ordering & order, const string & what) -> void
        {
            if (order.size() != expected)
                throw PreconditionError(what + " ordering has " + to_string(order.size())
                        + " entries but there are " + to_string(expected) + " vertices");
        }

        /// Does appending x to the Min-Max prefix `placed` keep it Min-Max?
        auto extends_general(const Digraph & h, const vector<Vertex> & placed, Vertex x) -> bool
        {
            auto n = placed.size();
            // x as j (the later of i, j); r may be x too.
            for (std::size_t a = 0 ; a < n ; ++a) {
                Vertex i = placed[a];
                for (std::size_t b = 0 ; b <= n ; ++b) {
                    Vertex s = b < n ? placed[b] : x;
                    for (std::size_t c = b + 1 ; c <= n ; ++c) {
                        Vertex r = c < n ? placed[c] : x;
                        if (h.has_arc(i, r) && h.has_arc(x, s) && ! (h.has_arc(i, s) && h.has_arc(x, r)))
                            return false;
                    }
                }
            }
            // x as r only, with i < j both already placed.
            for (std::size_t a = 0 ; a < n ; ++a)
                for (std::size_t b = a + 1 ; b < n ; ++b) {
                    Vertex i = placed[a], j = placed[b];
                    for (std::size_t c = 0 ; c < n ; ++c) {
                        Vertex s = placed[c];
                        if (h.has_arc(i, x) && h.has_arc(j, s) && ! (h.has_arc(i, s) && h.has_arc(j, x)))
                            return false;
                    }
                }
            return true;
        }

        auto extends_reflexive(const Digraph & h, const vector<Vertex> & placed, Vertex k) -> bool
        {
            auto n = placed.size();
            for (std::size_t a = 0 ; a < n ; ++a) {
                Vertex i = placed[a];
                bool forward = h.has_arc(i, k), backward = h.has_arc(k, i);
                if (! forward && ! backward)
                    continue;
                for (std::size_t b = a + 1 ; b < n ; ++b) {
                    Vertex j = placed[b];
                    if (forward && ! (h.has_arc(i, j) && h.has_arc(j, k)))
                        return false;
                    if (backward && ! (h.has_arc(k, j) && h.has_arc(j, i)))
                        return false;
                }
            }
            return true;
        }

        struct BipartiteSearch
        {
            const BipartiteGraph & graph;
            const function<bool (const BipartiteOrdering &)> & visit;
            vector<Vertex> white, black;
            vector<bool> white_used, black_used;
            bool stopped = false;

            auto white_ok(Vertex x) const -> bool
            {
                // x is the new last white j.
                for (auto i : white)
                    for (std::size_t a = 0 ; a < black.size() ; ++a)
                        for (std::size_t b = a + 1 ; b < black.size() ; ++b) {
                            Vertex s = black[a], r = black[b];
                            if (graph.has_edge(i, r) && graph.has_edge(x, s)
                                    && ! (graph.has_edge(i, s) && graph.has_edge(x, r)))
                                return false;
                        }
                return true;
            }

            auto black_ok(Vertex y) const -> bool
            {
                // y is the new last black r.
                for (std::size_t a = 0 ; a < white.size() ; ++a)
                    for (std::size_t b = a + 1 ; b < white.size() ; ++b) {
                        Vertex i = white[a], j = white[b];
                        if (! graph.has_edge(i, y))
                            continue;
                        for (auto s : black)
                            if (graph.has_edge(j, s) && ! (graph.has_edge(i, s) && graph.has_edge(j, y)))
                                return false;
                    }
                return true;
            }

            auto run() -> void
            {
                if (stopped)
                    return;

                int nw = graph.white_size(), nb = graph.black_size();
                if (int(white.size()) == nw && int(black.size()) == nb) {
                    if (! visit(BipartiteOrdering{ Ordering(white), Ordering(black) }))
                        stopped = true;
                    return;
                }

                bool place_white = int(white.size()) < nw && (white.size() <= black.size() || int(black.size()) == nb);
                if (place_white) {
                    for (Vertex x = 0 ; x < nw && ! stopped ; ++x) {
                        if (white_used[x] || ! white_ok(x))
                            continue;
                        white_used[x] = true;
                        white.push_back(x);
                        run();
                        white.pop_back();
                        white_used[x] = false;
                    }
                }
                else {
                    for (Vertex y = 0 ; y < nb && ! stopped ; ++y) {
                        if (black_used[y] || ! black_ok(y))
                            continue;
                        black_used[y] = true;
                        black.push_back(y);
                        run();
                        black.pop_back();
                        black_used[y] = false;
                    }
                }
            }
        };

        auto count_proper_pairs(const vector<int> & white_pos, const vector<int> & black_pos) -> int
        {
            int result = 0, n = int(white_pos.size());
            for (int a = 0 ; a < n ; ++a)
                for (int b = a + 1 ; b < n ; ++b)
                    if ((white_pos[a] < white_pos[b]) == (black_pos[a] < black_pos[b]))
                        ++result;
            return result;
        }
    }

    Ordering::Ordering(vector<Vertex> sequence) :
        _sequence(std::move(sequence)),
        _position(_sequence.size(), -1)
    {
        for (int k = 0 ; k < int(_sequence.size()) ; ++k) {
            auto v = _sequence[k];
            if (v < 0 || v >= int(_sequence.size()) || _position[v] != -1)
                throw PreconditionError("ordering is not a permutation");
            _position[v] = k;
        }
    }

    auto Ordering::identity(int n) -> Ordering
    {
        vector<Vertex> s(n);
        std::iota(s.begin(), s.end(), 0);
        return Ordering(s);
    }

    auto Ordering::reversed() const -> Ordering
    {
        return Ordering(vector<Vertex>(_sequence.rbegin(), _sequence.rend()));
    }

    auto is_min_max(const Digraph & h, const Ordering & order) -> bool
    {
        check_order_size(h.size(), order, "template");
        int n = h.size();
        auto & seq = order.sequence();
        for (int a = 0 ; a < n ; ++a)
            for (int b = a + 1 ; b < n ; ++b) {
                Vertex i = seq[a], j = seq[b];
                for (int c = 0 ; c < n ; ++c)
                    for (int d = c + 1 ; d < n ; ++d) {
                        Vertex s = seq[c], r = seq[d];
                        if (h.has_arc(i, r) && h.has_arc(j, s) && ! (h.has_arc(i, s) && h.has_arc(j, r)))
                            return false;
                    }
            }
        return true;
    }

    auto is_min_max_reflexive(const Digraph & h, const Ordering & order) -> bool
    {
        check_order_size(h.size(), order, "template");
        if (! h.is_reflexive())
            throw PreconditionError("the shortcut Min-Max test needs a reflexive digraph");
        int n = h.size();
        auto & seq = order.sequence();
        for (int a = 0 ; a < n ; ++a)
            for (int c = a + 2 ; c < n ; ++c) {
                Vertex i = seq[a], k = seq[c];
                for (int b = a + 1 ; b < c ; ++b) {
                    Vertex j = seq[b];
                    if (h.has_arc(i, k) && ! (h.has_arc(i, j) && h.has_arc(j, k)))
                        return false;
                    if (h.has_arc(k, i) && ! (h.has_arc(k, j) && h.has_arc(j, i)))
                        return false;
                }
            }
        return true;
    }

    auto is_bipartite_min_max(const BipartiteGraph & b, const BipartiteOrdering & order) -> bool
    {
        if (order.white.size() != b.white_size() || order.black.size() != b.black_size())
            throw PreconditionError("bipartite ordering does not cover the colour classes");
        auto & ws = order.white.sequence();
        auto & bs = order.black.sequence();
        for (int a = 0 ; a < b.white_size() ; ++a)
            for (int c = a + 1 ; c < b.white_size() ; ++c) {
                Vertex i = ws[a], j = ws[c];
                for (int d = 0 ; d < b.black_size() ; ++d)
                    for (int e = d + 1 ; e < b.black_size() ; ++e) {
                        Vertex s = bs[d], r = bs[e];
                        if (b.has_edge(i, r) && b.has_edge(j, s) && ! (b.has_edge(i, s) && b.has_edge(j, r)))
                            return false;
                    }
            }
        return true;
    }

    auto for_each_min_max(const Digraph & h, const function<bool (const Ordering &)> & visit,
            const SearchLimits & limits) -> void
    {
        check_limit(h.size(), limits, "template");
        bool reflexive = h.is_reflexive();
        int n = h.size();
        vector<Vertex> placed;
        vector<bool> used(n, false);
        bool stopped = false;

        function<void ()> extend = [&] () {
            if (int(placed.size()) == n) {
                if (! visit(Ordering(placed)))
                    stopped = true;
                return;
            }
            for (Vertex x = 0 ; x < n && ! stopped ; ++x) {
                if (used[x])
                    continue;
                if (! (reflexive ? extends_reflexive(h, placed, x) : extends_general(h, placed, x)))
                    continue;
                used[x] = true;
                placed.push_back(x);
                extend();
                placed.pop_back();
                used[x] = false;
            }
        };
        extend();
    }

    auto find_min_max_bruteforce(const Digraph & h, const SearchLimits & limits) -> optional<Ordering>
    {
        optional<Ordering> result;
        for_each_min_max(h, [&] (const Ordering & o) { result = o; return false; }, limits);
        return result;
    }

    auto for_each_bipartite_min_max(const BipartiteGraph & b, const function<bool (const BipartiteOrdering &)> & visit,
            const SearchLimits & limits) -> void
    {
        check_limit(b.white_size(), limits, "white colour class");
        check_limit(b.black_size(), limits, "black colour class");
        BipartiteSearch search{ b, visit, { }, { }, vector<bool>(b.white_size(), false), vector<bool>(b.black_size(), false) };
        search.run();
    }

    auto find_bipartite_min_max(const BipartiteGraph & b, const SearchLimits & limits) -> optional<BipartiteOrdering>
    {
        optional<BipartiteOrdering> result;
        for_each_bipartite_min_max(b, [&] (const BipartiteOrdering & o) { result = o; return false; }, limits);
        return result;
    }

    auto stuck_case_name(StuckCase c) -> string
    {
        switch (c) {
            case StuckCase::Case1:       return "Case 1";
            case StuckCase::Case2:       return "Case 2";
            case StuckCase::Case1Mirror: return "Case 1 (mirror)";
            case StuckCase::Case2Mirror: return "Case 2 (mirror)";
        }
        return "?";
    }

    auto classify_stuck_witnesses(const Digraph & h, Vertex u, Vertex v, Vertex s, Vertex t) -> optional<StuckCase>
    {
        // x'y'' is an edge of B(H) exactly when xy is an arc of H.
        auto e = [&] (Vertex white, Vertex black) { return h.has_arc(white, black); };
        if (e(s, v) && e(v, t) && ! e(s, u) && ! e(u, t))
            return StuckCase::Case1;
        if (e(s, v) && e(u, t) && ! e(s, u) && ! e(v, t))
            return StuckCase::Case2;
        if (e(s, u) && e(u, t) && ! e(s, v) && ! e(v, t))
            return StuckCase::Case1Mirror;
        if (e(s, u) && e(v, t) && ! e(s, v) && ! e(u, t))
            return StuckCase::Case2Mirror;
        return nullopt;
    }

    auto exchange_construct(const Digraph & h, const BipartiteOrdering & start) -> ExchangeOutcome
    {
        if (! h.is_reflexive())
            throw PreconditionError("exchange construction needs a reflexive digraph");
        auto b = bipartite_double(h);
        if (start.white.size() != h.size() || start.black.size() != h.size() || ! is_bipartite_min_max(b, start))
            throw PreconditionError("start ordering is not a bipartite Min-Max ordering of B(H)");

        int n = h.size();
        vector<Vertex> white = start.white.sequence(), black = start.black.sequence();
        vector<int> white_pos(n), black_pos(n);
        auto reindex = [&] () {
            for (int k = 0 ; k < n ; ++k) {
                white_pos[white[k]] = k;
                black_pos[black[k]] = k;
            }
        };
        reindex();

        auto still_min_max = [&] () {
            return is_bipartite_min_max(b, BipartiteOrdering{ Ordering(white), Ordering(black) });
        };

        int swaps = 0, proper = count_proper_pairs(white_pos, black_pos);
        while (true) {
            optional<std::pair<Vertex, Vertex> > first_improper;
            bool exchanged = false;

            for (int a = 0 ; a < n && ! exchanged ; ++a)
                for (int c = a + 1 ; c < n && ! exchanged ; ++c) {
                    Vertex v = white[a], u = white[c];
                    if (black_pos[u] > black_pos[v])
                        continue;
                    if (! first_improper)
                        first_improper = { u, v };

                    std::swap(black[black_pos[u]], black[black_pos[v]]);
                    if (still_min_max()) {
                        exchanged = true;
                        break;
                    }
                    std::swap(black[black_pos[u]], black[black_pos[v]]);

                    std::swap(white[white_pos[u]], white[white_pos[v]]);
                    if (still_min_max()) {
                        exchanged = true;
                        break;
                    }
                    std::swap(white[white_pos[u]], white[white_pos[v]]);
                }

            if (! first_improper)
                break;

            if (! exchanged) {
                auto [u, v] = *first_improper;
                // s separates v'' from u'' among whites, t separates u' from v' among blacks;
                // the unmirrored witness first, then the mirrored one.
                auto pick_white = [&] (Vertex in, Vertex out) -> optional<Vertex> {
                    for (auto x : white)
                        if (h.has_arc(x, in) && ! h.has_arc(x, out))
                            return x;
                    return nullopt;
                };
                auto pick_black = [&] (Vertex in, Vertex out) -> optional<Vertex> {
                    for (auto y : black)
                        if (h.has_arc(in, y) && ! h.has_arc(out, y))
                            return y;
                    return nullopt;
                };
                auto s = pick_white(v, u);
                if (! s)
                    s = pick_white(u, v);
                auto t = pick_black(u, v);
                if (! t)
                    t = pick_black(v, u);
                if (! s || ! t)
                    throw InternalError("stuck improper pair with twin copies, which can always be exchanged");
                auto kind = classify_stuck_witnesses(h, u, v, *s, *t);
                if (! kind)
                    throw InternalError("stuck witnesses fit none of the case patterns");
                return StuckReport{ u, v, *s, *t, *kind, BipartiteOrdering{ Ordering(white), Ordering(black) }, swaps };
            }

            reindex();
            ++swaps;
            int now_proper = count_proper_pairs(white_pos, black_pos);
            if (now_proper <= proper)
                throw InternalError("an exchange failed to increase the number of proper pairs");
            proper = now_proper;
        }

        Ordering result(white);
        if (! is_min_max(h, result))
            throw InternalError("proper bipartite Min-Max ordering did not give a Min-Max ordering");
        return ExchangeSuccess{ result, swaps };
    }
}
