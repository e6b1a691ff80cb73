/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minhom/max_flow.hh>
#include <minhom/errors.hh>

#include <limits>
#include <queue>

using std::int64_t;
using std::vector;

namespace minhom
{
    namespace
    {
        constexpr int64_t unbounded = std::numeric_limits<int64_t>::max();

        struct ResidualArc
        {
            int to, reverse;
            int64_t capacity, flow;
            bool infinite;

            auto residual() const -> int64_t
            {
                return infinite ? unbounded : capacity - flow;
            }
        };

        class Dinic
        {
            private:
                vector<vector<ResidualArc> > _out;
                vector<int> _level, _next;

                auto levels(int s, int t) -> bool
                {
                    std::fill(_level.begin(), _level.end(), -1);
                    std::queue<int> q;
                    _level[s] = 0;
                    q.push(s);
                    while (! q.empty()) {
                        int x = q.front();
                        q.pop();
                        for (auto & a : _out[x])
                            if (a.residual() > 0 && _level[a.to] < 0) {
                                _level[a.to] = _level[x] + 1;
                                q.push(a.to);
                            }
                    }
                    return _level[t] >= 0;
                }

                auto push(int x, int t, int64_t limit) -> int64_t
                {
                    if (x == t)
                        return limit;
                    for (int & k = _next[x] ; k < int(_out[x].size()) ; ++k) {
                        auto & a = _out[x][k];
                        if (a.residual() <= 0 || _level[a.to] != _level[x] + 1)
                            continue;
                        auto pushed = push(a.to, t, std::min(limit, a.residual()));
                        if (pushed > 0) {
                            a.flow += pushed;
                            _out[a.to][a.reverse].flow -= pushed;
                            return pushed;
                        }
                    }
                    return 0;
                }

            public:
                explicit Dinic(int n) :
                    _out(n),
                    _level(n),
                    _next(n)
                {
                }

                auto add(int from, int to, int64_t capacity, bool infinite) -> void
                {
                    int forward_index = int(_out[from].size());
                    int reverse_index = int(_out[to].size()) + (from == to ? 1 : 0);
                    _out[from].push_back(ResidualArc{ to, reverse_index, capacity, 0, infinite });
                    _out[to].push_back(ResidualArc{ from, forward_index, 0, 0, false });
                }

                auto run(int s, int t) -> int64_t
                {
                    int64_t total = 0;
                    while (levels(s, t)) {
                        std::fill(_next.begin(), _next.end(), 0);
                        while (auto f = push(s, t, unbounded)) {
                            if (f == unbounded)
                                throw PreconditionError("network has no finite cut");
                            total = checked_add(total, f);
                        }
                    }
                    return total;
                }

                auto reachable(int s) const -> vector<bool>
                {
                    vector<bool> seen(_out.size(), false);
                    vector<int> stack{ s };
                    seen[s] = true;
                    while (! stack.empty()) {
                        int x = stack.back();
                        stack.pop_back();
                        for (auto & a : _out[x])
                            if (a.residual() > 0 && ! seen[a.to]) {
                                seen[a.to] = true;
                                stack.push_back(a.to);
                            }
                    }
                    return seen;
                }
        };
    }

    auto CutNetwork::add_arc(int from, int to, Rational capacity) -> void
    {
        if (from < 0 || from >= _nodes || to < 0 || to >= _nodes)
            throw PreconditionError("cut network arc names an unknown node");
        if (capacity < Rational(0))
            throw PreconditionError("negative capacity " + capacity.to_string());
        _arcs.push_back(CapacityArc{ from, to, false, capacity });
    }

    auto CutNetwork::add_infinite_arc(int from, int to) -> void
    {
        if (from < 0 || from >= _nodes || to < 0 || to >= _nodes)
            throw PreconditionError("cut network arc names an unknown node");
        _arcs.push_back(CapacityArc{ from, to, true, Rational(0) });
    }

    auto max_flow(const CutNetwork & net) -> CutResult
    {
        int64_t scale = 1;
        for (auto & a : net.arcs())
            if (! a.infinite)
                scale = checked_lcm(scale, a.capacity.denominator());

        // Any flow is bounded by the total finite capacity, so if that fits, every
        // intermediate sum does too.
        int64_t total_capacity = 0;
        Dinic dinic(net.node_count());
        for (auto & a : net.arcs()) {
            int64_t c = 0;
            if (! a.infinite) {
                c = checked_mul(a.capacity.numerator(), scale / a.capacity.denominator());
                total_capacity = checked_add(total_capacity, c);
            }
            dinic.add(a.from, a.to, c, a.infinite);
        }
        if (total_capacity == unbounded)
            throw OverflowError("total capacity reaches the infinite sentinel");

        auto value = dinic.run(CutNetwork::source, CutNetwork::sink);
        return CutResult{ Rational(value, scale), dinic.reachable(CutNetwork::source) };
    }

    auto cut_capacity(const CutNetwork & net, const vector<bool> & source_side) -> Rational
    {
        if (int(source_side.size()) != net.node_count() || ! source_side[CutNetwork::source] || source_side[CutNetwork::sink])
            throw PreconditionError("not an s-t cut");
        Rational result;
        for (auto & a : net.arcs())
            if (source_side[a.from] && ! source_side[a.to]) {
                if (a.infinite)
                    throw PreconditionError("cut crosses an infinite arc");
                result += a.capacity;
            }
        return result;
    }
}
