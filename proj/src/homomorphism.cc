/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minhom/homomorphism.hh>
#include <minhom/errors.hh>

using std::to_string;
using std::vector;

namespace minhom
{
    auto check_cost_shape(const Digraph & g, const Digraph & h, const CostMatrix & costs) -> void
    {
        if (costs.instance_size() != g.size() || costs.template_size() != h.size())
            throw PreconditionError("cost matrix is " + to_string(costs.instance_size()) + "x" + to_string(costs.template_size())
                    + " but the instance has " + to_string(g.size()) + " vertices and the template " + to_string(h.size()));
    }

    auto verify_homomorphism(const Digraph & g, const Digraph & h, const vector<Vertex> & f,
            const CostMatrix & costs) -> HomomorphismCheck
    {
        check_cost_shape(g, h, costs);
        if (int(f.size()) != g.size())
            throw PreconditionError("mapping is not total on the instance");
        for (auto i : f)
            if (i < 0 || i >= h.size())
                throw PreconditionError("mapping sends a vertex to unknown template vertex " + to_string(i));

        bool valid = true;
        for (auto & a : g.arcs())
            if (! h.has_arc(f[a.from], f[a.to])) {
                valid = false;
                break;
            }

        Rational cost;
        for (Vertex u = 0 ; u < g.size() ; ++u)
            cost += costs.at(u, f[u]);
        return HomomorphismCheck{ valid, cost };
    }
}
