/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINHOM_HOMOMORPHISM_HH
#define MINHOM_HOMOMORPHISM_HH 1

#include <minhom/graph.hh>
#include <minhom/rational.hh>

#include <vector>

namespace minhom
{
    /// c_i(u): one rational per (instance vertex u, template vertex i). Always total.
    class CostMatrix
    {
        private:
            int _instance_size = 0, _template_size = 0;
            std::vector<Rational> _values;

        public:
            CostMatrix() = default;

            CostMatrix(int instance_size, int template_size, Rational fill = Rational(0)) :
                _instance_size(instance_size),
                _template_size(template_size),
                _values(std::size_t(instance_size) * std::size_t(template_size), fill)
            {
            }

            auto instance_size() const -> int { return _instance_size; }
            auto template_size() const -> int { return _template_size; }

            auto at(Vertex u, Vertex i) const -> const Rational &
            {
                return _values.at(std::size_t(u) * _template_size + i);
            }

            auto set(Vertex u, Vertex i, Rational value) -> void
            {
                _values.at(std::size_t(u) * _template_size + i) = value;
            }

            auto operator== (const CostMatrix &) const -> bool = default;
    };

    struct Homomorphism
    {
        std::vector<Vertex> image;
        Rational cost;
    };

    struct HomomorphismCheck
    {
        bool valid;
        Rational cost;
    };

    /**
     * Is f a homomorphism of G to H, and what does it cost? The cost is the sum
     * of c_{f(u)}(u) whether or not f is valid. Throws PreconditionError when f
     * is not total on V(G), names a vertex outside H, or the cost matrix has
     * the wrong shape.
     */
    auto verify_homomorphism(const Digraph & g, const Digraph & h, const std::vector<Vertex> & f,
            const CostMatrix & costs) -> HomomorphismCheck;

    auto check_cost_shape(const Digraph & g, const Digraph & h, const CostMatrix & costs) -> void;
}

#endif
