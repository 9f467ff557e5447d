#include <cmath>
#include <stdexcept>

#include <rademacher/contour/contour.hpp>
#include <rademacher/errors.hpp>
#include <rademacher/specfun/specfun.hpp>

namespace rademacher::contour
{

using hp::Complex;
using hp::Precision;
using hp::Real;

LeftArcIntegrator::LeftArcIntegrator(std::size_t nodes, Precision prec, double radius) : prec_(prec)
{
    if (nodes < 8) {
        throw std::invalid_argument("LeftArcIntegrator: nodes must be >= 8");
    }
    const Real pi = hp::pi(prec);
    const Real r(radius, prec);
    const Real pi2_6 = pi * pi / 6L;

    auto build = [&](const Real &from, const Real &to) {
        const CompositeRule rule = composite_gauss_legendre(from, to, nodes);
        std::vector<Node> arc(rule.points.size(), Node{Complex(prec), Complex(prec), Complex(prec),
                                                         Complex(prec), Complex(prec)});
        // The dilogarithm dominates; node evaluations are independent.
        for_each_node(rule.points.size(), [&](std::size_t k) {
            Node &node = arc[k];
            node.z = expi(rule.points[k]) * r;
            node.jacobian = mul_i(node.z) * rule.weights[k];
            node.log_minus_z = log(-node.z);
            const Complex ez = exp(node.z);
            node.half_log_one_minus = log(1L - ez) / 2L;
            node.rate = (specfun::dilog(ez).value - pi2_6) / node.z;
        });
        return arc;
    };
    upper_ = build(pi / 2L, pi);
    lower_ = build(pi, pi * 3L / 2L);
}

Complex LeftArcIntegrator::integrate(const std::vector<Node> &arc, unsigned long l, unsigned long n) const
{
    if (l == 0 || n == 0) {
        throw RangeError("approximate integral: l and N must be positive");
    }
    const Real power = Real(static_cast<long>(l), prec_) - Real(0.5, prec_);
    const Real nr(static_cast<long>(n), prec_);
    const auto terms = evaluate_nodes(arc.size(), [&](std::size_t k) {
        const Node &node = arc[k];
        const Complex exponent =
            node.log_minus_z * power - node.half_log_one_minus + node.z / nr + node.rate * nr;
        return exp(exponent) * node.jacobian;
    });
    return pairwise_sum(terms);
}

Complex LeftArcIntegrator::upper_arc(unsigned long l, unsigned long n) const
{
    return integrate(upper_, l, n);
}

Complex LeftArcIntegrator::lower_arc(unsigned long l, unsigned long n) const
{
    return integrate(lower_, l, n);
}

Complex LeftArcIntegrator::prefactor(unsigned long l, unsigned long n) const
{
    // (-1)^{l-1} / (N^{l+1/2} (2 pi)^{3/2} i)
    const Real nr(static_cast<long>(n), prec_);
    const Real two_pi = hp::pi(prec_) * 2L;
    const Real magnitude = hp::pow(nr, static_cast<long>(l)) * sqrt(nr) * two_pi * sqrt(two_pi);
    const Real sign(l % 2 == 1 ? 1L : -1L, prec_);
    return Complex(Real(prec_), -(sign / magnitude)); // 1/i = -i
}

Real LeftArcIntegrator::approximate_C(unsigned long l, unsigned long n) const
{
    // upper + lower = upper - conj(upper) = 2i Im(upper)
    const Complex up = upper_arc(l, n);
    const Complex full(Real(prec_), up.im() * 2L);
    return (prefactor(l, n) * full).re();
}

Complex LeftArcIntegrator::approximate_C_full(unsigned long l, unsigned long n) const
{
    return prefactor(l, n) * (upper_arc(l, n) + lower_arc(l, n));
}

IntegralApprox integral_approx_C(unsigned long l, unsigned long n, const QuadratureSpec &spec)
{
    validate(spec);
    if (spec.rule != Rule::gauss_legendre_composite) {
        throw std::invalid_argument("integral_approx_C: open arc needs the Gauss-Legendre rule");
    }
    const LeftArcIntegrator coarse(spec.nodes, spec.precision);
    const LeftArcIntegrator fine(2 * spec.nodes, spec.precision);
    const Real a = coarse.approximate_C(l, n);
    Real b = fine.approximate_C(l, n);
    const double delta = abs(a - b).to_double();
    const bool converged = delta <= spec.tolerance * std::abs(b.to_double());
    return {std::move(b), delta, converged};
}

} // namespace rademacher::contour
