#ifndef RADEMACHER_CONTOUR_QUADRATURE_HPP
#define RADEMACHER_CONTOUR_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <rademacher/hp/complex.hpp>

namespace rademacher::contour
{

enum class Rule { gauss_legendre_composite, trapezoid_periodic };

/// How a contour integral is discretized.
struct QuadratureSpec {
    std::size_t nodes = 128;
    hp::Precision precision = hp::kDefaultPrecision;
    double radius = 5.0;
    Rule rule = Rule::gauss_legendre_composite;
    /// Relative node-doubling change above which a result is flagged.
    double tolerance = 1e-10;
};

/// Throws std::invalid_argument unless nodes >= 8 and radius > 0.
void validate(const QuadratureSpec &spec);

/// Points per Gauss-Legendre panel in the composite rule.
inline constexpr std::size_t kPanelPoints = 32;

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<hp::Real> nodes;
    std::vector<hp::Real> weights;
};

/// Cached per (n, precision); computed by Newton iteration on P_n.
const GaussLegendreRule &gauss_legendre(std::size_t n, hp::Precision prec);

/// Sum in a fixed binary-tree order, independent of how the terms were produced.
hp::Complex pairwise_sum(std::span<const hp::Complex> terms);

using NodeFunction = std::function<hp::Complex(std::size_t)>;

/// values[i] = f(i) for i < count, evaluated with OpenMP. `f` must be pure.
std::vector<hp::Complex> evaluate_nodes(std::size_t count, const NodeFunction &f);
/// Runs body(i) for i < count with OpenMP; bodies must touch disjoint state.
void for_each_node(std::size_t count, const std::function<void(std::size_t)> &body);

/// Single-threaded reference for evaluate_nodes().
std::vector<hp::Complex> evaluate_nodes_serial(std::size_t count, const NodeFunction &f);

/// Abscissae and weights of a composite Gauss-Legendre rule on [a, b] with
/// `nodes` points in total (panels of kPanelPoints, or one smaller panel).
struct CompositeRule {
    std::vector<hp::Real> points;
    std::vector<hp::Real> weights;
};
CompositeRule composite_gauss_legendre(const hp::Real &a, const hp::Real &b, std::size_t nodes);

/// (1 / 2 pi i) * closed integral of f over |z - center| = radius (counterclockwise),
/// by the M-point trapezoid rule: (1/M) sum f(z_k) (z_k - center).
hp::Complex circle_integral(const hp::Complex &center, const hp::Real &radius, std::size_t nodes,
                            const std::function<hp::Complex(const hp::Complex &)> &f);
hp::Complex circle_integral_serial(const hp::Complex &center, const hp::Real &radius, std::size_t nodes,
                                   const std::function<hp::Complex(const hp::Complex &)> &f);

/// Integral of a real-parameter integrand over [a, b] with the composite rule.
hp::Complex integrate_interval(const hp::Real &a, const hp::Real &b, std::size_t nodes,
                               const std::function<hp::Complex(const hp::Real &)> &f);
hp::Complex integrate_interval_serial(const hp::Real &a, const hp::Real &b, std::size_t nodes,
                                      const std::function<hp::Complex(const hp::Real &)> &f);

} // namespace rademacher::contour

#endif
