#include <rademacher/contour/quadrature.hpp>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace rademacher::contour
{

using hp::Complex;
using hp::Precision;
using hp::Real;

void validate(const QuadratureSpec &spec)
{
    if (spec.nodes < 8) {
        throw std::invalid_argument("QuadratureSpec: nodes must be >= 8");
    }
    if (!(spec.radius > 0.0)) {
        throw std::invalid_argument("QuadratureSpec: radius must be positive");
    }
    if (spec.precision < hp::kMinPrecision) {
        throw std::invalid_argument("QuadratureSpec: precision must be >= 64 bits");
    }
}

namespace
{

GaussLegendreRule compute_rule(std::size_t n, Precision prec)
{
    const Precision wp = prec + 32;
    GaussLegendreRule rule;
    rule.nodes.resize(n, Real(prec));
    rule.weights.resize(n, Real(prec));
    const Real eps = hp::ldexp_one(-static_cast<long>(wp) + 8, wp);
    const double pi_d = 3.14159265358979323846;
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        Real x(std::cos(pi_d * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5)), wp);
        Real derivative(wp);
        for (int iter = 0; iter < 100; ++iter) {
            // P_n(x) and P_{n-1}(x) by the three-term recurrence.
            Real p0(1L, wp);
            Real p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                Real p2 = (x * p1 * static_cast<long>(2 * k - 1) - p0 * static_cast<long>(k - 1)) /
                          static_cast<long>(k);
                p0 = std::move(p1);
                p1 = std::move(p2);
            }
            derivative = (x * p1 - p0) * static_cast<long>(n) / (x * x - 1L);
            Real step = p1 / derivative;
            x -= step;
            if (abs(step) < eps) {
                break;
            }
        }
        const Real w = Real(2L, wp) / ((1L - x * x) * derivative * derivative);
        rule.nodes[i] = (-x).rounded(prec);
        rule.nodes[n - 1 - i] = x.rounded(prec);
        rule.weights[i] = w.rounded(prec);
        rule.weights[n - 1 - i] = w.rounded(prec);
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = Real(prec);
    }
    return rule;
}

Complex pairwise_range(std::span<const Complex> terms)
{
    if (terms.size() == 1) {
        return terms[0];
    }
    const std::size_t half = terms.size() / 2;
    return pairwise_range(terms.first(half)) + pairwise_range(terms.subspan(half));
}

} // namespace

const GaussLegendreRule &gauss_legendre(std::size_t n, Precision prec)
{
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, Precision>, std::unique_ptr<GaussLegendreRule>> cache;
    std::lock_guard lock(mutex);
    auto &slot = cache[{n, prec}];
    if (!slot) {
        slot = std::make_unique<GaussLegendreRule>(compute_rule(n, prec));
    }
    return *slot;
}

Complex pairwise_sum(std::span<const Complex> terms)
{
    if (terms.empty()) {
        return Complex();
    }
    return pairwise_range(terms);
}

std::vector<Complex> evaluate_nodes(std::size_t count, const NodeFunction &f)
{
    std::vector<Complex> values(count);
    const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        values[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    }
    return values;
}

void for_each_node(std::size_t count, const std::function<void(std::size_t)> &body)
{
    const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        body(static_cast<std::size_t>(i));
    }
}

std::vector<Complex> evaluate_nodes_serial(std::size_t count, const NodeFunction &f)
{
    std::vector<Complex> values;
    values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        values.push_back(f(i));
    }
    return values;
}

CompositeRule composite_gauss_legendre(const Real &a, const Real &b, std::size_t nodes)
{
    const Precision prec = std::min(a.precision(), b.precision());
    const std::size_t per_panel = std::min(nodes, kPanelPoints);
    const std::size_t panels = (nodes + per_panel - 1) / per_panel;
    const GaussLegendreRule &rule = gauss_legendre(per_panel, prec);
    const Real width = (b - a) / static_cast<long>(panels);
    const Real half = width / 2L;

    CompositeRule out;
    out.points.reserve(panels * per_panel);
    out.weights.reserve(panels * per_panel);
    for (std::size_t p = 0; p < panels; ++p) {
        const Real mid = a + width * static_cast<long>(p) + half;
        for (std::size_t i = 0; i < per_panel; ++i) {
            out.points.push_back(mid + half * rule.nodes[i]);
            out.weights.push_back(half * rule.weights[i]);
        }
    }
    return out;
}

namespace
{

template <typename Evaluate>
Complex circle_integral_impl(const Complex &center, const Real &radius, std::size_t nodes,
                             const std::function<Complex(const Complex &)> &f, Evaluate evaluate)
{
    const Precision prec = std::min(center.precision(), radius.precision());
    const Real step = hp::pi(prec) * 2L / static_cast<long>(nodes);
    const auto values = evaluate(nodes, [&](std::size_t k) {
        const Complex offset = expi(step * static_cast<long>(k)) * radius;
        return f(center + offset) * offset;
    });
    return pairwise_sum(values) / static_cast<long>(nodes);
}

template <typename Evaluate>
Complex integrate_interval_impl(const Real &a, const Real &b, std::size_t nodes,
                                const std::function<Complex(const Real &)> &f, Evaluate evaluate)
{
    const CompositeRule rule = composite_gauss_legendre(a, b, nodes);
    const auto values = evaluate(rule.points.size(),
                                 [&](std::size_t k) { return f(rule.points[k]) * rule.weights[k]; });
    return pairwise_sum(values);
}

} // namespace

Complex circle_integral(const Complex &center, const Real &radius, std::size_t nodes,
                        const std::function<Complex(const Complex &)> &f)
{
    return circle_integral_impl(center, radius, nodes, f, evaluate_nodes);
}

Complex circle_integral_serial(const Complex &center, const Real &radius, std::size_t nodes,
                               const std::function<Complex(const Complex &)> &f)
{
    return circle_integral_impl(center, radius, nodes, f, evaluate_nodes_serial);
}

Complex integrate_interval(const Real &a, const Real &b, std::size_t nodes,
                           const std::function<Complex(const Real &)> &f)
{
    return integrate_interval_impl(a, b, nodes, f, evaluate_nodes);
}

Complex integrate_interval_serial(const Real &a, const Real &b, std::size_t nodes,
                                  const std::function<Complex(const Real &)> &f)
{
    return integrate_interval_impl(a, b, nodes, f, evaluate_nodes_serial);
}

} // namespace rademacher::contour
