#include <algorithm>
#include <cmath>
#include <string>

#include <rademacher/contour/contour.hpp>
#include <rademacher/errors.hpp>

namespace rademacher::contour
{

using hp::Complex;
using hp::Precision;
using hp::Real;

namespace
{

Precision required_precision(unsigned long n)
{
    return 64 + static_cast<Precision>(std::ceil(1.5 * static_cast<double>(n)));
}

void check_preconditions(unsigned long n, const QuadratureSpec &spec)
{
    validate(spec);
    if (n == 0) {
        throw RangeError("cauchy_oracle: N must be positive");
    }
    if (spec.rule != Rule::trapezoid_periodic) {
        throw DomainError("cauchy_oracle: closed circle needs the trapezoid rule");
    }
    // For N = 1 the only pole is x = 0, any radius works.
    if (n >= 2) {
        const double nearest_pole = 2.0 * std::sin(3.14159265358979323846 / static_cast<double>(n));
        if (!(spec.radius < nearest_pole)) {
            throw DomainError("cauchy_oracle: radius " + std::to_string(spec.radius) +
                              " reaches the pole at distance " + std::to_string(nearest_pole));
        }
    }
    if (spec.precision < required_precision(n)) {
        throw DomainError("cauchy_oracle: precision must be at least " + std::to_string(required_precision(n)) +
                          " bits for N = " + std::to_string(n));
    }
    if (spec.nodes <= n) {
        throw DomainError("cauchy_oracle: need more than N nodes to resolve the order-N pole");
    }
}

} // namespace

QuadratureSpec default_oracle_spec(unsigned long n)
{
    QuadratureSpec spec;
    spec.rule = Rule::trapezoid_periodic;
    // Capped at 1 so that N = 2 (pole at -2) keeps a ratio of 1/2 to the nearest pole.
    spec.radius = n <= 1 ? 0.5 : std::min(1.0, 3.0 / static_cast<double>(n));
    spec.nodes = 4 * n + 64;
    spec.precision = std::max<Precision>(hp::kDefaultPrecision, required_precision(n));
    return spec;
}

std::vector<OracleValue> cauchy_oracle_all(unsigned long n, const QuadratureSpec &spec)
{
    check_preconditions(n, spec);
    const Precision prec = spec.precision;
    const std::size_t fine_nodes = 2 * spec.nodes;
    const Real radius(spec.radius, prec);
    const Real step = hp::pi(prec) * 2L / static_cast<long>(fine_nodes);

    // g_k = x_k / prod_j (1 - (1 + x_k)^j); the M-node rule uses every other node.
    std::vector<Complex> x(fine_nodes);
    const auto g = evaluate_nodes(fine_nodes, [&](std::size_t k) {
        x[k] = expi(step * static_cast<long>(k)) * radius;
        const Complex y = x[k] + 1L;
        Complex power = y;
        Complex product = 1L - y;
        for (unsigned long j = 2; j <= n; ++j) {
            power *= y;
            product *= 1L - power;
        }
        return x[k] / product;
    });

    std::vector<OracleValue> out;
    out.reserve(n);
    std::vector<Complex> term = g; // g_k x_k^{l-1}
    std::vector<Complex> coarse(spec.nodes);
    for (unsigned long l = 1; l <= n; ++l) {
        if (l > 1) {
            for_each_node(fine_nodes, [&](std::size_t k) { term[k] *= x[k]; });
        }
        for (std::size_t k = 0; k < spec.nodes; ++k) {
            coarse[k] = term[2 * k];
        }
        Complex fine_value = pairwise_sum(term) / static_cast<long>(fine_nodes);
        const Complex coarse_value = pairwise_sum(coarse) / static_cast<long>(spec.nodes);
        const double delta = abs(fine_value - coarse_value).to_double();
        out.push_back({std::move(fine_value), delta});
    }
    return out;
}

OracleValue cauchy_oracle(unsigned long l, unsigned long n, const QuadratureSpec &spec)
{
    if (l == 0 || l > n) {
        throw RangeError("cauchy_oracle: l must lie in 1..N");
    }
    auto all = cauchy_oracle_all(n, spec);
    return std::move(all[l - 1]);
}

} // namespace rademacher::contour
