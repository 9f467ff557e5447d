#include <cmath>

#include <rademacher/contour/contour.hpp>
#include <rademacher/errors.hpp>
#include <rademacher/specfun/specfun.hpp>

namespace rademacher::contour
{

using hp::Complex;
using hp::Precision;
using hp::Real;

MonotoneReport check_monotone_exponent(std::span<const Complex> path)
{
    MonotoneReport report;
    report.values.reserve(path.size());
    for (const Complex &z : path) {
        report.values.push_back(specfun::exponent_rate(z).re());
    }
    for (std::size_t i = 0; i + 1 < report.values.size(); ++i) {
        if (report.values[i + 1] < report.values[i]) {
            report.violations.push_back(i);
        }
    }
    report.monotone = report.violations.empty();
    return report;
}

std::vector<Complex> segment(const Complex &from, const Complex &to, std::size_t samples)
{
    std::vector<Complex> out;
    if (samples == 0) {
        return out;
    }
    out.reserve(samples);
    if (samples == 1) {
        out.push_back(from);
        return out;
    }
    const Complex delta = (to - from) / static_cast<long>(samples - 1);
    for (std::size_t k = 0; k < samples; ++k) {
        out.push_back(from + delta * static_cast<long>(k));
    }
    return out;
}

bool check_lower_bound_inequality(std::span<const InequalityPoint> grid, double rhs_scale)
{
    bool holds = true;
    for (const auto &pt : grid) {
        if (!(pt.j_over_n > 0.0 && pt.j_over_n <= 0.1) || !(pt.re_z >= -1.0 && pt.re_z <= 0.0)) {
            throw DomainError("check_lower_bound_inequality: grid point outside (0, 1/10] x [-1, 0]");
        }
        const long double r = pt.j_over_n;
        const long double x = r * pt.re_z;
        const long double s = std::sin(2.5L * r);
        // 1 + e^{2x} - 2 cos(y) e^x rewritten as (e^x - 1)^2 + 4 e^x sin^2(y/2): no cancellation as r -> 0.
        const long double em1 = std::expm1(x);
        const long double lhs = em1 * em1 + 4.0L * std::exp(x) * s * s;
        const long double rhs = rhs_scale * 11.0L / 12.0L * r * r *
                                (static_cast<long double>(pt.re_z) * pt.re_z + 25.0L);
        if (lhs < rhs) {
            holds = false;
        }
    }
    return holds;
}

ConstantC constant_c(Precision prec)
{
    const Precision wp = prec + 32;
    const Real half(0.5, wp);
    const Real five(5L, wp);
    const Complex e_half = expi(half);
    const Complex e_five = expi(five);
    const Complex i_unit(Real(wp), Real(1L, wp));

    Complex bracket = Complex(Real(wp), Real(99L, wp));
    bracket += log(1L - e_half) * 8L;
    bracket -= log(1L - e_five) * 80L;
    bracket -= Complex(log(1L - cos(half)) * 4L);
    bracket += Complex(log(1L - cos(five)) * 40L);
    bracket -= i_unit * specfun::dilog(e_half).value * 16L;
    bracket += i_unit * specfun::dilog(e_five).value * 16L;
    const Complex c = bracket / 40L;

    ConstantC out{c.re().rounded(prec), abs(c.im()).rounded(prec)};
    if (out.imag_residue > hp::ldexp_one(-static_cast<long>(prec) / 2, prec)) {
        throw DomainError("constant_c: closed form has a nonzero imaginary part " + out.imag_residue.to_string(6));
    }
    return out;
}

Real constant_c_by_quadrature(unsigned long n, Precision prec, std::size_t nodes)
{
    if (n < 10) {
        throw RangeError("constant_c_by_quadrature: N must be at least 10");
    }
    // With u = 5x/N the integral is (N/5) * int -log(1 - cos u) du; the range
    // [floor(N/10), N+1] maps inside (0, 2 pi), so the integrand is smooth.
    const Real nr(static_cast<long>(n), prec);
    const Real lo = Real(static_cast<long>(n / 10), prec) * 5L / nr;
    const Real hi = Real(static_cast<long>(n + 1), prec) * 5L / nr;
    const Complex integral = integrate_interval(lo, hi, nodes, [](const Real &u) {
        return Complex(-log(1L - cos(u)));
    });
    return -(integral.re() / 5L);
}

} // namespace rademacher::contour
