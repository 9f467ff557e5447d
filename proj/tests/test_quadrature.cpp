#include <doctest.h>

#include <rademacher/contour/quadrature.hpp>

using namespace rademacher;
using hp::Complex;
using hp::Real;

TEST_CASE("Gauss-Legendre nodes integrate polynomials exactly")
{
    const auto &rule = contour::gauss_legendre(16, 200);
    Real sum(200);
    for (std::size_t i = 0; i < 16; ++i) {
        sum += rule.weights[i] * pow(rule.nodes[i], 30L);
    }
    CHECK(abs(sum - Real(2L, 200) / 31L).to_double() < 1e-55);
}

TEST_CASE("composite rule on an interval")
{
    const Real a(0L, 200), b(3L, 200);
    const Complex v = contour::integrate_interval(a, b, 128, [](const Real &x) { return Complex(exp(x)); });
    CHECK(abs(v.re() - (exp(b) - 1L)).to_double() < 1e-50);
}

TEST_CASE("circle integral recovers residues")
{
    const Complex center(0.5, -0.25, 200);
    const Real radius(1L, 200);
    // 1/(2 pi i) closed integral of e^z / (z - center) = e^center.
    const Complex v = contour::circle_integral(center, radius, 64, [&](const Complex &z) { return exp(z) / (z - center); });
    CHECK(abs(v - exp(center)).to_double() < 1e-40);
}

TEST_CASE("serial and parallel evaluation are bit-identical")
{
    const Complex center(0.1, 0.2, 160);
    const Real radius(0.7, 160);
    auto f = [](const Complex &z) { return exp(z * z) / (z + 3L); };
    const Complex p = contour::circle_integral(center, radius, 96, f);
    const Complex s = contour::circle_integral_serial(center, radius, 96, f);
    CHECK(p.re() == s.re());
    CHECK(p.im() == s.im());
    const Real a(0L, 160), b(2L, 160);
    auto g = [](const Real &x) { return Complex(sin(x) * x); };
    const Complex ip = contour::integrate_interval(a, b, 96, g);
    const Complex is = contour::integrate_interval_serial(a, b, 96, g);
    CHECK(ip.re() == is.re());
}

TEST_CASE("spec validation")
{
    contour::QuadratureSpec spec;
    spec.nodes = 4;
    CHECK_THROWS_AS(contour::validate(spec), std::invalid_argument);
    spec.nodes = 64;
    spec.precision = 32;
    CHECK_THROWS_AS(contour::validate(spec), std::invalid_argument);
}
