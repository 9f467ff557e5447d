#include <doctest.h>

#include <rademacher/contour/contour.hpp>
#include <rademacher/errors.hpp>
#include <rademacher/exact/coefficients.hpp>
#include <rademacher/saddle/saddle.hpp>

using namespace rademacher;
using hp::Complex;
using hp::Real;

TEST_CASE("Cauchy oracle reproduces exact coefficients")
{
    const auto table = exact::exact_coefficient_table(12);
    for (unsigned long n : {1UL, 2UL, 5UL, 12UL}) {
        const auto values = contour::cauchy_oracle_all(n, contour::default_oracle_spec(n));
        for (unsigned long l = 1; l <= n; ++l) {
            const Real e(table[n - 1].at(l), 256);
            CHECK(abs(values[l - 1].value - Complex(e)).to_double() < 1e-30);
        }
    }
    CHECK(contour::cauchy_oracle(1, 1, contour::default_oracle_spec(1)).value.re().to_double() ==
          doctest::Approx(-1.0));
}

TEST_CASE("Cauchy oracle preconditions")
{
    auto spec = contour::default_oracle_spec(10);
    spec.radius = 1.0; // beyond 2 sin(pi/10)
    CHECK_THROWS_AS(contour::cauchy_oracle(1, 10, spec), DomainError);
    spec = contour::default_oracle_spec(10);
    spec.nodes = 10;
    CHECK_THROWS_AS(contour::cauchy_oracle(1, 10, spec), DomainError);
    spec = contour::default_oracle_spec(10);
    spec.rule = contour::Rule::gauss_legendre_composite;
    CHECK_THROWS_AS(contour::cauchy_oracle(1, 10, spec), DomainError);
    CHECK_THROWS_AS(contour::cauchy_oracle(11, 10, contour::default_oracle_spec(10)), RangeError);
}

TEST_CASE("half-circle integral approximation")
{
    contour::QuadratureSpec spec;
    spec.nodes = 64;
    const auto v5 = contour::integral_approx_C(1, 5, spec);
    // Sign and size at N = 5: exact value is -20831/86400.
    CHECK(v5.value.to_double() == doctest::Approx(-0.24109953703703704).epsilon(0.03));
    CHECK(v5.converged);

    const contour::LeftArcIntegrator arc(128, 256);
    const Complex full = arc.approximate_C_full(1, 20);
    CHECK(abs(full.im()).to_double() < 1e-40);
    CHECK(abs(full.re() - arc.approximate_C(1, 20)).to_double() < 1e-40);
    CHECK(arc.approximate_C(1, 20).to_double() == doctest::Approx(-0.32508594047155587).epsilon(1e-12));
}

TEST_CASE("monotone exponent rate on the segment to z0")
{
    const auto sd = saddle::compute_saddle(128);
    const auto path = contour::segment(Complex(Real(128), Real(5L, 128)), sd.z0, 200);
    const auto rep = contour::check_monotone_exponent(path);
    CHECK(rep.monotone);
    CHECK(rep.values.front().to_double() == doctest::Approx(-0.1986).epsilon(1e-3));
    // Reversed, it is decreasing.
    std::vector<Complex> rev(path.rbegin(), path.rend());
    CHECK_FALSE(contour::check_monotone_exponent(rev).monotone);
}

TEST_CASE("lower-bound inequality")
{
    std::vector<contour::InequalityPoint> grid;
    for (int j = 1; j <= 20; ++j) {
        for (int k = 0; k <= 10; ++k) {
            grid.push_back({0.005 * j, -0.05 * k});
        }
    }
    CHECK(contour::check_lower_bound_inequality(grid));
    CHECK_FALSE(contour::check_lower_bound_inequality(grid, 1.2));
    // Fails near Re z = -1 for j/N close to 1/10.
    const contour::InequalityPoint corner[] = {{0.1, -1.0}};
    CHECK_FALSE(contour::check_lower_bound_inequality(corner));
    const contour::InequalityPoint outside[] = {{0.2, 0.0}};
    CHECK_THROWS_AS(contour::check_lower_bound_inequality(outside), DomainError);
}

TEST_CASE("constant c")
{
    const auto c = contour::constant_c(256);
    CHECK(c.value.to_double() == doctest::Approx(0.112620341596303617405644).epsilon(1e-15));
    const Real q = contour::constant_c_by_quadrature(10000, 128);
    CHECK(std::abs(q.to_double() - c.value.to_double()) / c.value.to_double() < 1e-3);
}
