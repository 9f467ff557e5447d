#include <doctest.h>

#include <rademacher/errors.hpp>
#include <rademacher/saddle/saddle.hpp>
#include <rademacher/specfun/specfun.hpp>

using namespace rademacher;
using hp::Complex;
using hp::Real;

TEST_CASE("saddle constants")
{
    const auto sd = saddle::compute_saddle(256);
    CHECK(sd.z0.re().to_double() == doctest::Approx(-1.60552755354891455752).epsilon(1e-15));
    CHECK(sd.z0.im().to_double() == doctest::Approx(7.42342617062500237355).epsilon(1e-15));
    CHECK(sd.a.to_double() == doctest::Approx(1.794284925718157584815).epsilon(1e-15));
    CHECK(sd.b.to_double() == doctest::Approx(1.070446832832293422469).epsilon(1e-15));
    CHECK(sd.theta.to_double() == doctest::Approx(-0.196576126255701046741).epsilon(1e-15));
    CHECK(sd.p.to_double() == doctest::Approx(31.96311488510351731981).epsilon(1e-15));
    CHECK(sd.alpha.to_double() == doctest::Approx(0.028298407145126393306).epsilon(1e-15));
    CHECK(sd.peak_factor().to_double() == doctest::Approx(8.810341390369661185948).epsilon(1e-14));
    CHECK(abs(sd.radicand.re() * sd.alpha - 1L).to_double() < 1e-60);
    CHECK(abs(specfun::phi(sd.z0)).to_double() < std::ldexp(1.0, -240));
}

TEST_CASE("solver accepts the conjugate guess and rejects far guesses")
{
    const Complex guess(-1.6, -7.4, 192);
    const Complex root = saddle::solve_saddle(192, guess);
    CHECK(root.im().to_double() == doctest::Approx(-7.42342617062500237355).epsilon(1e-14));
    CHECK_THROWS_AS(saddle::solve_saddle(192, Complex(-3.0, 2.0, 192)), DomainError);
}

TEST_CASE("precision increase leaves constants stable")
{
    const auto lo = saddle::compute_saddle(128);
    const auto hi = saddle::compute_saddle(512);
    CHECK(abs(lo.p - hi.p.rounded(128)).to_double() < 1e-30);
    CHECK(abs(lo.z0 - hi.z0.rounded(128)).to_double() < 1e-30);
}

TEST_CASE("one zero of phi near z0")
{
    const auto sd = saddle::compute_saddle(192);
    const Complex count = saddle::argument_principle_count(sd.z0, Real(0.5, 192), 256);
    CHECK(abs(count - 1L).to_double() < 1e-10);
}

TEST_CASE("asymptotic main term: frozen values and periodicity")
{
    const auto sd = saddle::compute_saddle(256);
    CHECK(saddle::asymptotic_C(1, 100, sd).main_term.to_double() == doctest::Approx(0.4393286386786071).epsilon(1e-13));
    CHECK(saddle::asymptotic_C(1, 120, sd).main_term.to_double() ==
          doctest::Approx(-0.4285326486114217).epsilon(1e-13));
    CHECK(saddle::asymptotic_C(1, 150, sd).main_term.to_double() == doctest::Approx(-4.282203306871738).epsilon(1e-13));

    const Real n(57.25, 256);
    CHECK(abs(saddle::H(2, n, sd) - saddle::H(2, n + sd.p, sd)).to_double() < 1e-60);

    for (unsigned long l : {1UL, 2UL, 3UL}) {
        for (unsigned long n2 : {10UL, 100UL, 150UL}) {
            const Real a = saddle::asymptotic_C(l, n2, sd).main_term;
            const Real b = saddle::saddle_pair_contribution(l, n2, sd);
            CHECK(abs(a - b).to_double() <= 1e-50 * std::max(1.0, std::abs(a.to_double())));
        }
    }
    CHECK_THROWS_AS(saddle::asymptotic_C(0, 10, sd), RangeError);
}
