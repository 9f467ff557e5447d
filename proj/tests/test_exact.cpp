#include <doctest.h>

#include <cmath>

#include <rademacher/errors.hpp>
#include <rademacher/exact/coefficients.hpp>

using namespace rademacher::exact;

TEST_CASE("binomial")
{
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(60, 30) == mpz_class("118264581564861424"));
    CHECK(binomial(5, 7) == 0);
}

TEST_CASE("series reciprocal inverts")
{
    const RationalTaylorSeries s(std::vector<BigRational>{1, mpq_class(1, 2), mpq_class(-3, 7), 2, 0, 5});
    const auto inv = series_reciprocal(s);
    CHECK(multiply(s, inv) == RationalTaylorSeries::one(5));
    CHECK_THROWS_AS(series_reciprocal(RationalTaylorSeries(std::vector<BigRational>{0, 1})),
                    rademacher::DomainError);
}

TEST_CASE("serial and parallel products are identical")
{
    const auto a = unit_factor(37, 120);
    const auto b = unit_factor(55, 120);
    CHECK(multiply(a, b) == multiply_serial(a, b));
}

TEST_CASE("hand values")
{
    CHECK(exact_coefficients(1).at(1) == -1);
    const auto c2 = exact_coefficients(2);
    CHECK(c2.at(1) == mpq_class(-1, 4));
    CHECK(c2.at(2) == mpq_class(1, 2));
    CHECK(exact_coefficients(5).at(1) == mpq_class(-20831, 86400));
    CHECK_THROWS_AS(exact_coefficients(0), rademacher::RangeError);
    CHECK_THROWS_AS(c2.at(3), rademacher::RangeError);
}

TEST_CASE("top coefficient is (-1)^N / N!")
{
    mpz_class fact = 1;
    const auto table = exact_coefficient_table(30);
    for (unsigned long n = 1; n <= 30; ++n) {
        fact *= n;
        CHECK(table[n - 1].at(n) == mpq_class(n % 2 ? -1 : 1, 1) / fact);
    }
}

TEST_CASE("table rows equal single evaluations")
{
    const auto table = exact_coefficient_table(25);
    for (unsigned long n : {1UL, 2UL, 7UL, 25UL}) {
        const auto single = exact_coefficients(n);
        CHECK(std::equal(single.values().begin(), single.values().end(), table[n - 1].values().begin(),
                         table[n - 1].values().end()));
    }
}

TEST_CASE("remainder after removing the principal part is regular at x = 1")
{
    // Near x = 1 the remainder stays bounded although each pole term blows up.
    const auto c = exact_coefficients(6);
    const BigRational near1 = BigRational(1) + BigRational(1, 1000000);
    const BigRational near2 = BigRational(1) - BigRational(1, 1000000);
    const BigRational r1 = principal_part_remainder(c, near1);
    const BigRational r2 = principal_part_remainder(c, near2);
    CHECK(std::abs(BigRational(r1 - r2).get_d()) < 1e-3);
    CHECK_THROWS_AS(principal_part_remainder(c, BigRational(1)), rademacher::DomainError);
    CHECK_THROWS_AS(principal_part_remainder(c, BigRational(-1)), rademacher::DomainError);
}

TEST_CASE("frozen values")
{
    const auto table = exact_coefficient_table(100);
    CHECK(table[9].at(1).get_d() == doctest::Approx(-0.28219159813412437).epsilon(1e-15));
    CHECK(table[59].at(1).get_d() == doctest::Approx(-0.24581967153145323).epsilon(1e-15));
    CHECK(table[99].at(1).get_d() == doctest::Approx(0.129053620060999).epsilon(1e-14));
    CHECK(table[99].at(2).get_d() == doctest::Approx(0.16810130098425138).epsilon(1e-14));
}

TEST_CASE("float pipeline agrees with rationals at N = 100")
{
    const auto exact = exact_coefficients(100);
    const auto approx = float_coefficients(100, 512);
    for (unsigned long l = 1; l <= 100; ++l) {
        const rademacher::hp::Real e(exact.at(l), 512);
        const double scale = std::max(1e-300, std::abs(e.to_double()));
        CHECK(abs(approx[l - 1] - e).to_double() / scale < 1e-40);
    }
}

TEST_CASE("rational strings round-trip")
{
    const mpq_class q(-20831, 86400);
    CHECK(to_rational_string(q) == "-20831/86400");
    CHECK(to_rational_string(mpq_class(3)) == "3/1");
    CHECK(parse_rational("-20831/86400") == q);
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK(to_decimal_string(q, 17) == "-0.24109953703703704");
}
