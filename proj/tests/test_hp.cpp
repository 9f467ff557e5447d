#include <doctest.h>

#include <rademacher/errors.hpp>
#include <rademacher/hp/complex.hpp>

using namespace rademacher::hp;

TEST_CASE("real arithmetic rounds to the smaller precision")
{
    const Real a(1L, 300), b(3L, 100);
    const Real q = a / b;
    CHECK(q.precision() == 100);
    CHECK(abs(q * 3L - 1L) < ldexp_one(-98, 100));
}

TEST_CASE("parse and print")
{
    const Real x = Real::parse("0.125", 128);
    CHECK(x == Real(0.125, 128));
    CHECK(x.to_string(5) == "0.125");
    CHECK(pi(256).to_string(20) == "3.1415926535897932385");
}

TEST_CASE("rational conversion is exact for dyadic values")
{
    const Real x(mpq_class(-3, 8), 64);
    CHECK(x.to_double() == -0.375);
}

TEST_CASE("complex division survives large components")
{
    const Complex big(Real(1L, 128) * ldexp_one(10000, 128), Real(1L, 128) * ldexp_one(10000, 128));
    const Complex q = big / big;
    CHECK(abs(q - Complex(1.0, 0.0, 128)).to_double() < 1e-30);
}

TEST_CASE("principal sqrt and log")
{
    const Complex m1(-1.0, 0.0, 128);
    const Complex r = sqrt(m1);
    CHECK(abs(r - Complex(0.0, 1.0, 128)).to_double() < 1e-35);
    const Complex m1_lower(Real(-1L, 128), -ldexp_one(-100, 128));
    CHECK(sqrt(m1_lower).im().sign() < 0);
    const Complex l = log(Complex(0.0, 2.0, 128));
    CHECK(abs(l.im() - pi(128) / 2L).to_double() < 1e-35);
    CHECK_THROWS_AS(log(Complex(128)), rademacher::DomainError);
}

TEST_CASE("integer powers by squaring match exp/log")
{
    const Complex z(0.3, -1.7, 200);
    const Complex p = pow(z, 13L);
    const Complex q = exp(log(z) * 13L);
    CHECK(abs(p - q).to_double() < 1e-50);
}

TEST_CASE("factorial and gamma agree")
{
    CHECK(factorial(20, 128) == Real(mpz_class("2432902008176640000"), 128));
    CHECK(abs(gamma(Real(21L, 128)) - factorial(20, 128)).to_double() < 1e-10);
}
