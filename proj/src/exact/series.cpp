#include <rademacher/exact/series.hpp>

#include <algorithm>
#include <utility>

#include <rademacher/errors.hpp>

namespace rademacher::exact
{

RationalTaylorSeries::RationalTaylorSeries(std::size_t order) : coefficients_(order + 1) {}

RationalTaylorSeries::RationalTaylorSeries(std::vector<BigRational> coefficients)
    : coefficients_(std::move(coefficients))
{
    if (coefficients_.empty()) {
        coefficients_.emplace_back(0);
    }
    for (auto &c : coefficients_) {
        c.canonicalize();
    }
}

RationalTaylorSeries RationalTaylorSeries::one(std::size_t order)
{
    RationalTaylorSeries s(order);
    s[0] = 1;
    return s;
}

RationalTaylorSeries RationalTaylorSeries::truncated(std::size_t order) const
{
    RationalTaylorSeries s(order);
    const std::size_t n = std::min(order, truncation_order());
    for (std::size_t k = 0; k <= n; ++k) {
        s[k] = coefficients_[k];
    }
    return s;
}

BigInteger binomial(unsigned long n, unsigned long k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInteger r = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        // r * (n - k + i) is divisible by i at every step.
        r *= n - k + i;
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
    }
    return r;
}

RationalTaylorSeries unit_factor(unsigned long j, std::size_t order)
{
    if (j == 0) {
        throw RangeError("unit_factor: j must be positive");
    }
    RationalTaylorSeries u(order);
    u[0] = 1;
    const std::size_t top = std::min<std::size_t>(order, j - 1);
    for (std::size_t m = 1; m <= top; ++m) {
        u[m] = BigRational(binomial(j, m + 1), BigInteger(j));
        u[m].canonicalize();
    }
    return series_reciprocal(u);
}

RationalTaylorSeries series_reciprocal(const RationalTaylorSeries &s)
{
    if (sgn(s[0]) == 0) {
        throw DomainError("not a unit");
    }
    const std::size_t n = s.truncation_order();
    RationalTaylorSeries r(n);
    const BigRational inv0 = 1 / s[0];
    r[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        BigRational acc = 0;
        for (std::size_t m = 1; m <= k; ++m) {
            if (sgn(s[m]) != 0) {
                acc += s[m] * r[k - m];
            }
        }
        r[k] = -acc * inv0;
    }
    return r;
}

RationalTaylorSeries multiply(const RationalTaylorSeries &a, const RationalTaylorSeries &b)
{
    const std::size_t order = std::min(a.truncation_order(), b.truncation_order());
    std::vector<BigRational> out(order + 1);
    detail::truncated_product_parallel<BigRational>(a.coefficients(), b.coefficients(), out);
    return RationalTaylorSeries(std::move(out));
}

RationalTaylorSeries multiply_serial(const RationalTaylorSeries &a, const RationalTaylorSeries &b)
{
    const std::size_t order = std::min(a.truncation_order(), b.truncation_order());
    std::vector<BigRational> out(order + 1);
    detail::truncated_product_serial<BigRational>(a.coefficients(), b.coefficients(), out);
    return RationalTaylorSeries(std::move(out));
}

} // namespace rademacher::exact
