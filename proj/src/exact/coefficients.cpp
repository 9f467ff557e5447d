#include <rademacher/exact/coefficients.hpp>

#include <cmath>
#include <stdexcept>
#include <utility>

#include <rademacher/errors.hpp>

namespace rademacher::exact
{

namespace
{

BigInteger factorial_z(unsigned long n)
{
    BigInteger r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// C_{0,1,l}(N) = sign / N! * P[N-l] for l = 1..N.
CoefficientVector extract(unsigned long n, std::span<const BigRational> product)
{
    BigRational scale(n % 2 == 0 ? BigInteger(1) : BigInteger(-1), factorial_z(n));
    scale.canonicalize();
    std::vector<BigRational> values(n);
    for (unsigned long l = 1; l <= n; ++l) {
        values[l - 1] = scale * product[n - l];
    }
    return CoefficientVector(n, std::move(values));
}

// Float v_j: reciprocal of 1 + sum_{m=1}^{j-1} binom(j, m+1)/j t^m.
std::vector<hp::Real> float_unit_factor(unsigned long j, std::size_t order, hp::Precision prec)
{
    std::vector<hp::Real> u(order + 1, hp::Real(prec));
    u[0] = hp::Real(1L, prec);
    const std::size_t top = std::min<std::size_t>(order, j - 1);
    for (std::size_t m = 1; m <= top; ++m) {
        u[m] = hp::Real(BigRational(binomial(j, m + 1), BigInteger(j)), prec);
    }
    std::vector<hp::Real> r(order + 1, hp::Real(prec));
    r[0] = hp::Real(1L, prec);
    for (std::size_t k = 1; k <= order; ++k) {
        hp::Real acc(prec);
        for (std::size_t m = 1; m <= std::min(k, top); ++m) {
            acc += u[m] * r[k - m];
        }
        r[k] = -acc;
    }
    return r;
}

void require_n(unsigned long n)
{
    if (n == 0) {
        throw RangeError("undefined: empty product has no pole");
    }
}

} // namespace

CoefficientVector::CoefficientVector(unsigned long n, std::vector<BigRational> values)
    : n_(n), values_(std::move(values))
{
    if (values_.size() != n_) {
        throw std::invalid_argument("CoefficientVector: expected N values");
    }
}

const BigRational &CoefficientVector::at(unsigned long l) const
{
    if (l == 0 || l > n_) {
        throw RangeError("l = " + std::to_string(l) + " outside 1.." + std::to_string(n_));
    }
    return values_[l - 1];
}

CoefficientVector exact_coefficients(unsigned long n)
{
    require_n(n);
    const std::size_t order = n - 1;
    RationalTaylorSeries product = RationalTaylorSeries::one(order);
    for (unsigned long j = 2; j <= n; ++j) {
        product = multiply(product, unit_factor(j, order));
    }
    return extract(n, product.coefficients());
}

std::vector<CoefficientVector> exact_coefficient_table(unsigned long n_max)
{
    require_n(n_max);
    const std::size_t order = n_max - 1;
    std::vector<CoefficientVector> table;
    table.reserve(n_max);
    RationalTaylorSeries product = RationalTaylorSeries::one(order);
    for (unsigned long j = 1; j <= n_max; ++j) {
        if (j > 1) {
            product = multiply(product, unit_factor(j, order));
        }
        table.push_back(extract(j, product.coefficients()));
    }
    return table;
}

BigRational principal_part_remainder(unsigned long n, const BigRational &x)
{
    require_n(n);
    return principal_part_remainder(exact_coefficients(n), x);
}

BigRational principal_part_remainder(const CoefficientVector &c, const BigRational &x)
{
    const unsigned long n = c.N();
    if (x == 1 || (x == -1 && n >= 2)) {
        throw DomainError("principal_part_remainder: x is a pole");
    }
    BigRational product = 1;
    BigRational power = 1;
    for (unsigned long j = 1; j <= n; ++j) {
        power *= x;
        product /= 1 - power;
    }
    const BigRational inv = 1 / (x - 1);
    BigRational inv_power = 1;
    BigRational principal = 0;
    for (unsigned long l = 1; l <= n; ++l) {
        inv_power *= inv;
        principal += c.at(l) * inv_power;
    }
    return product - principal;
}

std::vector<hp::Real> float_coefficients(unsigned long n, hp::Precision prec)
{
    require_n(n);
    return float_coefficient_table(n, prec).back();
}

std::vector<std::vector<hp::Real>> float_coefficient_table(unsigned long n_max, hp::Precision prec)
{
    require_n(n_max);
    const std::size_t order = n_max - 1;
    std::vector<hp::Real> product(order + 1, hp::Real(prec));
    product[0] = hp::Real(1L, prec);
    std::vector<hp::Real> next(order + 1, hp::Real(prec));
    std::vector<std::vector<hp::Real>> table;
    table.reserve(n_max);
    hp::Real factorial(1L, prec);
    for (unsigned long j = 1; j <= n_max; ++j) {
        if (j > 1) {
            const auto v = float_unit_factor(j, order, prec);
            detail::truncated_product_parallel<hp::Real>(product, v, next);
            std::swap(product, next);
        }
        factorial *= static_cast<long>(j);
        hp::Real scale = hp::Real(j % 2 == 0 ? 1L : -1L, prec) / factorial;
        std::vector<hp::Real> values;
        values.reserve(j);
        for (unsigned long l = 1; l <= j; ++l) {
            values.push_back(scale * product[j - l]);
        }
        table.push_back(std::move(values));
    }
    return table;
}

std::string to_rational_string(const BigRational &q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational parse_rational(const std::string &text)
{
    BigRational q;
    if (text.empty() || q.set_str(text, 10) != 0 || sgn(q.get_den()) == 0) {
        throw std::invalid_argument("not a rational: " + text);
    }
    q.canonicalize();
    return q;
}

std::string to_decimal_string(const BigRational &q, int digits)
{
    const auto bits = static_cast<hp::Precision>(std::ceil(digits * 3.3219280948873622)) + 64;
    return hp::Real(q, bits).to_string(digits);
}

} // namespace rademacher::exact
