#ifndef RADEMACHER_EXACT_COEFFICIENTS_HPP
#define RADEMACHER_EXACT_COEFFICIENTS_HPP

#include <span>
#include <string>
#include <vector>

#include <rademacher/exact/series.hpp>
#include <rademacher/hp/real.hpp>

namespace rademacher::exact
{

/// The principal part of prod_{j=1}^N (1-x^j)^{-1} at x = 1:
/// C_{0,1,l}(N) for l = 1..N, the coefficient of (x-1)^{-l}.
class CoefficientVector
{
public:
    CoefficientVector(unsigned long n, std::vector<BigRational> values);

    unsigned long N() const noexcept
    {
        return n_;
    }
    /// C_{0,1,l}(N), 1-based. Throws RangeError unless 1 <= l <= N.
    const BigRational &at(unsigned long l) const;
    /// values()[l-1] = C_{0,1,l}(N).
    std::span<const BigRational> values() const noexcept
    {
        return values_;
    }

private:
    unsigned long n_;
    std::vector<BigRational> values_;
};

/// All C_{0,1,l}(N) exactly.
///
/// With x = 1 + t the product becomes (-1)^N / (N! t^N) * prod_j v_j(t), so
/// C_{0,1,l}(N) = (-1)^N / N! * [t^{N-l}] prod_{j=1}^N v_j(t). The product is
/// accumulated left to right in j and truncated at order N-1.
CoefficientVector exact_coefficients(unsigned long n);

/// exact_coefficients(N) for every N = 1..n_max from a single running product
/// (prefix products truncated at n_max - 1). Entry i holds N = i + 1.
std::vector<CoefficientVector> exact_coefficient_table(unsigned long n_max);

/// prod_{j=1}^N (1-x^j)^{-1} - sum_l C_{0,1,l}(N) / (x-1)^l, exactly.
/// Throws DomainError when x is a pole (x = 1, or x = -1 with N >= 2).
BigRational principal_part_remainder(unsigned long n, const BigRational &x);
BigRational principal_part_remainder(const CoefficientVector &c, const BigRational &x);

/// Same algorithm as exact_coefficients() in `prec`-bit floating point.
/// Intended for N beyond the comfortable range of the rational pipeline.
std::vector<hp::Real> float_coefficients(unsigned long n, hp::Precision prec);

/// Float counterpart of exact_coefficient_table(): entry i holds N = i + 1.
std::vector<std::vector<hp::Real>> float_coefficient_table(unsigned long n_max, hp::Precision prec);

/// "p/q" with q > 0 and gcd(p, q) = 1; integers print as "p/1".
std::string to_rational_string(const BigRational &q);
/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
BigRational parse_rational(const std::string &text);
/// Decimal rendering with `digits` significant digits.
std::string to_decimal_string(const BigRational &q, int digits);

} // namespace rademacher::exact

#endif
