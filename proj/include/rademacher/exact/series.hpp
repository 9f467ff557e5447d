#ifndef RADEMACHER_EXACT_SERIES_HPP
#define RADEMACHER_EXACT_SERIES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace rademacher::exact
{

using BigRational = mpq_class;
using BigInteger = mpz_class;

/// Power series in t with exact rational coefficients, truncated after t^order.
///
/// The coefficient vector always holds exactly order + 1 entries; products and
/// reciprocals never look past the truncation order.
class RationalTaylorSeries
{
public:
    /// Zero series.
    explicit RationalTaylorSeries(std::size_t order);
    /// Takes ownership of the coefficients; order = size - 1 (size must be > 0).
    explicit RationalTaylorSeries(std::vector<BigRational> coefficients);

    static RationalTaylorSeries one(std::size_t order);

    std::size_t truncation_order() const noexcept
    {
        return coefficients_.size() - 1;
    }
    const BigRational &operator[](std::size_t k) const
    {
        return coefficients_[k];
    }
    BigRational &operator[](std::size_t k)
    {
        return coefficients_[k];
    }
    std::span<const BigRational> coefficients() const noexcept
    {
        return coefficients_;
    }

    /// Same series cut (or zero-padded) to a new order.
    RationalTaylorSeries truncated(std::size_t order) const;

    friend bool operator==(const RationalTaylorSeries &, const RationalTaylorSeries &) = default;

private:
    std::vector<BigRational> coefficients_;
};

/// binom(n, k) by the multiplicative recurrence.
BigInteger binomial(unsigned long n, unsigned long k);

/// v_j(t) with 1 / (1 - (1+t)^j) = -1/(j t) * v_j(t), truncated at `order`.
///
/// v_j is the reciprocal of 1 + sum_{m=1}^{j-1} binom(j, m+1)/j t^m.
RationalTaylorSeries unit_factor(unsigned long j, std::size_t order);

/// r with s * r = 1 up to the truncation order of s. Throws DomainError when
/// the constant term vanishes.
RationalTaylorSeries series_reciprocal(const RationalTaylorSeries &s);

/// Truncated product at min(order(a), order(b)). Output coefficients are
/// computed in parallel; each one is a fixed left-to-right sum, so the result
/// does not depend on the thread count.
RationalTaylorSeries multiply(const RationalTaylorSeries &a, const RationalTaylorSeries &b);

/// Single-threaded reference for multiply().
RationalTaylorSeries multiply_serial(const RationalTaylorSeries &a, const RationalTaylorSeries &b);

namespace detail
{

// out[k] = sum_{i<=k} a[i] b[k-i] for k <= order. `T` is any ring element type
// with += and * (mpq_class, hp::Real).
template <typename T>
void truncated_product_serial(std::span<const T> a, std::span<const T> b, std::span<T> out)
{
    const std::size_t n = out.size();
    for (std::size_t k = 0; k < n; ++k) {
        T acc = a[0] * b[k];
        for (std::size_t i = 1; i <= k; ++i) {
            acc += a[i] * b[k - i];
        }
        out[k] = std::move(acc);
    }
}

template <typename T>
void truncated_product_parallel(std::span<const T> a, std::span<const T> b, std::span<T> out)
{
    const long n = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic, 4) if (n > 32)
    for (long k = n - 1; k >= 0; --k) {
        T acc = a[0] * b[static_cast<std::size_t>(k)];
        for (long i = 1; i <= k; ++i) {
            acc += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k - i)];
        }
        out[static_cast<std::size_t>(k)] = std::move(acc);
    }
}

} // namespace detail

} // namespace rademacher::exact

#endif
