#ifndef RADEMACHER_HP_REAL_HPP
#define RADEMACHER_HP_REAL_HPP

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace rademacher::hp
{

/// Mantissa bits of a high-precision value.
using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 256;
inline constexpr Precision kMinPrecision = 64;

/// Owning RAII handle around an MPFR number.
///
/// Every value carries its own precision. Binary operations produce a result at
/// the smaller of the two operand precisions, so a computation never claims
/// more bits than its least precise input. All rounding is to nearest.
class Real
{
public:
    explicit Real(Precision prec = kDefaultPrecision);
    Real(long value, Precision prec);
    Real(double value, Precision prec);
    Real(const mpq_class &value, Precision prec);
    Real(const mpz_class &value, Precision prec);

    /// Parses a decimal literal such as "-1.61" or "1e-30".
    static Real parse(std::string_view text, Precision prec);

    Real(const Real &other);
    Real(Real &&other) noexcept;
    Real &operator=(const Real &other);
    Real &operator=(Real &&other) noexcept;
    ~Real();

    Precision precision() const noexcept
    {
        return mpfr_get_prec(value_);
    }
    /// Copy rounded (or zero-extended) to `prec` bits.
    Real rounded(Precision prec) const;

    mpfr_srcptr get() const noexcept
    {
        return value_;
    }
    mpfr_ptr get() noexcept
    {
        return value_;
    }

    double to_double() const noexcept;
    /// Scientific/fixed notation with `digits` significant decimal digits.
    std::string to_string(int digits) const;

    bool is_zero() const noexcept
    {
        return mpfr_zero_p(value_) != 0;
    }
    bool is_finite() const noexcept
    {
        return mpfr_number_p(value_) != 0;
    }
    int sign() const noexcept
    {
        return mpfr_sgn(value_);
    }
    /// Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
    long exponent() const noexcept;

    Real &operator+=(const Real &rhs);
    Real &operator-=(const Real &rhs);
    Real &operator*=(const Real &rhs);
    Real &operator/=(const Real &rhs);
    Real &operator*=(long rhs);
    Real &operator/=(long rhs);

    Real operator-() const;

    friend Real operator+(const Real &a, const Real &b);
    friend Real operator-(const Real &a, const Real &b);
    friend Real operator*(const Real &a, const Real &b);
    friend Real operator/(const Real &a, const Real &b);
    friend Real operator+(const Real &a, long b);
    friend Real operator-(const Real &a, long b);
    friend Real operator*(const Real &a, long b);
    friend Real operator/(const Real &a, long b);
    friend Real operator*(long a, const Real &b)
    {
        return b * a;
    }
    friend Real operator-(long a, const Real &b);

    friend bool operator==(const Real &a, const Real &b) noexcept
    {
        return mpfr_equal_p(a.value_, b.value_) != 0;
    }
    friend std::partial_ordering operator<=>(const Real &a, const Real &b) noexcept;
    friend std::partial_ordering operator<=>(const Real &a, long b) noexcept;
    friend bool operator==(const Real &a, long b) noexcept
    {
        return mpfr_cmp_si(a.value_, b) == 0;
    }

private:
    mpfr_t value_;
};

Real abs(const Real &x);
Real sqrt(const Real &x);
Real exp(const Real &x);
Real expm1(const Real &x);
Real log(const Real &x);
Real log1p(const Real &x);
Real sin(const Real &x);
Real cos(const Real &x);
Real atan2(const Real &y, const Real &x);
Real hypot(const Real &x, const Real &y);
Real pow(const Real &base, const Real &exponent);
Real pow(const Real &base, long exponent);
Real gamma(const Real &x);
Real floor(const Real &x);
Real min(const Real &a, const Real &b);
Real max(const Real &a, const Real &b);

Real pi(Precision prec);
/// 2^e at the given precision.
Real ldexp_one(long e, Precision prec);
/// n! exactly rounded.
Real factorial(unsigned long n, Precision prec);

} // namespace rademacher::hp

#endif
