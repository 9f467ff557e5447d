#include <rademacher/hp/real.hpp>

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace rademacher::hp
{

namespace
{

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

Precision min_prec(const Real &a, const Real &b)
{
    return std::min(a.precision(), b.precision());
}

template <typename Op>
Real unary(const Real &x, Op op)
{
    Real r(x.precision());
    op(r.get(), x.get(), kRound);
    return r;
}

} // namespace

Real::Real(Precision prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
}

Real::Real(long value, Precision prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_si(value_, value, kRound);
}

Real::Real(double value, Precision prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_d(value_, value, kRound);
}

Real::Real(const mpq_class &value, Precision prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_q(value_, value.get_mpq_t(), kRound);
}

Real::Real(const mpz_class &value, Precision prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_z(value_, value.get_mpz_t(), kRound);
}

Real Real::parse(std::string_view text, Precision prec)
{
    Real r(prec);
    const std::string s(text);
    if (mpfr_set_str(r.value_, s.c_str(), 10, kRound) != 0) {
        throw std::invalid_argument("not a decimal number: " + s);
    }
    return r;
}

Real::Real(const Real &other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, kRound);
}

Real::Real(Real &&other) noexcept
{
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

Real &Real::operator=(const Real &other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, kRound);
    }
    return *this;
}

Real &Real::operator=(Real &&other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real()
{
    mpfr_clear(value_);
}

Real Real::rounded(Precision prec) const
{
    Real r(prec);
    mpfr_set(r.value_, value_, kRound);
    return r;
}

double Real::to_double() const noexcept
{
    return mpfr_get_d(value_, kRound);
}

std::string Real::to_string(int digits) const
{
    digits = std::max(digits, 1);
    const int n = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, value_);
    std::vector<char> buf(static_cast<std::size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
    return std::string(buf.data(), static_cast<std::size_t>(n));
}

long Real::exponent() const noexcept
{
    if (!mpfr_regular_p(value_)) {
        return mpfr_zero_p(value_) ? -(1L << 40) : (1L << 40);
    }
    return mpfr_get_exp(value_);
}

Real &Real::operator+=(const Real &rhs)
{
    if (rhs.precision() < precision()) {
        mpfr_prec_round(value_, rhs.precision(), kRound);
    }
    mpfr_add(value_, value_, rhs.value_, kRound);
    return *this;
}

Real &Real::operator-=(const Real &rhs)
{
    if (rhs.precision() < precision()) {
        mpfr_prec_round(value_, rhs.precision(), kRound);
    }
    mpfr_sub(value_, value_, rhs.value_, kRound);
    return *this;
}

Real &Real::operator*=(const Real &rhs)
{
    if (rhs.precision() < precision()) {
        mpfr_prec_round(value_, rhs.precision(), kRound);
    }
    mpfr_mul(value_, value_, rhs.value_, kRound);
    return *this;
}

Real &Real::operator/=(const Real &rhs)
{
    if (rhs.precision() < precision()) {
        mpfr_prec_round(value_, rhs.precision(), kRound);
    }
    mpfr_div(value_, value_, rhs.value_, kRound);
    return *this;
}

Real &Real::operator*=(long rhs)
{
    mpfr_mul_si(value_, value_, rhs, kRound);
    return *this;
}

Real &Real::operator/=(long rhs)
{
    mpfr_div_si(value_, value_, rhs, kRound);
    return *this;
}

Real Real::operator-() const
{
    return unary(*this, mpfr_neg);
}

Real operator+(const Real &a, const Real &b)
{
    Real r(min_prec(a, b));
    mpfr_add(r.value_, a.value_, b.value_, kRound);
    return r;
}

Real operator-(const Real &a, const Real &b)
{
    Real r(min_prec(a, b));
    mpfr_sub(r.value_, a.value_, b.value_, kRound);
    return r;
}

Real operator*(const Real &a, const Real &b)
{
    Real r(min_prec(a, b));
    mpfr_mul(r.value_, a.value_, b.value_, kRound);
    return r;
}

Real operator/(const Real &a, const Real &b)
{
    Real r(min_prec(a, b));
    mpfr_div(r.value_, a.value_, b.value_, kRound);
    return r;
}

Real operator+(const Real &a, long b)
{
    Real r(a.precision());
    mpfr_add_si(r.value_, a.value_, b, kRound);
    return r;
}

Real operator-(const Real &a, long b)
{
    Real r(a.precision());
    mpfr_sub_si(r.value_, a.value_, b, kRound);
    return r;
}

Real operator*(const Real &a, long b)
{
    Real r(a.precision());
    mpfr_mul_si(r.value_, a.value_, b, kRound);
    return r;
}

Real operator/(const Real &a, long b)
{
    Real r(a.precision());
    mpfr_div_si(r.value_, a.value_, b, kRound);
    return r;
}

Real operator-(long a, const Real &b)
{
    Real r(b.precision());
    mpfr_si_sub(r.value_, a, b.value_, kRound);
    return r;
}

std::partial_ordering operator<=>(const Real &a, const Real &b) noexcept
{
    if (mpfr_unordered_p(a.value_, b.value_)) {
        return std::partial_ordering::unordered;
    }
    const int c = mpfr_cmp(a.value_, b.value_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real &a, long b) noexcept
{
    if (mpfr_nan_p(a.value_)) {
        return std::partial_ordering::unordered;
    }
    const int c = mpfr_cmp_si(a.value_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real &x)
{
    return unary(x, mpfr_abs);
}

Real sqrt(const Real &x)
{
    return unary(x, mpfr_sqrt);
}

Real exp(const Real &x)
{
    return unary(x, mpfr_exp);
}

Real expm1(const Real &x)
{
    return unary(x, mpfr_expm1);
}

Real log(const Real &x)
{
    return unary(x, mpfr_log);
}

Real log1p(const Real &x)
{
    return unary(x, mpfr_log1p);
}

Real sin(const Real &x)
{
    return unary(x, mpfr_sin);
}

Real cos(const Real &x)
{
    return unary(x, mpfr_cos);
}

Real gamma(const Real &x)
{
    return unary(x, mpfr_gamma);
}

Real floor(const Real &x)
{
    Real r(x.precision());
    mpfr_floor(r.get(), x.get());
    return r;
}

Real atan2(const Real &y, const Real &x)
{
    Real r(min_prec(x, y));
    mpfr_atan2(r.get(), y.get(), x.get(), kRound);
    return r;
}

Real hypot(const Real &x, const Real &y)
{
    Real r(min_prec(x, y));
    mpfr_hypot(r.get(), x.get(), y.get(), kRound);
    return r;
}

Real pow(const Real &base, const Real &exponent)
{
    Real r(min_prec(base, exponent));
    mpfr_pow(r.get(), base.get(), exponent.get(), kRound);
    return r;
}

Real pow(const Real &base, long exponent)
{
    Real r(base.precision());
    mpfr_pow_si(r.get(), base.get(), exponent, kRound);
    return r;
}

Real min(const Real &a, const Real &b)
{
    return (b < a) ? b : a;
}

Real max(const Real &a, const Real &b)
{
    return (a < b) ? b : a;
}

Real pi(Precision prec)
{
    Real r(prec);
    mpfr_const_pi(r.get(), kRound);
    return r;
}

Real ldexp_one(long e, Precision prec)
{
    Real r(prec);
    mpfr_set_ui_2exp(r.get(), 1, e, kRound);
    return r;
}

Real factorial(unsigned long n, Precision prec)
{
    Real r(prec);
    mpfr_fac_ui(r.get(), n, kRound);
    return r;
}

} // namespace rademacher::hp
