#ifndef RADEMACHER_HP_COMPLEX_HPP
#define RADEMACHER_HP_COMPLEX_HPP

#include <complex>
#include <string>

#include <rademacher/hp/real.hpp>

namespace rademacher::hp
{

/// Complex number with MPFR real and imaginary parts.
///
/// Elementary functions use the principal branch: arg in (-pi, pi], log with
/// imaginary part in (-pi, pi], sqrt with nonnegative real part.
class Complex
{
public:
    explicit Complex(Precision prec = kDefaultPrecision) : re_(prec), im_(prec) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit Complex(Real re) : re_(std::move(re)), im_(re_.precision()) {}
    Complex(double re, double im, Precision prec) : re_(re, prec), im_(im, prec) {}
    Complex(std::complex<double> z, Precision prec) : re_(z.real(), prec), im_(z.imag(), prec) {}

    const Real &re() const noexcept
    {
        return re_;
    }
    const Real &im() const noexcept
    {
        return im_;
    }
    Real &re() noexcept
    {
        return re_;
    }
    Real &im() noexcept
    {
        return im_;
    }

    Precision precision() const noexcept
    {
        return std::min(re_.precision(), im_.precision());
    }
    Complex rounded(Precision prec) const
    {
        return {re_.rounded(prec), im_.rounded(prec)};
    }

    std::complex<double> to_std() const noexcept
    {
        return {re_.to_double(), im_.to_double()};
    }
    /// "re+imi" with `digits` significant digits per component.
    std::string to_string(int digits) const;

    bool is_zero() const noexcept
    {
        return re_.is_zero() && im_.is_zero();
    }

    Complex &operator+=(const Complex &rhs);
    Complex &operator-=(const Complex &rhs);
    Complex &operator*=(const Complex &rhs);
    Complex &operator/=(const Complex &rhs);
    Complex &operator*=(const Real &rhs);
    Complex &operator/=(const Real &rhs);
    Complex &operator*=(long rhs)
    {
        re_ *= rhs;
        im_ *= rhs;
        return *this;
    }
    Complex &operator/=(long rhs)
    {
        re_ /= rhs;
        im_ /= rhs;
        return *this;
    }

    Complex operator-() const
    {
        return {-re_, -im_};
    }

private:
    Real re_;
    Real im_;
};

Complex operator+(const Complex &a, const Complex &b);
Complex operator-(const Complex &a, const Complex &b);
Complex operator*(const Complex &a, const Complex &b);
Complex operator/(const Complex &a, const Complex &b);
Complex operator*(const Complex &a, const Real &b);
Complex operator*(const Real &a, const Complex &b);
Complex operator/(const Complex &a, const Real &b);
Complex operator+(const Complex &a, const Real &b);
Complex operator-(const Complex &a, const Real &b);
Complex operator-(const Real &a, const Complex &b);
Complex operator*(const Complex &a, long b);
Complex operator/(const Complex &a, long b);
Complex operator+(const Complex &a, long b);
Complex operator-(long a, const Complex &b);
Complex operator-(const Complex &a, long b);

/// i times z.
Complex mul_i(const Complex &z);
Complex conj(const Complex &z);
Real abs(const Complex &z);
/// |z|^2
Real norm(const Complex &z);
Real arg(const Complex &z);

Complex exp(const Complex &z);
Complex log(const Complex &z);
Complex sqrt(const Complex &z);
/// exp(w log z) on the principal branch; z = 0 is rejected.
Complex pow(const Complex &z, const Complex &w);
Complex pow(const Complex &z, const Real &w);
/// Integer power by repeated squaring (no branch involved).
Complex pow(const Complex &z, long n);
/// e^{i t}
Complex expi(const Real &t);

} // namespace rademacher::hp

#endif
