#include <rademacher/hp/complex.hpp>

#include <rademacher/errors.hpp>

namespace rademacher::hp
{

std::string Complex::to_string(int digits) const
{
    std::string s = re_.to_string(digits);
    std::string t = im_.to_string(digits);
    if (t.empty() || (t[0] != '-' && t[0] != '+')) {
        t.insert(t.begin(), '+');
    }
    return s + t + "i";
}

Complex &Complex::operator+=(const Complex &rhs)
{
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

Complex &Complex::operator-=(const Complex &rhs)
{
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

Complex &Complex::operator*=(const Complex &rhs)
{
    *this = *this * rhs;
    return *this;
}

Complex &Complex::operator/=(const Complex &rhs)
{
    *this = *this / rhs;
    return *this;
}

Complex &Complex::operator*=(const Real &rhs)
{
    re_ *= rhs;
    im_ *= rhs;
    return *this;
}

Complex &Complex::operator/=(const Real &rhs)
{
    re_ /= rhs;
    im_ /= rhs;
    return *this;
}

Complex operator+(const Complex &a, const Complex &b)
{
    return {a.re() + b.re(), a.im() + b.im()};
}

Complex operator-(const Complex &a, const Complex &b)
{
    return {a.re() - b.re(), a.im() - b.im()};
}

Complex operator*(const Complex &a, const Complex &b)
{
    return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}

Complex operator/(const Complex &a, const Complex &b)
{
    // Smith's scaling keeps the intermediate products in range.
    if (abs(b.re()) >= abs(b.im())) {
        const Real r = b.im() / b.re();
        const Real d = b.re() + b.im() * r;
        return {(a.re() + a.im() * r) / d, (a.im() - a.re() * r) / d};
    }
    const Real r = b.re() / b.im();
    const Real d = b.re() * r + b.im();
    return {(a.re() * r + a.im()) / d, (a.im() * r - a.re()) / d};
}

Complex operator*(const Complex &a, const Real &b)
{
    return {a.re() * b, a.im() * b};
}

Complex operator*(const Real &a, const Complex &b)
{
    return {a * b.re(), a * b.im()};
}

Complex operator/(const Complex &a, const Real &b)
{
    return {a.re() / b, a.im() / b};
}

Complex operator+(const Complex &a, const Real &b)
{
    return {a.re() + b, a.im().rounded(std::min(a.im().precision(), b.precision()))};
}

Complex operator-(const Complex &a, const Real &b)
{
    return {a.re() - b, a.im().rounded(std::min(a.im().precision(), b.precision()))};
}

Complex operator-(const Real &a, const Complex &b)
{
    return {a - b.re(), -b.im().rounded(std::min(b.im().precision(), a.precision()))};
}

Complex operator*(const Complex &a, long b)
{
    return {a.re() * b, a.im() * b};
}

Complex operator/(const Complex &a, long b)
{
    return {a.re() / b, a.im() / b};
}

Complex operator+(const Complex &a, long b)
{
    return {a.re() + b, a.im()};
}

Complex operator-(long a, const Complex &b)
{
    return {a - b.re(), -b.im()};
}

Complex operator-(const Complex &a, long b)
{
    return {a.re() - b, a.im()};
}

Complex mul_i(const Complex &z)
{
    return {-z.im(), z.re()};
}

Complex conj(const Complex &z)
{
    return {z.re(), -z.im()};
}

Real abs(const Complex &z)
{
    return hypot(z.re(), z.im());
}

Real norm(const Complex &z)
{
    return z.re() * z.re() + z.im() * z.im();
}

Real arg(const Complex &z)
{
    return atan2(z.im(), z.re());
}

Complex exp(const Complex &z)
{
    const Real m = exp(z.re());
    return {m * cos(z.im()), m * sin(z.im())};
}

Complex expi(const Real &t)
{
    return {cos(t), sin(t)};
}

Complex log(const Complex &z)
{
    if (z.is_zero()) {
        throw DomainError("log(0)");
    }
    return {log(abs(z)), arg(z)};
}

Complex sqrt(const Complex &z)
{
    const Precision prec = z.precision();
    if (z.is_zero()) {
        return Complex(prec);
    }
    const Real r = abs(z);
    if (z.re().sign() >= 0) {
        const Real t = sqrt((r + z.re()) / 2L);
        return {t, z.im() / (t * 2L)};
    }
    const Real t = sqrt((r - z.re()) / 2L);
    // arg = pi lands on the positive imaginary axis.
    return {abs(z.im()) / (t * 2L), z.im().sign() < 0 ? -t : t};
}

Complex pow(const Complex &z, const Complex &w)
{
    return exp(w * log(z));
}

Complex pow(const Complex &z, const Real &w)
{
    return exp(log(z) * w);
}

Complex pow(const Complex &z, long n)
{
    if (n < 0) {
        return Complex(Real(1L, z.precision())) / pow(z, -n);
    }
    Complex result(Real(1L, z.precision()));
    Complex base = z;
    unsigned long e = static_cast<unsigned long>(n);
    while (e != 0) {
        if (e & 1UL) {
            result *= base;
        }
        e >>= 1;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

} // namespace rademacher::hp
