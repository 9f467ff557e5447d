#include <cmath>

#include <rademacher/errors.hpp>
#include <rademacher/specfun/specfun.hpp>

#include "detail.hpp"

namespace rademacher::specfun
{

namespace
{

using hp::Complex;
using hp::Precision;
using hp::Real;

struct SeriesSum {
    Complex value;
    long last_term_exponent;
};

// sum_{k>=1} w^k / k^2 for |w| <= 1/2.
SeriesSum direct_series(const Complex &w, Precision wp)
{
    Complex power = w;
    Complex sum = w;
    long last = detail::magnitude_exponent(w);
    const long max_terms = 8 * static_cast<long>(wp) + 64;
    for (long k = 2; k <= max_terms; ++k) {
        power *= w;
        Complex term = power / (k * k);
        sum += term;
        last = detail::magnitude_exponent(term);
        if (last < detail::magnitude_exponent(sum) - static_cast<long>(wp) - 8) {
            break;
        }
    }
    return {std::move(sum), last};
}

// Li_2(e^mu) = pi^2/6 + mu (1 - log(-mu)) - mu^2/4 - sum_{k odd >= 3} B_{k-1}/(k-1) mu^k/k!
// valid for |mu| < 2 pi.
SeriesSum log_series(const Complex &w, Precision wp)
{
    const Complex mu = log(w);
    const Real pi2_6 = hp::pi(wp) * hp::pi(wp) / 6L;
    Complex sum = mu * (1L - log(-mu)) + pi2_6 - mu * mu / 4L;
    const Complex mu2 = mu * mu;
    Complex power = mu; // mu^k / k!
    long last = detail::magnitude_exponent(sum);
    const long max_terms = 8 * static_cast<long>(wp) + 64;
    for (long k = 3; k <= max_terms; k += 2) {
        power *= mu2;
        power /= (k - 1) * k;
        const mpq_class coeff = -bernoulli(static_cast<unsigned>(k - 1)) / (k - 1);
        Complex term = power * Real(coeff, wp);
        sum += term;
        last = detail::magnitude_exponent(term);
        if (last < detail::magnitude_exponent(sum) - static_cast<long>(wp) - 8) {
            break;
        }
    }
    return {std::move(sum), last};
}

bool is_one(const Complex &w)
{
    return w.re() == 1L && w.im().is_zero();
}

} // namespace

EvalResult dilog(const Complex &w)
{
    const Precision prec = w.precision();
    const Precision wp = prec + detail::kGuardBits;
    const Complex x = w.rounded(wp);

    const Real modulus = abs(x);
    // Points computed as e^{i t} may land an ulp outside the disk.
    if (modulus > Real(1L, wp) + hp::ldexp_one(-(static_cast<long>(prec) - 4), wp)) {
        throw DomainError("dilog: |w| > 1 is outside supported domain");
    }
    if (x.is_zero()) {
        return {Complex(prec), 0.0};
    }
    const Real pi2_6 = hp::pi(wp) * hp::pi(wp) / 6L;
    if (is_one(x)) {
        return {Complex(pi2_6.rounded(prec)), std::ldexp(1.0, -static_cast<int>(prec))};
    }

    const Complex one_minus = 1L - x;
    const Real m_direct = modulus;
    const Real m_reflect = abs(one_minus);
    const Real m_landen = m_direct / m_reflect;
    const Real half(0.5, wp);

    SeriesSum s{Complex(wp), 0};
    if (m_direct <= m_reflect && m_direct <= m_landen && m_direct <= half) {
        s = direct_series(x, wp);
    } else if (m_reflect <= m_landen && m_reflect <= half) {
        // Li2(w) = pi^2/6 - log(w) log(1-w) - Li2(1-w)
        SeriesSum inner = direct_series(one_minus, wp);
        s.value = pi2_6 - log(x) * log(one_minus) - inner.value;
        s.last_term_exponent = inner.last_term_exponent;
    } else if (m_landen <= half) {
        // Li2(w) = -Li2(w/(w-1)) - log(1-w)^2 / 2
        SeriesSum inner = direct_series(x / (x - Real(1L, wp)), wp);
        const Complex l = log(one_minus);
        s.value = -inner.value - l * l / 2L;
        s.last_term_exponent = inner.last_term_exponent;
    } else {
        s = log_series(x, wp);
    }

    const double scale = detail::magnitude_bound(s.value);
    const double tail = std::ldexp(1.5, static_cast<int>(std::max(s.last_term_exponent, -100000L)));
    const double rounding = scale * std::ldexp(1.0, -static_cast<int>(prec));
    return {s.value.rounded(prec), tail + rounding};
}

} // namespace rademacher::specfun
