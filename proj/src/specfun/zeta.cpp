#include <cmath>
#include <limits>

#include <rademacher/errors.hpp>
#include <rademacher/specfun/specfun.hpp>

#include "detail.hpp"

namespace rademacher::specfun
{

using hp::Complex;
using hp::Precision;
using hp::Real;

EvalResult hurwitz_zeta(const Complex &s_in, const Complex &q_in)
{
    const Precision prec = std::min(s_in.precision(), q_in.precision());
    const Precision wp = prec + detail::kGuardBits;
    if (s_in.re() <= 1L) {
        throw DomainError("hurwitz_zeta: Re s <= 1 is outside convergence region");
    }
    if (q_in.re().sign() < 0 || q_in.is_zero()) {
        throw DomainError("hurwitz_zeta: requires Re q >= 0 and q != 0");
    }
    const Complex s = s_in.rounded(wp);
    const Complex q = q_in.rounded(wp);

    // Euler-Maclaurin with cut M: the remainder terms shrink like
    // (2k)^2 / (2 pi |q+M|)^2 until 2k ~ 2 pi |q+M|.
    const long m = static_cast<long>(wp) / 4 + static_cast<long>(std::ceil(abs(s).to_double())) + 8;

    Complex sum(wp);
    for (long n = 0; n < m; ++n) {
        sum += exp(-s * log(q + n));
    }
    const Complex qm = q + m;
    const Complex log_qm = log(qm);
    const Complex qm_pow = exp(-s * log_qm); // (q+M)^{-s}
    sum += qm_pow * qm / (s - Real(1L, wp));
    sum += qm_pow / 2L;

    // k-th correction: B_2k/(2k)! * (s)_{2k-1} * (q+M)^{-s-2k+1}
    const Complex inv_qm2 = Complex(Real(1L, wp)) / (qm * qm);
    Complex rising = s;             // (s)_{2k-1}
    Complex power = qm_pow / qm;    // (q+M)^{-s-2k+1} at k = 1
    Real factorial(2L, wp);         // (2k)!
    long last = detail::magnitude_exponent(sum);
    const long target = detail::magnitude_exponent(sum) - static_cast<long>(wp) - 8;
    long previous = std::numeric_limits<long>::max();
    for (long k = 1; k <= 4 * m; ++k) {
        if (k > 1) {
            rising *= (s + (2 * k - 3)) * (s + (2 * k - 2));
            power *= inv_qm2;
            factorial *= (2 * k - 1) * (2 * k);
        }
        Complex term = rising * power * (Real(bernoulli(static_cast<unsigned>(2 * k)), wp) / factorial);
        const long e = detail::magnitude_exponent(term);
        if (e > previous) {
            break; // asymptotic series started to diverge
        }
        sum += term;
        previous = e;
        last = e;
        if (e < target) {
            break;
        }
    }
    const double tail = std::ldexp(1.5, static_cast<int>(std::max(last, -100000L)));
    const double rounding = detail::magnitude_bound(sum) * std::ldexp(1.0, -static_cast<int>(prec));
    return {sum.rounded(prec), tail + rounding};
}

EvalResult polylog_jonquiere(const Complex &s_in, const Complex &z_in)
{
    const Precision prec = std::min(s_in.precision(), z_in.precision());
    const Precision wp = prec + detail::kGuardBits;
    if (!s_in.im().is_zero()) {
        throw DomainError("polylog_jonquiere: complex order needs complex Gamma (unsupported)");
    }
    if (s_in.re() <= 1L) {
        throw DomainError("polylog_jonquiere: requires Re s > 1");
    }
    if (z_in.re().sign() > 0 || abs(z_in.im()) >= 8L) {
        throw DomainError("polylog_jonquiere: requires Re z <= 0 and |Im z| < 8");
    }
    const Complex s = s_in.rounded(wp);
    const Complex z = z_in.rounded(wp);
    const Real two_pi = hp::pi(wp) * 2L;

    // log(-e^z) / (2 pi i)
    const Complex shift = log(-exp(z)) / mul_i(Complex(two_pi));
    const Real half(0.5, wp);
    const Complex q_plus = shift + half;
    const Complex q_minus = half - shift;
    if (q_plus.is_zero() || q_minus.is_zero() || abs(z) < hp::ldexp_one(-static_cast<long>(prec) / 2, wp)) {
        throw DomainError("polylog_jonquiere: z = 0 or +-2 pi i is singular");
    }

    const EvalResult zp = hurwitz_zeta(s, q_plus);
    const EvalResult zm = hurwitz_zeta(s, q_minus);
    const Complex i_pow = expi(hp::pi(wp) * s.re() / 2L); // i^s for real s
    const Real prefactor = hp::gamma(s.re()) / hp::pow(two_pi, s.re());

    const Complex value = (i_pow * zp.value + conj(i_pow) * zm.value) * prefactor;
    const double scale = std::abs(prefactor.to_double());
    const double err = scale * (zp.error_estimate + zm.error_estimate) +
                       detail::magnitude_bound(value) * std::ldexp(1.0, -static_cast<int>(prec));
    return {value.rounded(prec), err};
}

EvalResult polylog_series(const Real &nu, const Complex &w)
{
    const Precision prec = std::min(nu.precision(), w.precision());
    const Precision wp = prec + detail::kGuardBits;
    const Real r = abs(w);
    if (r >= Real(0.9990234375, prec)) {
        throw DomainError("polylog_series: requires |w| < 1 - 2^-10");
    }
    const Complex x = w.rounded(wp);
    const Real minus_nu = -nu.rounded(wp);
    // |term_k| = k^{-nu} |w|^k peaks near k = -nu / -log|w|; only stop after that.
    const double log_r = std::log(r.to_double());
    const double peak = std::max(1.0, -nu.to_double() / -log_r);
    Complex sum(wp);
    Complex power = x;
    const long target = -static_cast<long>(wp) - 4;
    for (unsigned long k = 1;; ++k) {
        const Complex term = power * pow(Real(static_cast<long>(k), wp), minus_nu);
        sum += term;
        if (static_cast<double>(k) > peak &&
            (term.is_zero() || detail::magnitude_exponent(term) < detail::magnitude_exponent(sum) + target)) {
            break;
        }
        if (k > 10000000UL) {
            throw ConvergenceError("polylog_series: no convergence");
        }
        power *= x;
    }
    return {sum.rounded(prec), detail::magnitude_bound(sum) * std::ldexp(1.0, -static_cast<int>(prec))};
}

} // namespace rademacher::specfun
