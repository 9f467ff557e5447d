#ifndef RADEMACHER_SPECFUN_SPECFUN_HPP
#define RADEMACHER_SPECFUN_SPECFUN_HPP

#include <gmpxx.h>

#include <rademacher/hp/complex.hpp>

namespace rademacher::specfun
{

/// A value together with the evaluator's own bound on its truncation error
/// (absolute).
struct EvalResult {
    hp::Complex value;
    double error_estimate = 0.0;
};

/// Bernoulli number B_n (B_1 = -1/2), exact. Cached; safe to call concurrently.
mpq_class bernoulli(unsigned n);

/// Li_2(w) on the closed unit disk, at the precision of `w`.
///
/// Uses the direct series, the reflection w -> 1-w or the Landen map
/// w -> w/(w-1), whichever gives the smallest inner modulus, as long as that
/// modulus is at most 1/2. Otherwise (the neighbourhood of e^{+-i pi/3} on
/// the unit circle, where all three maps have modulus ~1) the Bernoulli
/// expansion in log w is used. Throws DomainError for |w| > 1.
EvalResult dilog(const hp::Complex &w);

/// (Li_2(e^z) - pi^2/6) / z, the exponential rate of the approximate integrand.
hp::Complex exponent_rate(const hp::Complex &z);

/// phi(z) = log(1 - e^z) + (Li_2(e^z) - pi^2/6) / z; the saddle point is its
/// root near -1.61 + 7.42i. Requires Re z <= 0; throws DomainError at the
/// singularities z = 0 and e^z = 1.
hp::Complex phi(const hp::Complex &z);

/// d phi / dz = -e^z/(1-e^z) - log(1-e^z)/z - (Li_2(e^z) - pi^2/6)/z^2.
hp::Complex phi_derivative(const hp::Complex &z);

/// Hurwitz zeta sum_{n>=0} (q+n)^{-s} by Euler-Maclaurin summation.
/// Requires Re s > 1, Re q >= 0 and q != 0.
EvalResult hurwitz_zeta(const hp::Complex &s, const hp::Complex &q);

/// Li_{1-s}(e^z) through Jonquiere's Hurwitz-zeta representation
///   Gamma(s)/(2 pi)^s (i^s zeta(s, 1/2 + L/(2 pi i)) + i^-s zeta(s, 1/2 - L/(2 pi i))),
/// L = log(-e^z). Requires real s > 1, Re z <= 0, |Im z| < 8, z not 0 or +-2 pi i.
EvalResult polylog_jonquiere(const hp::Complex &s, const hp::Complex &z);

/// Li_nu(w) = sum_{k>=1} w^k / k^nu by direct summation, real order nu.
/// Reference evaluator; requires |w| < 1 - 2^-10 (DomainError otherwise).
EvalResult polylog_series(const hp::Real &nu, const hp::Complex &w);

} // namespace rademacher::specfun

#endif
