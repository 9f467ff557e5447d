#ifndef RADEMACHER_SADDLE_SADDLE_HPP
#define RADEMACHER_SADDLE_SADDLE_HPP

#include <cstddef>

#include <rademacher/hp/complex.hpp>

namespace rademacher::saddle
{

/// Every constant of the leading-order asymptotics of C_{0,1,l}(N).
struct SaddleData {
    hp::Complex z0;        ///< root of phi near -1.61 + 7.42i
    hp::Complex rho;       ///< steepest-descent direction e^{ia}
    hp::Real a;            ///< pi/2 - arg(e^{z0} / (z0 (1 - e^{z0}))) / 2
    hp::Real b;            ///< 1 / |1 - e^{z0}|, the exponential growth base
    hp::Real alpha;        ///< Re(-rho^2 e^{z0} / (z0 (1 - e^{z0})))
    hp::Real p;            ///< 2 pi / |theta|, the period of H_l
    hp::Real theta;        ///< arg(1 - e^{z0})
    hp::Complex radicand;  ///< -z0 (1 - e^{z0}) / (rho^2 e^{z0}); real, equal to 1/alpha
    hp::Complex one_minus_ez0;

    hp::Precision precision() const noexcept
    {
        return z0.precision();
    }
    /// b^p, the growth factor between successive oscillation peaks.
    hp::Real peak_factor() const;
};

/// -1.61 + 7.42i at the given precision.
hp::Complex default_initial_guess(hp::Precision prec);

/// Root of phi by safeguarded Newton iteration (step halving while |phi| does
/// not decrease). The initial guess must lie within distance 1 of
/// -1.61 + 7.42i or of its conjugate. Throws ConvergenceError after 100
/// iterations or when an iterate leaves the radius-2 disk around `initial`.
/// On return |phi(z0)| < 2^-(prec-16).
hp::Complex solve_saddle(hp::Precision prec, const hp::Complex &initial);

/// Derives a, rho, b, theta, p and alpha from a solved z0. Throws DomainError
/// if |phi(z0)| exceeds 2^-(prec/2) or the radicand is not real positive.
SaddleData saddle_constants(const hp::Complex &z0);

/// solve_saddle + saddle_constants from the default guess.
SaddleData compute_saddle(hp::Precision prec = hp::kDefaultPrecision);

/// H_l(N): bounded, periodic in N with period p. Accepts real N.
hp::Real H(unsigned long l, const hp::Real &n, const SaddleData &sd);

struct AsymptoticValue {
    unsigned long N = 0;
    unsigned long l = 0;
    hp::Real main_term; ///< b^N N^{-l-1} H_l(N)
    hp::Real H_value;
};

/// Leading term of C_{0,1,l}(N). Throws RangeError for l = 0 or N = 0.
AsymptoticValue asymptotic_C(unsigned long l, unsigned long n, const SaddleData &sd);

/// The same main term written as the saddle-pair contribution
/// ((-1)^{l-1} / (pi N^l)) Im(rho (-z0)^{l-1/2} / sqrt(alpha (1 - e^{z0})) N^{-1} (1 - e^{z0})^{-N}).
hp::Real saddle_pair_contribution(unsigned long l, unsigned long n, const SaddleData &sd);

/// (1 / 2 pi i) closed integral of phi'/phi over |z - center| = radius with a
/// `nodes`-point trapezoid rule: the number of zeros of phi inside.
hp::Complex argument_principle_count(const hp::Complex &center, const hp::Real &radius, std::size_t nodes);

} // namespace rademacher::saddle

#endif
