#include <rademacher/saddle/saddle.hpp>

#include <rademacher/contour/quadrature.hpp>
#include <rademacher/errors.hpp>
#include <rademacher/specfun/specfun.hpp>

namespace rademacher::saddle
{

using hp::Complex;
using hp::Precision;
using hp::Real;

namespace
{

constexpr int kMaxIterations = 100;
constexpr int kMaxHalvings = 60;

} // namespace

Real SaddleData::peak_factor() const
{
    return hp::pow(b, p);
}

Complex default_initial_guess(Precision prec)
{
    return {Real::parse("-1.61", prec), Real::parse("7.42", prec)};
}

Complex solve_saddle(Precision prec, const Complex &initial_in)
{
    const Complex initial = initial_in.rounded(prec);
    const Complex guess = default_initial_guess(prec);
    if (abs(initial - guess) > 1L && abs(initial - conj(guess)) > 1L) {
        throw DomainError("solve_saddle: initial guess must lie within distance 1 of -1.61 +- 7.42i");
    }
    const Real tolerance = hp::ldexp_one(-(static_cast<long>(prec) - 16), prec);

    Complex z = initial;
    Complex f = specfun::phi(z);
    Real residual = abs(f);
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        if (residual < tolerance) {
            return z;
        }
        Complex step = f / specfun::phi_derivative(z);
        Complex candidate = z - step;
        Complex fc(prec);
        Real rc(prec);
        int halvings = 0;
        for (;;) {
            if (abs(candidate - initial) > 2L) {
                throw ConvergenceError("solve_saddle: iterate left the radius-2 disk around the initial guess");
            }
            fc = specfun::phi(candidate);
            rc = abs(fc);
            if (rc < residual || halvings == kMaxHalvings) {
                break;
            }
            step /= Real(2L, prec);
            candidate = z - step;
            ++halvings;
        }
        if (!(rc < residual)) {
            // No descent possible at this precision: the residual is at its floor.
            if (residual < tolerance) {
                return z;
            }
            throw ConvergenceError("solve_saddle: Newton step stalled at residual " + residual.to_string(6));
        }
        z = std::move(candidate);
        f = std::move(fc);
        residual = std::move(rc);
    }
    if (residual < tolerance) {
        return z;
    }
    throw ConvergenceError("solve_saddle: no convergence within 100 iterations");
}

SaddleData saddle_constants(const Complex &z0)
{
    const Precision prec = z0.precision();
    const Precision wp = prec + 32;
    if (abs(specfun::phi(z0)) > hp::ldexp_one(-static_cast<long>(prec) / 2, prec)) {
        throw DomainError("saddle_constants: z0 is not a root of phi");
    }
    const Complex z = z0.rounded(wp);
    const Complex ez = exp(z);
    const Complex one_minus = 1L - ez;
    const Real pi = hp::pi(wp);

    const Complex ratio = ez / (z * one_minus); // e^{z0} / (z0 (1 - e^{z0}))
    const Real a = pi / 2L - arg(ratio) / 2L;
    const Complex rho = expi(a);
    const Complex rho2 = rho * rho;
    const Complex radicand = -z * one_minus / (rho2 * ez);
    const Complex alpha_c = -rho2 * ratio;
    const Real theta = arg(one_minus);
    const Real b = Real(1L, wp) / abs(one_minus);
    const Real p = pi * 2L / abs(theta);

    if (radicand.re().sign() <= 0 ||
        abs(radicand.im()) > hp::ldexp_one(-static_cast<long>(prec) / 2, wp) * abs(radicand.re())) {
        throw DomainError("saddle_constants: radicand is not real and positive");
    }
    return SaddleData{z0,
                      rho.rounded(prec),
                      a.rounded(prec),
                      b.rounded(prec),
                      alpha_c.re().rounded(prec),
                      p.rounded(prec),
                      theta.rounded(prec),
                      radicand.rounded(prec),
                      one_minus.rounded(prec)};
}

SaddleData compute_saddle(Precision prec)
{
    return saddle_constants(solve_saddle(prec, default_initial_guess(prec)));
}

namespace
{

// rho (-z0)^{l-1/2} / sqrt(1 - e^{z0})
Complex amplitude(unsigned long l, const SaddleData &sd)
{
    const Precision prec = sd.precision();
    const Real exponent = Real(static_cast<long>(l), prec) - Real(0.5, prec);
    return sd.rho * pow(-sd.z0, exponent) / sqrt(sd.one_minus_ez0);
}

void require_index(unsigned long l, unsigned long n)
{
    if (l == 0 || n == 0) {
        throw RangeError("asymptotic_C: l and N must be positive");
    }
}

} // namespace

Real H(unsigned long l, const Real &n, const SaddleData &sd)
{
    if (l == 0) {
        throw RangeError("H: l must be positive");
    }
    const Precision prec = std::min(sd.precision(), n.precision());
    const Complex amp = amplitude(l, sd);
    const Real phase = n * sd.theta;
    const Real sign(l % 2 == 1 ? 1L : -1L, prec);
    const Real bracket = amp.im() * cos(phase) - amp.re() * sin(phase);
    return sign / hp::pi(prec) * sqrt(sd.radicand.re()) * bracket;
}

AsymptoticValue asymptotic_C(unsigned long l, unsigned long n, const SaddleData &sd)
{
    require_index(l, n);
    const Precision prec = sd.precision();
    const Real nr(static_cast<long>(n), prec);
    Real h = H(l, nr, sd);
    Real main = hp::pow(sd.b, static_cast<long>(n)) * hp::pow(nr, -static_cast<long>(l) - 1) * h;
    return {n, l, std::move(main), std::move(h)};
}

Real saddle_pair_contribution(unsigned long l, unsigned long n, const SaddleData &sd)
{
    require_index(l, n);
    const Precision prec = sd.precision();
    const Real nr(static_cast<long>(n), prec);
    const Complex saddle_integral = sd.rho * pow(-sd.z0, Real(static_cast<long>(l), prec) - Real(0.5, prec)) /
                                    sqrt(sd.one_minus_ez0 * sd.alpha) / nr *
                                    pow(sd.one_minus_ez0, -static_cast<long>(n));
    const Real sign(l % 2 == 1 ? 1L : -1L, prec);
    return sign / (hp::pi(prec) * hp::pow(nr, static_cast<long>(l))) * saddle_integral.im();
}

Complex argument_principle_count(const Complex &center, const Real &radius, std::size_t nodes)
{
    return contour::circle_integral(center, radius, nodes, [](const Complex &z) {
        return specfun::phi_derivative(z) / specfun::phi(z);
    });
}

} // namespace rademacher::saddle
