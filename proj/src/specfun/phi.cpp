#include <rademacher/errors.hpp>
#include <rademacher/specfun/specfun.hpp>

#include "detail.hpp"

namespace rademacher::specfun
{

using hp::Complex;
using hp::Precision;
using hp::Real;

namespace
{

// Shared pieces of phi and its derivative at working precision.
struct PhiParts {
    Complex ez;           // e^z
    Complex log_one_minus; // log(1 - e^z)
    Complex rate;         // (Li2(e^z) - pi^2/6) / z
};

PhiParts parts(const Complex &z_in)
{
    const Precision prec = z_in.precision();
    const Precision wp = prec + detail::kGuardBits;
    if (z_in.is_zero()) {
        throw DomainError("phi: z = 0 is a singularity");
    }
    if (z_in.re().sign() > 0) {
        throw DomainError("phi: requires Re z <= 0");
    }
    const Complex z = z_in.rounded(wp);
    Complex ez = exp(z);
    const Complex one_minus = 1L - ez;
    if (abs(one_minus) < hp::ldexp_one(-static_cast<long>(prec) / 2, wp)) {
        throw DomainError("phi: e^z = 1 is a singularity");
    }
    // Re(1 - e^z) >= 0 on Re z <= 0, so the principal log is never on its cut.
    Complex log_one_minus = log(one_minus);
    const Real pi2_6 = hp::pi(wp) * hp::pi(wp) / 6L;
    Complex rate = (dilog(ez).value - pi2_6) / z;
    return {std::move(ez), std::move(log_one_minus), std::move(rate)};
}

} // namespace

Complex exponent_rate(const Complex &z)
{
    return parts(z).rate.rounded(z.precision());
}

Complex phi(const Complex &z)
{
    const PhiParts p = parts(z);
    return (p.log_one_minus + p.rate).rounded(z.precision());
}

Complex phi_derivative(const Complex &z_in)
{
    const PhiParts p = parts(z_in);
    const Complex z = z_in.rounded(p.ez.precision());
    const Complex d = -p.ez / (1L - p.ez) - p.log_one_minus / z - p.rate / z;
    return d.rounded(z_in.precision());
}

} // namespace rademacher::specfun
