#ifndef RADEMACHER_SRC_SPECFUN_DETAIL_HPP
#define RADEMACHER_SRC_SPECFUN_DETAIL_HPP

#include <algorithm>
#include <cmath>

#include <rademacher/hp/complex.hpp>

namespace rademacher::specfun::detail
{

inline constexpr hp::Precision kGuardBits = 32;

// Binary exponent of max(|re|, |im|); a cheap stand-in for log2|z|.
inline long magnitude_exponent(const hp::Complex &z)
{
    return std::max(z.re().exponent(), z.im().exponent());
}

inline double magnitude_bound(const hp::Complex &z)
{
    const long e = magnitude_exponent(z);
    if (e < -100000) {
        return 0.0;
    }
    // |z| <= sqrt(2) * 2^e
    return std::ldexp(1.5, static_cast<int>(std::min(e, 1000L)));
}

} // namespace rademacher::specfun::detail

#endif
