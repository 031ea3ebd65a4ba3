#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <string>

#include "holtsmark/error.hpp"

namespace holtsmark::specfun {

/// Gamma function of a real argument. Negative non-integer arguments are
/// handled by the C library through reflection.
template <std::floating_point Real>
[[nodiscard]] Real gamma_real(Real x)
{
    if (std::isnan(x))
        throw error(errc::domain, "gamma_real: NaN argument");
    if (x <= 0 && x == std::nearbyint(x))
        throw error(errc::pole, "gamma_real: pole at x = " + std::to_string(static_cast<double>(x)));
    const Real g = std::tgamma(x);
    if (!std::isfinite(g))
        throw error(errc::overflow, "gamma_real: overflow at x = " + std::to_string(static_cast<double>(x)));
    return g;
}

[[nodiscard]] inline double gamma_real(double x) { return gamma_real<double>(x); }

/// Rising factorial (lam)_n = lam (lam+1) ... (lam+n-1), with (lam)_0 = 1.
template <std::floating_point Real>
[[nodiscard]] Real pochhammer(Real lam, std::size_t n)
{
    Real p{1};
    for (std::size_t k = 0; k < n; ++k) {
        p *= lam + static_cast<Real>(k);
        if (!std::isfinite(p))
            throw error(errc::overflow, "pochhammer: product overflow at k = " + std::to_string(k));
    }
    return p;
}

[[nodiscard]] inline double pochhammer(double lam, std::size_t n) { return pochhammer<double>(lam, n); }

} // namespace holtsmark::specfun
