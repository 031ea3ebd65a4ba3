#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "holtsmark/error.hpp"
#include "holtsmark/expansions.hpp"
#include "holtsmark/method.hpp"
#include "holtsmark/series_control.hpp"
#include "holtsmark/specfun/gamma.hpp"
#include "holtsmark/specfun/hypergeometric.hpp"

namespace holtsmark {

/// Hard upper limit for the hypergeometric closed forms. Below it the
/// cancellation guard is what decides whether a value is returned.
inline constexpr double closed_form_max_beta = 6.0;

/// S(beta) as the three-term 2F3 / 3F4 / 2F3 combination with argument -4 beta^6 / 729.
[[nodiscard]] inline EvalResult s_lee(double beta, const SeriesControl& ctl = {})
{
    if (!(beta >= 0.0 && beta <= closed_form_max_beta))
        throw error(errc::domain, "s_lee: beta = " + std::to_string(beta) + " outside [0, 6]");
    using detail::ld;
    using detail::pi_ld;
    using Spec = specfun::BasicHypergeometricSpec<ld>;

    const ld b = beta;
    const ld b2 = b * b;
    const ld w = -4 * b2 * b2 * b2 / 729;

    const auto f1 = specfun::pfq_sum(Spec{{5.0L / 12, 11.0L / 12}, {1.0L / 3, 0.5L, 5.0L / 6}, w}, ctl);
    const auto f2 = specfun::pfq_sum(Spec{{0.75L, 1.0L, 1.25L}, {2.0L / 3, 5.0L / 6, 7.0L / 6, 4.0L / 3}, w}, ctl);
    const auto f3 = specfun::pfq_sum(Spec{{13.0L / 12, 19.0L / 12}, {7.0L / 6, 1.5L, 5.0L / 3}, w}, ctl);

    const ld c1 = specfun::gamma_real(5.0L / 3) / pi_ld;
    const ld c2 = -b2 / (3 * pi_ld);
    const ld c3 = 7 * b2 * b2 * specfun::gamma_real(4.0L / 3) / (81 * pi_ld);

    const ld value = c1 * f1.value.real() + c2 * f2.value.real() + c3 * f3.value.real();
    const ld err = std::abs(c1) * f1.error() + std::abs(c2) * f2.error() + std::abs(c3) * f3.error() +
                   std::numeric_limits<double>::epsilon() * std::abs(value);
    return {static_cast<double>(value), MethodId::lee, static_cast<double>(err), f1.terms + f2.terms + f3.terms};
}

} // namespace holtsmark
