#pragma once

#include <cmath>
#include <string>

#include "holtsmark/closed_form.hpp"
#include "holtsmark/error.hpp"
#include "holtsmark/expansions.hpp"
#include "holtsmark/method.hpp"
#include "holtsmark/series_control.hpp"

namespace holtsmark {

struct AutoOptions {
    /// Closed form at or below, optimally truncated asymptotic series above.
    /// Near 5.3 the rounding error of the closed forms (growing with beta)
    /// and the truncation error of the asymptotic series (shrinking) cross:
    /// both stay below ~3e-11 for S and ~2e-9 for H.
    double switchover = 5.3;
    SeriesControl control{};

    void validate() const
    {
        if (!(switchover >= asymptotic_min_beta && switchover <= closed_form_max_beta))
            throw error(errc::domain, "AutoOptions: switchover must lie in [2, 6]");
    }
};

/// S(beta) by the best available route. S is even, so negative beta is folded.
[[nodiscard]] inline EvalResult s_auto(double beta, const AutoOptions& opt = {})
{
    if (std::isnan(beta)) throw error(errc::domain, "s_auto: NaN beta");
    opt.validate();
    const double b = std::abs(beta);
    if (b <= opt.switchover) return s_airy_closed(b, opt.control);
    return s_asymptotic(b);
}

/// H(beta) by the best available route; H is only defined for beta >= 0.
[[nodiscard]] inline EvalResult h_auto(double beta, const AutoOptions& opt = {})
{
    if (!(beta >= 0.0))
        throw error(errc::domain, "h_auto: beta = " + std::to_string(beta) + " must be non-negative");
    opt.validate();
    if (beta <= opt.switchover) return h_airy_closed(beta, opt.control);
    return h_asymptotic(beta);
}

} // namespace holtsmark
