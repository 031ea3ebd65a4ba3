#pragma once

// Global identities: the characteristic function of S and the total
// probability carried by H.

#include <cmath>
#include <cstddef>
#include <string>

#include "holtsmark/auto.hpp"
#include "holtsmark/error.hpp"
#include "holtsmark/expansions.hpp"
#include "holtsmark/oracle/adaptive.hpp"
#include "holtsmark/oracle/quadrature.hpp"

namespace holtsmark::oracle {

/// Past this point the integrands use the asymptotic series directly.
inline constexpr double tail_start = 30.0;

namespace detail {

/// int_B^inf sum_n c_n beta^{-p_n} d beta = sum_n c_n B^{1-p_n} / (p_n - 1), for S (weight 1)
/// or H (weight 2 p_n).
inline double asymptotic_tail_integral(double from, bool for_h)
{
    double total = 0.0;
    for (std::size_t n = 1; n < 200; ++n) {
        const double p = asymptotic_exponent(n);
        const double c = asymptotic_coefficient(n) * (for_h ? 2.0 * p : 1.0);
        const double t = c * std::pow(from, 1.0 - p) / (p - 1.0);
        total += t;
        if (n % 4 != 0 && std::abs(t) < 1e-18) break;
    }
    return total;
}

} // namespace detail

/// int_{-inf}^{inf} S(beta) e^{-i beta tau} d beta = 2 int_0^inf S(beta) cos(beta tau) d beta.
/// [0, 30] uses s_auto; beyond that the asymptotic series is integrated out to
/// a cut-off B where the remaining oscillatory tail, bounded by 2 S(B) / |tau|
/// (S decreasing), falls under abs_tol / 4. For tau = 0 the tail is integrated
/// analytically term by term.
[[nodiscard]] inline QuadratureReport fourier_transform(double tau, double abs_tol = 1e-8,
                                                        const QuadratureOptions& opt = {})
{
    if (!(std::abs(tau) <= 3.0))
        throw error(errc::domain, "fourier_check: |tau| = " + std::to_string(tau) + " above 3");
    if (!(abs_tol >= quadrature_min_tol)) throw error(errc::domain, "fourier_check: abs_tol must be >= 1e-12");

    AdaptiveIntegrator integrator(opt.max_evaluations);
    const double width = detail::panel_width(tau);
    auto body = [tau](double b) { return 2.0 * s_auto(b).value * std::cos(b * tau); };
    Segment s = integrator.integrate_panels(body, 0.0, tail_start, width, abs_tol / 4);

    double cutoff = tail_start;
    double remainder_bound = 0.0;
    if (tau == 0.0) {
        s.value += 2.0 * detail::asymptotic_tail_integral(tail_start, false);
    } else {
        auto tail = [tau](double b) { return 2.0 * s_asymptotic(b).value * std::cos(b * tau); };
        while (2.0 * 2.0 * s_asymptotic(cutoff).value / std::abs(tau) >= abs_tol / 4) cutoff *= 1.5;
        const Segment t = integrator.integrate_panels(tail, tail_start, cutoff, width, abs_tol / 4);
        s.value += t.value;
        s.abs_err += t.abs_err;
        remainder_bound = 2.0 * 2.0 * s_asymptotic(cutoff).value / std::abs(tau);
    }
    return {s.value, s.abs_err + remainder_bound, integrator.evaluations(), cutoff};
}

/// |fourier_transform(tau) - exp(-|tau|^{3/2})|.
[[nodiscard]] inline double fourier_check(double tau, double abs_tol = 1e-8, const QuadratureOptions& opt = {})
{
    const double expected = std::exp(-std::pow(std::abs(tau), 1.5));
    return std::abs(fourier_transform(tau, abs_tol, opt).value - expected);
}

/// int_a^b H(beta) d beta with h_auto as integrand; b may be infinite.
[[nodiscard]] inline QuadratureReport h_partial_integral(double a, double b, double abs_tol = 1e-9,
                                                         const QuadratureOptions& opt = {})
{
    if (!(a >= 0.0 && b >= a)) throw error(errc::domain, "h_partial_integral: need 0 <= a <= b");
    AdaptiveIntegrator integrator(opt.max_evaluations);
    auto f = [](double x) { return h_auto(x).value; };
    const double finite_end = std::min(b, tail_start);
    Segment s = integrator.integrate_panels(f, a, finite_end, 0.5, abs_tol / 2);
    if (b > tail_start) {
        const double from = std::max(a, tail_start);
        double tail = detail::asymptotic_tail_integral(from, true);
        if (std::isfinite(b)) tail -= detail::asymptotic_tail_integral(b, true);
        s.value += tail;
    }
    return {s.value, s.abs_err, integrator.evaluations(), b};
}

/// Total probability int_0^inf H(beta) d beta.
[[nodiscard]] inline double h_normalization(const QuadratureOptions& opt = {})
{
    return h_partial_integral(0.0, INFINITY, 1e-9, opt).value;
}

} // namespace holtsmark::oracle
