#pragma once

// Ground truth for S and H straight from their defining Fourier integrals.
// Slow on purpose: panels never span more than half an oscillation.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

#include "holtsmark/error.hpp"
#include "holtsmark/oracle/adaptive.hpp"

namespace holtsmark::oracle {

struct QuadratureReport {
    double value = 0.0;
    double abs_err = 0.0;  ///< adaptive estimate plus the truncated-tail bound
    std::size_t evaluations = 0;
    double truncation_point = 0.0;  ///< upper limit X of the integration variable
};

struct QuadratureOptions {
    std::size_t max_evaluations = 5'000'000;
};

inline constexpr double quadrature_min_tol = 1e-12;
inline constexpr double quadrature_max_beta = 30.0;

namespace detail {

inline constexpr double pi = std::numbers::pi;

inline void check_arguments(double beta, double abs_tol, const char* who)
{
    if (!(abs_tol >= quadrature_min_tol))
        throw error(errc::domain, std::string(who) + ": abs_tol must be >= 1e-12");
    if (!(std::abs(beta) <= quadrature_max_beta))
        throw error(errc::domain, std::string(who) + ": |beta| = " + std::to_string(beta) + " above 30");
}

/// X with exp(-X^{3/2}) = abs_tol / 10.
inline double truncation_point(double abs_tol) { return std::pow(std::log(10.0 / abs_tol), 2.0 / 3.0); }

/// int_X^inf exp(-x^{3/2}) dx <= exp(-X^{3/2}) / (1.5 sqrt X), by convexity of x^{3/2}.
inline double tail_bound_s(double x) { return std::exp(-x * std::sqrt(x)) / (1.5 * std::sqrt(x)); }

/// int_X^inf x exp(-x^{3/2}) dx = (2/3) Gamma(4/3, U) <= (2/3) U^{1/3} e^{-U} / (1 - 1/(3U)), U = X^{3/2} > 1/3.
inline double tail_bound_h(double x)
{
    const double u = x * std::sqrt(x);
    return 2.0 / 3.0 * std::cbrt(u) * std::exp(-u) / (1.0 - 1.0 / (3.0 * u));
}

inline double panel_width(double frequency) { return std::min(1.0, pi / std::abs(frequency)); }

} // namespace detail

/// S(beta) = (1/pi) int_0^inf cos(beta x) exp(-x^{3/2}) dx.
[[nodiscard]] inline QuadratureReport s_quadrature(double beta, double abs_tol = 1e-12,
                                                   const QuadratureOptions& opt = {})
{
    using namespace detail;
    check_arguments(beta, abs_tol, "s_quadrature");
    const double x_max = truncation_point(abs_tol);
    AdaptiveIntegrator integrator(opt.max_evaluations);
    auto f = [beta](double x) { return std::cos(beta * x) * std::exp(-x * std::sqrt(x)) / pi; };
    const Segment s = integrator.integrate_panels(f, 0.0, x_max, panel_width(beta), 0.9 * abs_tol);
    QuadratureReport r{s.value, s.abs_err + tail_bound_s(x_max) / pi, integrator.evaluations(), x_max};
    if (r.abs_err > abs_tol)
        throw error(errc::budget_exceeded, "s_quadrature: tolerance not reached (" + std::to_string(r.abs_err) + ")");
    return r;
}

/// H(beta) = (2 beta / pi) int_0^inf x sin(beta x) exp(-x^{3/2}) dx.
[[nodiscard]] inline QuadratureReport h_quadrature(double beta, double abs_tol = 1e-12,
                                                   const QuadratureOptions& opt = {})
{
    using namespace detail;
    check_arguments(beta, abs_tol, "h_quadrature");
    if (beta < 0.0) throw error(errc::domain, "h_quadrature: beta must be non-negative");
    if (beta == 0.0) return {0.0, 0.0, 0, 0.0};
    const double scale = 2.0 * beta / pi;
    double x_max = truncation_point(abs_tol);
    while (scale * tail_bound_h(x_max) >= abs_tol / 10) x_max += 0.25;
    AdaptiveIntegrator integrator(opt.max_evaluations);
    auto f = [beta, scale](double x) { return scale * x * std::sin(beta * x) * std::exp(-x * std::sqrt(x)); };
    const Segment s = integrator.integrate_panels(f, 0.0, x_max, panel_width(beta), 0.9 * abs_tol);
    QuadratureReport r{s.value, s.abs_err + scale * tail_bound_h(x_max), integrator.evaluations(), x_max};
    if (r.abs_err > abs_tol)
        throw error(errc::budget_exceeded, "h_quadrature: tolerance not reached (" + std::to_string(r.abs_err) + ")");
    return r;
}

/// H(beta) through the rescaled integral (2 / (pi beta)) int_0^inf x sin(x) exp(-(x/beta)^{3/2}) dx.
/// truncation_point is reported in the rescaled variable.
[[nodiscard]] inline QuadratureReport h_quadrature_rescaled(double beta, double abs_tol = 1e-12,
                                                            const QuadratureOptions& opt = {})
{
    using namespace detail;
    check_arguments(beta, abs_tol, "h_quadrature_rescaled");
    if (!(beta > 0.0)) throw error(errc::domain, "h_quadrature_rescaled: beta must be positive");
    const double scale = 2.0 / (pi * beta);
    // Substituting x = beta y maps the tail onto the unscaled one.
    double y_max = truncation_point(abs_tol);
    while (2.0 * beta / pi * tail_bound_h(y_max) >= abs_tol / 10) y_max += 0.25;
    const double x_max = beta * y_max;
    AdaptiveIntegrator integrator(opt.max_evaluations);
    auto f = [beta, scale](double x) {
        const double y = x / beta;
        return scale * x * std::sin(x) * std::exp(-y * std::sqrt(y));
    };
    const Segment s = integrator.integrate_panels(f, 0.0, x_max, std::min(beta, pi), 0.9 * abs_tol);
    QuadratureReport r{s.value, s.abs_err + 2.0 * beta / pi * tail_bound_h(y_max), integrator.evaluations(),
                       x_max};
    if (r.abs_err > abs_tol)
        throw error(errc::budget_exceeded,
                    "h_quadrature_rescaled: tolerance not reached (" + std::to_string(r.abs_err) + ")");
    return r;
}

} // namespace holtsmark::oracle
