#pragma once

// Power series in beta^2 around the origin and the divergent expansion in
// beta^{-1/2} at infinity, for both S(beta) and H(beta) = -2 beta S'(beta).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>

#include "holtsmark/detail/compensated_sum.hpp"
#include "holtsmark/error.hpp"
#include "holtsmark/method.hpp"
#include "holtsmark/series_control.hpp"

namespace holtsmark {

inline constexpr double series_max_beta = 12.0;
inline constexpr double asymptotic_min_beta = 2.0;

namespace detail {

using ld = long double;
inline constexpr ld pi_ld = std::numbers::pi_v<ld>;

/// sin(3 pi n / 4), exact from n mod 8.
inline ld sin_three_quarter_pi(std::size_t n)
{
    constexpr ld h = std::numbers::sqrt2_v<ld> / 2;
    constexpr ld table[8] = {0, h, -1, h, 0, -h, 1, -h};
    return table[n % 8];
}

/// |coefficient| * beta^{-(3n+2)/2} of the n-th asymptotic term of S.
inline ld asymptotic_envelope(std::size_t n, ld log_beta)
{
    const ld p = (3.0L * n + 2) / 2;
    return std::exp(std::lgamma(p) - std::lgamma(static_cast<ld>(n) + 1) - p * log_beta) / pi_ld;
}

/// Magnitudes of the small-argument terms of S,
///   m_n = (2/3pi) Gamma((4n+2)/3) beta^{2n} / (2n)!,
/// generated in order. Gamma((4n+2)/3 + 4) / Gamma((4n+2)/3) is a polynomial,
/// so each term follows from the one three places back without exp/lgamma.
class SmallSeriesTerms {
public:
    explicit SmallSeriesTerms(ld beta) : b6_(beta * beta * beta * beta * beta * beta)
    {
        const ld c = 2 / (3 * pi_ld);
        const ld b2 = beta * beta;
        window_[0] = c * std::tgamma(2.0L / 3);
        window_[1] = c * b2 / 2;  // Gamma(2) = 1
        window_[2] = c * std::tgamma(10.0L / 3) * b2 * b2 / 24;
    }

    /// m_n for n = 0, 1, 2, ... on successive calls.
    ld next()
    {
        const ld out = window_[n_ % 3];
        const ld x = (4.0L * n_ + 2) / 3;
        const ld k = 2.0L * n_;
        const ld up = x * (x + 1) * (x + 2) * (x + 3) * b6_;
        const ld down = (k + 1) * (k + 2) * (k + 3) * (k + 4) * (k + 5) * (k + 6);
        window_[n_ % 3] = out * (up / down);
        ++n_;
        return out;
    }

private:
    ld b6_;
    ld window_[3];
    std::size_t n_ = 0;
};

/// Sums a sequence from `next()` with the SeriesControl stopping rule and
/// cancellation guard; the first unused term is the truncation estimate.
template <class Generator>
EvalResult sum_power_series(Generator next, const SeriesControl& ctl, MethodId method, const char* who)
{
    ctl.validate();
    CompensatedSum<ld> sum;
    ld peak = 0, weighted = 0;
    int small_run = 0;
    std::size_t used = 0;
    for (;; ++used) {
        if (used >= ctl.max_terms)
            throw error(errc::no_convergence,
                        std::string(who) + ": no convergence after " + std::to_string(ctl.max_terms) + " terms");
        const ld t = next();
        sum.add(t);
        const ld mag = std::abs(sum.value());
        peak = std::max(peak, mag);
        weighted += static_cast<ld>(used + 1) * std::abs(t);
        if (std::abs(t) <= static_cast<ld>(ctl.rel_tol) * mag) {
            if (++small_run == 2) break;
        } else {
            small_run = 0;
        }
    }
    const ld value = sum.value();
    if (peak > static_cast<ld>(ctl.cancel_guard) * std::abs(value))
        throw error(errc::precision_loss, std::string(who) + ": cancellation guard tripped (peak " +
                                              std::to_string(static_cast<double>(peak)) + ")");
    const ld err = std::abs(next()) + 4 * std::numeric_limits<ld>::epsilon() * weighted +
                   std::numeric_limits<double>::epsilon() * std::abs(value);
    return {static_cast<double>(value), method, static_cast<double>(err), used + 1};
}

/// Optimal truncation of an asymptotic series. `envelope(n)` bounds |term(n)|.
/// Stops before the smallest envelope (or once terms drop below working
/// precision, or at max_terms); the error estimate is the sum of the first
/// two omitted envelopes.
template <class TermFn, class EnvFn>
EvalResult sum_asymptotic(TermFn term, EnvFn envelope, std::size_t max_terms)
{
    constexpr ld eps = std::numeric_limits<ld>::epsilon();
    CompensatedSum<ld> sum;
    std::size_t n = 1;
    ld e = envelope(1);
    for (; n <= max_terms; ++n) {
        const ld next = envelope(n + 1);
        if (e <= eps * std::abs(sum.value()) || next > e) break;
        sum.add(term(n));
        e = next;
    }
    const ld value = sum.value();
    const ld err = e + envelope(n + 1) + std::numeric_limits<double>::epsilon() * std::abs(value);
    return {static_cast<double>(value), MethodId::asymptotic, static_cast<double>(err), n - 1};
}

} // namespace detail

/// n-th coefficient of the small-argument series, S = sum_n c_n beta^{2n}.
[[nodiscard]] inline double small_series_coefficient(std::size_t n)
{
    const detail::ld k = static_cast<detail::ld>(n);
    const detail::ld m = 2 / (3 * detail::pi_ld) * std::tgamma((4 * k + 2) / 3) / std::tgamma(2 * k + 1);
    return static_cast<double>(n % 2 == 0 ? m : -m);
}

/// Truncated small-argument series of S with exactly `terms` terms (n = 0 .. terms-1).
[[nodiscard]] inline double s_series_truncated(double beta, std::size_t terms)
{
    detail::SmallSeriesTerms gen(beta);
    detail::CompensatedSum<detail::ld> sum;
    for (std::size_t n = 0; n < terms; ++n) {
        const detail::ld m = gen.next();
        sum.add(n % 2 == 0 ? m : -m);
    }
    return static_cast<double>(sum.value());
}

/// Truncated asymptotic series of S with exactly `terms` terms (n = 1 .. terms).
[[nodiscard]] inline double s_asymptotic_truncated(double beta, std::size_t terms)
{
    if (!(beta > 0.0)) throw error(errc::domain, "s_asymptotic_truncated: beta must be positive");
    const detail::ld lb = std::log(static_cast<detail::ld>(beta));
    detail::CompensatedSum<detail::ld> sum;
    for (std::size_t n = 1; n <= terms; ++n) {
        const detail::ld t = detail::sin_three_quarter_pi(n) * detail::asymptotic_envelope(n, lb);
        sum.add(n % 2 == 1 ? t : -t);
    }
    return static_cast<double>(sum.value());
}

/// n-th coefficient (n >= 1) of the asymptotic series, S ~ sum_n d_n beta^{-(3n+2)/2}.
[[nodiscard]] inline double asymptotic_coefficient(std::size_t n)
{
    if (n == 0) throw error(errc::domain, "asymptotic_coefficient: n starts at 1");
    const double sign = n % 2 == 1 ? 1.0 : -1.0;
    return sign * static_cast<double>(detail::sin_three_quarter_pi(n) * detail::asymptotic_envelope(n, 0.0L));
}

[[nodiscard]] constexpr double asymptotic_exponent(std::size_t n) noexcept { return (3.0 * n + 2) / 2; }

/// S(beta) from its everywhere-convergent power series, evaluated in
/// extended precision.
[[nodiscard]] inline EvalResult s_series(double beta, const SeriesControl& ctl = {})
{
    if (!(beta >= 0.0 && beta <= series_max_beta))
        throw error(errc::domain, "s_series: beta = " + std::to_string(beta) + " outside [0, 12]");
    auto next = [gen = detail::SmallSeriesTerms(beta), n = std::size_t{0}]() mutable {
        const detail::ld m = gen.next();
        return n++ % 2 == 0 ? m : -m;
    };
    return detail::sum_power_series(next, ctl, MethodId::series, "s_series");
}

/// H(beta) = -2 beta S'(beta) by term-wise differentiation of the power series:
///   H = (8/3pi) sum_{n>=1} (-1)^{n+1} n Gamma((4n+2)/3) beta^{2n} / (2n)!.
[[nodiscard]] inline EvalResult h_series(double beta, const SeriesControl& ctl = {})
{
    if (!(beta >= 0.0 && beta <= series_max_beta))
        throw error(errc::domain, "h_series: beta = " + std::to_string(beta) + " outside [0, 12]");
    auto next = [gen = detail::SmallSeriesTerms(beta), n = std::size_t{0}]() mutable {
        if (n == 0) gen.next();  // the constant term drops out
        ++n;
        const detail::ld m = 4 * static_cast<detail::ld>(n) * gen.next();
        return n % 2 == 1 ? m : -m;
    };
    return detail::sum_power_series(next, ctl, MethodId::series, "h_series");
}

/// S(beta) from the large-argument expansion with optimal truncation.
[[nodiscard]] inline EvalResult s_asymptotic(double beta, std::size_t max_terms = 5000)
{
    if (!(beta >= asymptotic_min_beta) || !std::isfinite(beta))
        throw error(errc::domain, "s_asymptotic: beta = " + std::to_string(beta) + " below 2");
    if (max_terms < 1) throw error(errc::domain, "s_asymptotic: max_terms must be >= 1");
    const detail::ld lb = std::log(static_cast<detail::ld>(beta));
    auto env = [lb](std::size_t n) { return detail::asymptotic_envelope(n, lb); };
    auto term = [&](std::size_t n) {
        const detail::ld s = detail::sin_three_quarter_pi(n) * env(n);
        return n % 2 == 1 ? s : -s;
    };
    return detail::sum_asymptotic(term, env, max_terms);
}

/// H(beta) from the term-wise derivative of the large-argument expansion:
///   H ~ (2/pi) sum_n (-1)^{n+1} Gamma(p_n) sin(3 pi n/4) p_n beta^{-p_n} / n!,  p_n = (3n+2)/2.
[[nodiscard]] inline EvalResult h_asymptotic(double beta, std::size_t max_terms = 5000)
{
    if (!(beta >= asymptotic_min_beta) || !std::isfinite(beta))
        throw error(errc::domain, "h_asymptotic: beta = " + std::to_string(beta) + " below 2");
    if (max_terms < 1) throw error(errc::domain, "h_asymptotic: max_terms must be >= 1");
    const detail::ld lb = std::log(static_cast<detail::ld>(beta));
    auto env = [lb](std::size_t n) {
        return 2 * static_cast<detail::ld>(asymptotic_exponent(n)) * detail::asymptotic_envelope(n, lb);
    };
    auto term = [&](std::size_t n) {
        const detail::ld s = detail::sin_three_quarter_pi(n) * env(n);
        return n % 2 == 1 ? s : -s;
    };
    return detail::sum_asymptotic(term, env, max_terms);
}

} // namespace holtsmark
