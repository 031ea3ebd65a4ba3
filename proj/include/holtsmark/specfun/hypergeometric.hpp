#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "holtsmark/detail/compensated_sum.hpp"
#include "holtsmark/error.hpp"
#include "holtsmark/series_control.hpp"

namespace holtsmark {

using ComplexValue = std::complex<double>;

namespace specfun {

/// Parameters and argument of a generalized hypergeometric series pFq.
template <std::floating_point Real>
struct BasicHypergeometricSpec {
    std::vector<Real> numerators;
    std::vector<Real> denominators;
    std::complex<Real> argument{};

    void validate() const
    {
        for (Real b : denominators) {
            if (b <= 0 && b == std::nearbyint(b))
                throw error(errc::domain,
                            "pfq: denominator parameter " + std::to_string(static_cast<double>(b)) +
                                " is zero or a negative integer");
        }
        const auto p = numerators.size();
        const auto q = denominators.size();
        if (p > q + 1)
            throw error(errc::domain, "pfq: p > q + 1 series diverges");
        if (p == q + 1 && std::abs(argument) >= 1)
            throw error(errc::domain, "pfq: p = q + 1 requires |z| < 1");
    }
};

using HypergeometricSpec = BasicHypergeometricSpec<double>;

/// A summed pFq series with its bookkeeping.
template <std::floating_point Real>
struct PfqSum {
    std::complex<Real> value;
    Real truncation_error = 0; ///< magnitude of the first omitted term
    Real rounding_error = 0;   ///< eps * sum_n (n+1)|term_n|, term-generation drift
    Real peak = 0;             ///< largest |partial sum| seen
    std::size_t terms = 0;

    [[nodiscard]] Real error() const noexcept { return truncation_error + rounding_error; }
};

/// Sums pFq(a; b; z) term by term. Terms follow the ratio recurrence
///   t_{n+1} = t_n * prod(a_i + n) / prod(b_j + n) * z / (n + 1)
/// and the loop stops once two consecutive terms fall below
/// rel_tol * |partial sum|. Throws precision_loss when the running peak
/// exceeds cancel_guard times the final magnitude.
template <std::floating_point Real>
[[nodiscard]] PfqSum<Real> pfq_sum(const BasicHypergeometricSpec<Real>& spec, const SeriesControl& ctl = {})
{
    spec.validate();
    ctl.validate();

    using Complex = std::complex<Real>;
    const Complex z = spec.argument;
    const Real tol = static_cast<Real>(ctl.rel_tol);

    auto ratio = [&](std::size_t n) {
        const Real k = static_cast<Real>(n);
        Real r{1};
        for (Real a : spec.numerators) r *= a + k;
        for (Real b : spec.denominators) r /= b + k;
        return z * (r / (k + 1));
    };

    holtsmark::detail::CompensatedSum<Complex> sum;
    Complex term{1};
    sum.add(term);

    PfqSum<Real> out;
    out.peak = 1;
    Real weighted = 1;
    int small_run = 0;
    std::size_t n = 0;
    for (;;) {
        if (n + 1 >= ctl.max_terms)
            throw error(errc::no_convergence,
                        "pfq: no convergence after " + std::to_string(ctl.max_terms) + " terms");
        term *= ratio(n);
        ++n;
        if (!std::isfinite(term.real()) || !std::isfinite(term.imag()))
            throw error(errc::overflow, "pfq: term overflow at n = " + std::to_string(n));
        sum.add(term);
        const Real mag = std::abs(sum.value());
        out.peak = std::max(out.peak, mag);
        weighted += static_cast<Real>(n + 1) * std::abs(term);
        if (std::abs(term) <= tol * mag) {
            if (++small_run == 2) break;
        } else {
            small_run = 0;
        }
    }

    out.value = sum.value();
    out.terms = n + 1;
    out.truncation_error = std::abs(term * ratio(n));
    out.rounding_error = std::numeric_limits<Real>::epsilon() * weighted;

    const Real final_mag = std::abs(out.value);
    if (out.peak > static_cast<Real>(ctl.cancel_guard) * final_mag)
        throw error(errc::precision_loss,
                    "pfq: partial sums peaked at " + std::to_string(static_cast<double>(out.peak)) +
                        " against a final magnitude of " + std::to_string(static_cast<double>(final_mag)));
    return out;
}

/// pFq(a; b; z) in double precision.
[[nodiscard]] inline ComplexValue pfq(const HypergeometricSpec& spec, const SeriesControl& ctl = {})
{
    return pfq_sum(spec, ctl).value;
}

} // namespace specfun
} // namespace holtsmark
