#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "holtsmark/detail/compensated_sum.hpp"
#include "holtsmark/error.hpp"
#include "holtsmark/specfun/bessel.hpp"
#include "holtsmark/specfun/gamma.hpp"

namespace holtsmark::specfun {

template <class Real>
struct AiryBiPair {
    ValueWithError<Real> bi;
    ValueWithError<Real> bi_prime;
};

inline constexpr double airy_min_argument = -40.0;
inline constexpr double airy_max_argument = 5.0;

namespace detail {

// Below this the Maclaurin terms grow past ~1e4 relative to the result and
// the Bessel route is the more accurate one.
inline constexpr long double airy_series_limit = -6.0L;

/// Bi and Bi' from the Maclaurin pair, Bi = Bi(0) f + Bi'(0) g, with
///   f = sum 3^k (1/3)_k x^{3k} / (3k)!,   g = sum 3^k (2/3)_k x^{3k+1} / (3k+1)!.
inline AiryBiPair<long double> airy_bi_series(long double x)
{
    using holtsmark::detail::CompensatedSum;
    const long double c1 = 1.0L / (std::cbrt(std::sqrt(3.0L)) * gamma_real(2.0L / 3));
    const long double c2 = std::cbrt(std::sqrt(3.0L)) / gamma_real(1.0L / 3);
    const long double x3 = x * x * x;
    constexpr long double eps = std::numeric_limits<long double>::epsilon();

    long double f = c1, g = c2 * x;            // Bi terms
    long double df = c1 * x * x / 2, dg = c2;  // Bi' terms
    CompensatedSum<long double> bi, dbi;
    bi.add(f + g);
    dbi.add(df + dg);
    long double w_bi = std::abs(f) + std::abs(g);
    long double w_dbi = std::abs(df) + std::abs(dg);
    for (int k = 0; k < 400; ++k) {
        f *= x3 / ((3 * k + 2) * (3 * k + 3));
        g *= x3 / ((3 * k + 3) * (3 * k + 4));
        df *= x3 / ((3 * k + 3) * (3 * k + 5));
        dg *= x3 / ((3 * k + 1) * (3 * k + 3));
        bi.add(f + g);
        dbi.add(df + dg);
        w_bi += (k + 2) * (std::abs(f) + std::abs(g));
        w_dbi += (k + 2) * (std::abs(df) + std::abs(dg));
        const bool past_peak = 9.0L * (k + 1) * (k + 1) > std::abs(x3);
        if (past_peak && std::abs(f) + std::abs(g) <= eps * std::abs(bi.value()) &&
            std::abs(df) + std::abs(dg) <= eps * std::abs(dbi.value()))
            break;
    }
    return {{bi.value(), eps * w_bi}, {dbi.value(), eps * w_dbi}};
}

/// Bi(-t) = sqrt(t/3) [J_{-1/3}(z) - J_{1/3}(z)],  Bi'(-t) = (t/sqrt 3) [J_{-2/3}(z) + J_{2/3}(z)],
/// z = (2/3) t^{3/2}, for t > 0.
inline AiryBiPair<long double> airy_bi_bessel(long double t)
{
    const long double z = 2.0L / 3 * t * std::sqrt(t);
    const auto jm1 = bessel_j(-1.0L / 3, z), jp1 = bessel_j(1.0L / 3, z);
    const auto jm2 = bessel_j(-2.0L / 3, z), jp2 = bessel_j(2.0L / 3, z);
    const long double s1 = std::sqrt(t / 3);
    const long double s2 = t / std::sqrt(3.0L);
    return {{s1 * (jm1.value - jp1.value), s1 * (jm1.error + jp1.error)},
            {s2 * (jm2.value + jp2.value), s2 * (jm2.error + jp2.error)}};
}

inline AiryBiPair<long double> airy_bi_pair(long double x)
{
    if (!(x >= airy_min_argument && x <= airy_max_argument))
        throw error(errc::domain, "airy_bi: x = " + std::to_string(static_cast<double>(x)) + " outside [-40, 5]");
    return x >= airy_series_limit ? airy_bi_series(x) : airy_bi_bessel(-x);
}

} // namespace detail

/// Airy function of the second kind on [-40, 5].
[[nodiscard]] inline double airy_bi(double x)
{
    return static_cast<double>(detail::airy_bi_pair(x).bi.value);
}

/// Derivative of the Airy function of the second kind on [-40, 5].
[[nodiscard]] inline double airy_bi_prime(double x)
{
    return static_cast<double>(detail::airy_bi_pair(x).bi_prime.value);
}

} // namespace holtsmark::specfun
