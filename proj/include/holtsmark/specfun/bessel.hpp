#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "holtsmark/detail/compensated_sum.hpp"
#include "holtsmark/error.hpp"
#include "holtsmark/specfun/gamma.hpp"

namespace holtsmark::specfun {

/// A value together with an absolute error estimate.
template <class Real>
struct ValueWithError {
    Real value{};
    Real error{};
};

namespace detail {

// Past this argument the ascending series loses more than ~1e-12 relative in
// extended precision, so the C++17 special functions take over.
inline constexpr long double bessel_series_limit = 15.0L;

/// Ascending series sum_k (-1)^k / (k! Gamma(k+nu+1)) (x/2)^(2k+nu).
inline ValueWithError<long double> bessel_j_series(long double nu, long double x)
{
    using holtsmark::detail::CompensatedSum;
    const long double half = x / 2;
    const long double q = half * half;
    long double term = std::pow(half, nu) / gamma_real(nu + 1);
    CompensatedSum<long double> sum;
    sum.add(term);
    long double weighted = std::abs(term);
    for (int k = 0; k < 400; ++k) {
        term *= -q / ((k + 1) * (k + 1 + nu));
        sum.add(term);
        weighted += (k + 2) * std::abs(term);
        if ((k + 1) * (k + 1) > q && std::abs(term) <= std::numeric_limits<long double>::epsilon() * std::abs(sum.value()))
            break;
    }
    return {sum.value(), std::numeric_limits<long double>::epsilon() * weighted};
}

/// J_nu for nu in {+-1/3, +-2/3} at large argument through libstdc++'s
/// J and Y, with J_{-nu} = cos(nu pi) J_nu - sin(nu pi) Y_nu.
inline ValueWithError<long double> bessel_j_reflected(long double nu, long double x)
{
    const double order = static_cast<double>(std::abs(nu));
    const long double j = std::cyl_bessel_j(order, static_cast<double>(x));
    constexpr long double eps = std::numeric_limits<double>::epsilon();
    if (nu > 0)
        return {j, 16 * eps * std::abs(j)};
    const long double y = std::cyl_neumann(order, static_cast<double>(x));
    const long double angle = std::numbers::pi_v<long double> * order;
    return {std::cos(angle) * j - std::sin(angle) * y, 16 * eps * (std::abs(j) + std::abs(y))};
}

inline ValueWithError<long double> bessel_j(long double nu, long double x)
{
    return x <= bessel_series_limit ? bessel_j_series(nu, x) : bessel_j_reflected(nu, x);
}

inline long double fractional_order(double nu)
{
    constexpr std::array<long double, 4> orders{-2.0L / 3, -1.0L / 3, 1.0L / 3, 2.0L / 3};
    for (long double v : orders)
        if (std::abs(static_cast<long double>(nu) - v) < 1e-12L) return v;
    throw error(errc::domain, "bessel_j_frac: order " + std::to_string(nu) + " is not one of -2/3, -1/3, 1/3, 2/3");
}

} // namespace detail

inline constexpr double bessel_max_argument = 50.0;

/// Bessel function of the first kind for the four fractional orders the
/// Holtsmark closed forms need, on 0 <= x <= 50.
[[nodiscard]] inline double bessel_j_frac(double nu, double x)
{
    const long double order = detail::fractional_order(nu);
    if (!(x >= 0.0 && x <= bessel_max_argument))
        throw error(errc::domain, "bessel_j_frac: x = " + std::to_string(x) + " outside [0, 50]");
    if (x == 0.0) {
        if (order < 0) throw error(errc::pole, "bessel_j_frac: J of negative order is singular at 0");
        return 0.0;
    }
    return static_cast<double>(detail::bessel_j(order, x).value);
}

} // namespace holtsmark::specfun
