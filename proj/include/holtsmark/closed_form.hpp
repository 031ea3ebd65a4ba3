#pragma once

// Closed forms of S and H built from the pure-imaginary-argument pairs
// 2F2(1, 3/2; 4/3, 5/3; +-4i beta^3/27) and 2F2(2, 5/2; 7/3, 8/3; +-4i beta^3/27)
// together with Bi, Bi' at -beta^2 3^{-4/3} (or, equivalently, Bessel J of
// orders +-1/3, +-2/3 at 2 beta^3 / 27).

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "holtsmark/error.hpp"
#include "holtsmark/expansions.hpp"
#include "holtsmark/lee.hpp"
#include "holtsmark/method.hpp"
#include "holtsmark/series_control.hpp"
#include "holtsmark/specfun/airy.hpp"
#include "holtsmark/specfun/bessel.hpp"
#include "holtsmark/specfun/hypergeometric.hpp"

namespace holtsmark {
namespace detail {

/// F(z) + F(conj z) and F(conj z) - F(z) for a 2F2 with real parameters and
/// pure imaginary z. The sum must be real and the difference imaginary.
struct ConjugatePair {
    std::complex<ld> sum;
    std::complex<ld> difference;
    ld error = 0;
    std::size_t terms = 0;
};

inline constexpr ld realness_tolerance = 1e-13L;

inline ConjugatePair conjugate_pair(ld a1, ld a2, ld b1, ld b2, std::complex<ld> z, const SeriesControl& ctl)
{
    using Spec = specfun::BasicHypergeometricSpec<ld>;
    const auto up = specfun::pfq_sum(Spec{{a1, a2}, {b1, b2}, z}, ctl);
    const auto down = specfun::pfq_sum(Spec{{a1, a2}, {b1, b2}, std::conj(z)}, ctl);
    ConjugatePair pair{up.value + down.value, down.value - up.value, up.error() + down.error(),
                       up.terms + down.terms};
    if (std::abs(pair.sum.imag()) > realness_tolerance * std::abs(pair.sum.real()) ||
        std::abs(pair.difference.real()) > realness_tolerance * std::abs(pair.difference.imag()))
        throw error(errc::consistency, "conjugate 2F2 pair does not combine to a real value");
    return pair;
}

struct ClosedFormInputs {
    ld beta;
    ld t;  // 2 beta^3 / 27
    std::complex<ld> z;  // 4 i beta^3 / 27
};

inline ClosedFormInputs closed_form_inputs(double beta, const char* who, bool allow_zero)
{
    const bool ok = allow_zero ? beta >= 0.0 : beta > 0.0;
    if (!ok || !(beta <= closed_form_max_beta))
        throw error(errc::domain, std::string(who) + ": beta = " + std::to_string(beta) +
                                      (allow_zero ? " outside [0, 6]" : " outside (0, 6]"));
    const ld b = beta;
    const ld b3 = b * b * b;
    return {b, 2 * b3 / 27, {0, 4 * b3 / 27}};
}

inline ld airy_argument(ld beta) { return -beta * beta / std::cbrt(81.0L); }

struct BesselBlock {
    ld sum_two_thirds;    // J_{-2/3}(t) + J_{2/3}(t)
    ld diff_one_third;    // J_{-1/3}(t) - J_{1/3}(t)
    ld error;
};

inline BesselBlock bessel_block(ld t)
{
    const auto jm2 = specfun::detail::bessel_j(-2.0L / 3, t), jp2 = specfun::detail::bessel_j(2.0L / 3, t);
    const auto jm1 = specfun::detail::bessel_j(-1.0L / 3, t), jp1 = specfun::detail::bessel_j(1.0L / 3, t);
    return {jm2.value + jp2.value, jm1.value - jp1.value, jm2.error + jp2.error + jm1.error + jp1.error};
}

inline EvalResult finish(ld value, ld err, MethodId method, std::size_t terms)
{
    err += std::numeric_limits<double>::epsilon() * std::abs(value);
    return {static_cast<double>(value), method, static_cast<double>(err), terms};
}

} // namespace detail

/// S(beta) = -beta^2/(6 pi) [F(-z) + F(z)]
///           + 4/(3 3^{2/3}) [Bi'(a) cos t + beta 3^{-2/3} Bi(a) sin t],
/// F = 2F2(1, 3/2; 4/3, 5/3; .), z = 4i beta^3/27, a = -beta^2 3^{-4/3}, t = 2 beta^3/27.
[[nodiscard]] inline EvalResult s_airy_closed(double beta, const SeriesControl& ctl = {})
{
    using namespace detail;
    const auto in = closed_form_inputs(beta, "s_airy_closed", true);
    const ld b = in.beta;
    const auto f = conjugate_pair(1, 1.5L, 4.0L / 3, 5.0L / 3, in.z, ctl);
    const auto airy = specfun::detail::airy_bi_pair(airy_argument(b));

    const ld hyp_coef = -b * b / (6 * pi_ld);
    const ld airy_coef = 4 / (3 * std::cbrt(9.0L));
    const ld c = std::cos(in.t), s = std::sin(in.t);
    const ld k = b / std::cbrt(9.0L);

    const ld value = hyp_coef * f.sum.real() + airy_coef * (airy.bi_prime.value * c + k * airy.bi.value * s);
    const ld err = std::abs(hyp_coef) * f.error + airy_coef * (airy.bi_prime.error + k * airy.bi.error);
    return finish(value, err, MethodId::airy_closed, f.terms);
}

/// Same as s_airy_closed with the Airy block written through J_{+-1/3}, J_{+-2/3}:
///   4 beta^2/(27 sqrt 3) {cos t [J_{-2/3}(t) + J_{2/3}(t)] + sin t [J_{-1/3}(t) - J_{1/3}(t)]}.
[[nodiscard]] inline EvalResult s_bessel_closed(double beta, const SeriesControl& ctl = {})
{
    using namespace detail;
    const auto in = closed_form_inputs(beta, "s_bessel_closed", false);
    const ld b = in.beta;
    const auto f = conjugate_pair(1, 1.5L, 4.0L / 3, 5.0L / 3, in.z, ctl);
    const auto j = bessel_block(in.t);

    const ld hyp_coef = -b * b / (6 * pi_ld);
    const ld bessel_coef = 4 * b * b / (27 * std::sqrt(3.0L));
    const ld c = std::cos(in.t), s = std::sin(in.t);

    const ld value = hyp_coef * f.sum.real() + bessel_coef * (c * j.sum_two_thirds + s * j.diff_one_third);
    const ld err = std::abs(hyp_coef) * f.error + bessel_coef * j.error;
    return finish(value, err, MethodId::bessel_closed, f.terms);
}

namespace detail {

/// The two hypergeometric terms shared by both H closed forms:
///   2 beta^2/(3 pi) [F1(-z) + F1(z)] - i beta^5/(10 pi) [F2(-z) - F2(z)].
struct HypergeometricPartH {
    ld value;
    ld error;
    std::size_t terms;
};

inline HypergeometricPartH h_hypergeometric_part(const ClosedFormInputs& in, const SeriesControl& ctl)
{
    const ld b = in.beta;
    const ld b2 = b * b;
    const auto f1 = conjugate_pair(1, 1.5L, 4.0L / 3, 5.0L / 3, in.z, ctl);
    const auto f2 = conjugate_pair(2, 2.5L, 7.0L / 3, 8.0L / 3, in.z, ctl);
    const ld c1 = 2 * b2 / (3 * pi_ld);
    const ld c2 = b2 * b2 * b / (10 * pi_ld);
    // -i * difference is real because the difference is pure imaginary.
    const ld value = c1 * f1.sum.real() + c2 * f2.difference.imag();
    return {value, c1 * f1.error + c2 * f2.error, f1.terms + f2.terms};
}

} // namespace detail

/// H(beta) from the 2F2 pairs plus
///   -8 beta/(3^4 3^{2/3}) {3^{1/3} Bi(a) [4 beta^3 cos t + 9 sin t] - 12 beta^2 Bi'(a) sin t}.
[[nodiscard]] inline EvalResult h_airy_closed(double beta, const SeriesControl& ctl = {})
{
    using namespace detail;
    const auto in = closed_form_inputs(beta, "h_airy_closed", true);
    const ld b = in.beta;
    const auto hyp = h_hypergeometric_part(in, ctl);
    const auto airy = specfun::detail::airy_bi_pair(airy_argument(b));

    const ld c = std::cos(in.t), s = std::sin(in.t);
    const ld coef = -8 * b / (81 * std::cbrt(9.0L));
    const ld bi_factor = std::cbrt(3.0L) * (4 * b * b * b * c + 9 * s);
    const ld bip_factor = -12 * b * b * s;

    const ld value = hyp.value + coef * (airy.bi.value * bi_factor + airy.bi_prime.value * bip_factor);
    const ld err = hyp.error + std::abs(coef) * (airy.bi.error * std::abs(bi_factor) +
                                                 airy.bi_prime.error * std::abs(bip_factor));
    return finish(value, err, MethodId::airy_closed, hyp.terms);
}

/// H(beta) with the Airy block in Bessel form:
///   -8 beta^2/(3^5 sqrt 3) {[J_{-1/3} - J_{1/3}] [4 beta^3 cos t + 9 sin t]
///                           - 4 beta^3 [J_{-2/3} + J_{2/3}] sin t}.
[[nodiscard]] inline EvalResult h_bessel_closed(double beta, const SeriesControl& ctl = {})
{
    using namespace detail;
    const auto in = closed_form_inputs(beta, "h_bessel_closed", false);
    const ld b = in.beta;
    const ld b3 = b * b * b;
    const auto hyp = h_hypergeometric_part(in, ctl);
    const auto j = bessel_block(in.t);

    const ld c = std::cos(in.t), s = std::sin(in.t);
    const ld coef = -8 * b * b / (243 * std::sqrt(3.0L));
    const ld first = 4 * b3 * c + 9 * s;
    const ld second = -4 * b3 * s;

    const ld value = hyp.value + coef * (j.diff_one_third * first + j.sum_two_thirds * second);
    const ld err = hyp.error + std::abs(coef) * j.error * (std::abs(first) + std::abs(second));
    return finish(value, err, MethodId::bessel_closed, hyp.terms);
}

} // namespace holtsmark
