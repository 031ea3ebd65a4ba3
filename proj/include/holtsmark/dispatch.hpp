#pragma once

#include <string>

#include "holtsmark/auto.hpp"
#include "holtsmark/closed_form.hpp"
#include "holtsmark/error.hpp"
#include "holtsmark/expansions.hpp"
#include "holtsmark/lee.hpp"
#include "holtsmark/method.hpp"
#include "holtsmark/oracle/quadrature.hpp"

namespace holtsmark {

enum class Function { S, H };

/// Below this the Bessel forms are replaced by the Airy forms.
inline constexpr double bessel_min_beta = 1e-8;

struct EvalOptions {
    AutoOptions auto_options{};
    double quadrature_tol = 1e-12;
};

/// Evaluates S or H at beta by the requested route. Every route is
/// reachable, including the quadrature oracle.
[[nodiscard]] inline EvalResult evaluate(Function fn, MethodId method, double beta, const EvalOptions& opt = {})
{
    const SeriesControl& ctl = opt.auto_options.control;
    if (fn == Function::S) {
        switch (method) {
        case MethodId::series: return s_series(beta, ctl);
        case MethodId::asymptotic: return s_asymptotic(beta);
        case MethodId::lee: return s_lee(beta, ctl);
        case MethodId::airy_closed: return s_airy_closed(beta, ctl);
        case MethodId::bessel_closed:
            if (beta >= 0.0 && beta < bessel_min_beta) return s_airy_closed(beta, ctl);
            return s_bessel_closed(beta, ctl);
        case MethodId::quadrature: {
            const auto r = oracle::s_quadrature(beta, opt.quadrature_tol);
            return {r.value, MethodId::quadrature, r.abs_err, r.evaluations};
        }
        case MethodId::automatic: return s_auto(beta, opt.auto_options);
        }
    } else {
        switch (method) {
        case MethodId::series: return h_series(beta, ctl);
        case MethodId::asymptotic: return h_asymptotic(beta);
        case MethodId::lee: throw error(errc::domain, "the lee route only exists for S");
        case MethodId::airy_closed: return h_airy_closed(beta, ctl);
        case MethodId::bessel_closed:
            if (beta >= 0.0 && beta < bessel_min_beta) return h_airy_closed(beta, ctl);
            return h_bessel_closed(beta, ctl);
        case MethodId::quadrature: {
            const auto r = oracle::h_quadrature(beta, opt.quadrature_tol);
            return {r.value, MethodId::quadrature, r.abs_err, r.evaluations};
        }
        case MethodId::automatic: return h_auto(beta, opt.auto_options);
        }
    }
    throw error(errc::domain, "unknown method");
}

} // namespace holtsmark
