#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace holtsmark {

/// Evaluation routes. `quadrature` is served by the oracle.
enum class MethodId { series, asymptotic, lee, airy_closed, bessel_closed, quadrature, automatic };

inline constexpr std::array<MethodId, 7> all_methods{
    MethodId::series,        MethodId::asymptotic, MethodId::lee,      MethodId::airy_closed,
    MethodId::bessel_closed, MethodId::quadrature, MethodId::automatic};

[[nodiscard]] constexpr std::string_view to_string(MethodId m) noexcept
{
    switch (m) {
    case MethodId::series: return "series";
    case MethodId::asymptotic: return "asymptotic";
    case MethodId::lee: return "lee";
    case MethodId::airy_closed: return "airy-closed";
    case MethodId::bessel_closed: return "bessel-closed";
    case MethodId::quadrature: return "quadrature";
    case MethodId::automatic: return "auto";
    }
    return "unknown";
}

[[nodiscard]] constexpr std::optional<MethodId> parse_method(std::string_view name) noexcept
{
    for (MethodId m : all_methods)
        if (to_string(m) == name) return m;
    return std::nullopt;
}

/// A density value with the route that produced it, an absolute error
/// estimate and the number of series terms (or integrand evaluations) spent.
struct EvalResult {
    double value = 0.0;
    MethodId method = MethodId::automatic;
    double err_estimate = 0.0;
    std::size_t terms_used = 0;
};

} // namespace holtsmark
