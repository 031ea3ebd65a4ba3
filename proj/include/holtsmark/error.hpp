#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace holtsmark {

enum class errc {
    pole,             // Gamma or Bessel evaluated at a singularity
    overflow,         // result not representable
    domain,           // argument outside the implemented range
    no_convergence,   // series term cap reached
    precision_loss,   // cancellation guard tripped
    budget_exceeded,  // quadrature evaluation cap reached
    consistency       // internal diagnostic failed (conjugate pair not real, ...)
};

[[nodiscard]] constexpr std::string_view to_string(errc code) noexcept
{
    switch (code) {
    case errc::pole: return "pole";
    case errc::overflow: return "overflow";
    case errc::domain: return "domain";
    case errc::no_convergence: return "no_convergence";
    case errc::precision_loss: return "precision_loss";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::consistency: return "consistency";
    }
    return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    [[nodiscard]] errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace holtsmark
