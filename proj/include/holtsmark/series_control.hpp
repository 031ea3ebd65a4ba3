#pragma once

#include <cmath>
#include <cstddef>

#include "holtsmark/error.hpp"

namespace holtsmark {

/// Truncation and cancellation policy shared by every series evaluator.
struct SeriesControl {
    double rel_tol = 1e-15;
    std::size_t max_terms = 500;
    /// Largest tolerated ratio between the peak partial-sum magnitude and the
    /// magnitude of the final sum.
    double cancel_guard = 1e12;

    void validate() const
    {
        if (!(rel_tol > 0.0 && rel_tol < 1.0))
            throw error(errc::domain, "SeriesControl: rel_tol must lie in (0, 1)");
        if (max_terms < 1)
            throw error(errc::domain, "SeriesControl: max_terms must be >= 1");
        if (!(cancel_guard > 1.0))
            throw error(errc::domain, "SeriesControl: cancel_guard must exceed 1");
    }
};

} // namespace holtsmark
