#pragma once

#include <cmath>
#include <complex>

namespace holtsmark::detail {

/// Neumaier's variant of Kahan summation.
template <class Real>
class CompensatedSum {
public:
    void add(Real x) noexcept
    {
        const Real t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    [[nodiscard]] Real value() const noexcept { return sum_ + comp_; }

private:
    Real sum_{0};
    Real comp_{0};
};

template <class Real>
class CompensatedSum<std::complex<Real>> {
public:
    void add(const std::complex<Real>& x) noexcept
    {
        re_.add(x.real());
        im_.add(x.imag());
    }

    [[nodiscard]] std::complex<Real> value() const noexcept { return {re_.value(), im_.value()}; }

private:
    CompensatedSum<Real> re_;
    CompensatedSum<Real> im_;
};

} // namespace holtsmark::detail
