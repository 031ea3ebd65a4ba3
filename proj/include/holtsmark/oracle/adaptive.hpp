#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "holtsmark/error.hpp"

namespace holtsmark::oracle {

/// Result of integrating over one interval.
struct Segment {
    double value = 0.0;
    double abs_err = 0.0;
};

/// Globally adaptive bisection on top of the 7/15-point Gauss-Kronrod pair,
/// driven by an absolute tolerance and an integrand-evaluation budget.
class AdaptiveIntegrator {
public:
    explicit AdaptiveIntegrator(std::size_t max_evaluations) : max_evaluations_(max_evaluations) {}

    /// Repeatedly bisects the interval with the largest error estimate until
    /// the summed estimate drops below abs_tol. Intervals narrower than a few
    /// ulps are frozen, and refinement stops once bisection keeps failing to
    /// shrink the estimate (jumps, rounding noise); the result then reports an
    /// error above abs_tol.
    template <class F>
    Segment integrate(F&& f, double a, double b, double abs_tol)
    {
        auto counted = [&](double x) {
            if (++evaluations_ > max_evaluations_)
                throw error(errc::budget_exceeded,
                            "quadrature: more than " + std::to_string(max_evaluations_) + " integrand evaluations");
            return f(x);
        };
        std::priority_queue<Interval> queue;
        std::vector<Interval> frozen;
        double total_err = 0.0;
        auto push = [&](const Interval& iv) {
            total_err += iv.estimate.abs_err;
            queue.push(iv);
        };
        push({a, b, rule(counted, a, b)});
        int stalled = 0;
        while (total_err > abs_tol && !queue.empty()) {
            const Interval worst = queue.top();
            queue.pop();
            const double mid = worst.lo + (worst.hi - worst.lo) / 2;
            if (!(mid > worst.lo && mid < worst.hi) ||
                worst.hi - worst.lo < 64 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(mid))) {
                frozen.push_back(worst);
                if (frozen.size() > max_frozen) break;
                continue;
            }
            total_err -= worst.estimate.abs_err;
            const Interval left{worst.lo, mid, rule(counted, worst.lo, mid)};
            const Interval right{mid, worst.hi, rule(counted, mid, worst.hi)};
            // Bisection that does not shrink the estimate means the integrand
            // is noisy at this tolerance.
            if (left.estimate.abs_err + right.estimate.abs_err > 0.95 * worst.estimate.abs_err &&
                ++stalled > max_stalled) {
                push(left);
                push(right);
                break;
            }
            push(left);
            push(right);
        }
        // Re-sum so the running totals do not carry cancellation drift.
        Segment result;
        for (; !queue.empty(); queue.pop()) frozen.push_back(queue.top());
        for (const Interval& iv : frozen) {
            result.value += iv.estimate.value;
            result.abs_err += iv.estimate.abs_err;
        }
        return result;
    }

    /// Integrates over [a, b] split into panels no wider than `width`; the
    /// tolerance is shared out in proportion to panel width.
    template <class F>
    Segment integrate_panels(F&& f, double a, double b, double width, double abs_tol)
    {
        Segment total;
        if (b <= a) return total;
        const auto panels = static_cast<std::size_t>(std::ceil((b - a) / width));
        const double h = (b - a) / static_cast<double>(panels);
        for (std::size_t i = 0; i < panels; ++i) {
            const double lo = a + h * static_cast<double>(i);
            const double hi = i + 1 == panels ? b : lo + h;
            const Segment s = integrate(f, lo, hi, abs_tol / static_cast<double>(panels));
            total.value += s.value;
            total.abs_err += s.abs_err;
        }
        return total;
    }

    [[nodiscard]] std::size_t evaluations() const noexcept { return evaluations_; }

private:
    static constexpr std::size_t max_frozen = 64;
    static constexpr int max_stalled = 200;

    struct Interval {
        double lo;
        double hi;
        Segment estimate;
        bool operator<(const Interval& other) const noexcept { return estimate.abs_err < other.estimate.abs_err; }
    };

    template <class F>
    static Segment rule(F& f, double a, double b)
    {
        Segment s;
        s.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &s.abs_err);
        // Boost reports the non-adaptive |K - G| on the reference interval [-1, 1].
        s.abs_err *= (b - a) / 2;
        return s;
    }

    std::size_t max_evaluations_;
    std::size_t evaluations_ = 0;
};

} // namespace holtsmark::oracle
