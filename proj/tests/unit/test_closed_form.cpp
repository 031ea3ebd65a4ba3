#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "holtsmark.hpp"
#include "reference_values.hpp"

namespace {

using namespace holtsmark;
using cplx = std::complex<double>;

constexpr double pi = std::numbers::pi;
const double peak = 2.0 / (3.0 * pi) * reference::gamma_two_thirds;

template <class F>
void expect_error(errc code, F&& f)
{
    try {
        f();
        ADD_FAILURE() << "expected " << to_string(code);
    } catch (const error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

std::vector<double> grid_0_to_5()
{
    std::vector<double> g;
    for (int i = 0; i <= 50; ++i) g.push_back(0.1 * i);
    return g;
}

/// One half of the inverse Fourier integral, summed from its power series
/// (2/3) sum_k Gamma(2(k+1)/3) (sign * i beta)^k / k!.
cplx half_transform(double beta, int sign)
{
    std::complex<long double> sum = 0, power = 1;
    long double factorial = 1;
    for (int k = 0; k < 200; ++k) {
        if (k > 0) {
            power *= std::complex<long double>(0, sign * beta);
            factorial *= k;
        }
        sum += std::tgamma(2.0L * (k + 1) / 3) * power / factorial;
    }
    return cplx(static_cast<std::complex<double>>(sum * (2.0L / 3)));
}

cplx hyp(std::vector<double> a, std::vector<double> b, cplx z)
{
    return specfun::pfq(specfun::HypergeometricSpec{std::move(a), std::move(b), z});
}

// ---------------------------------------------------------------- S closed forms

TEST(AiryClosed, PeakValue)
{
    const auto r = s_airy_closed(0.0);
    EXPECT_NEAR(r.value, 0.2874, 5e-5);
    EXPECT_NEAR(r.value, 4.0 / std::pow(3.0, 5.0 / 3.0) * specfun::airy_bi_prime(0.0), 1e-15);
    EXPECT_NEAR(r.value, peak, 1e-15);
    EXPECT_EQ(r.method, MethodId::airy_closed);
}

TEST(AiryClosed, MatchesFrozenValues)
{
    for (const auto& p : reference::s_values)
        if (p.x <= 5.0) {
            EXPECT_NEAR(s_airy_closed(p.x).value, p.y, 1e-12) << p.x;
        }
    EXPECT_NEAR(s_airy_closed(1.0).value, s_series(1.0).value, 1e-10);
}

TEST(AiryClosed, ErrorEstimateCoversTruth)
{
    for (const auto& p : reference::s_values)
        if (p.x <= 5.0) {
            const auto r = s_airy_closed(p.x);
            EXPECT_LE(std::abs(r.value - p.y), r.err_estimate + 1e-15) << p.x;
        }
}

TEST(BesselClosed, AgreesWithAiryForm)
{
    EXPECT_NEAR(s_bessel_closed(1.0).value, s_airy_closed(1.0).value, 1e-10);
    EXPECT_NEAR(s_bessel_closed(2.5).value, reference::s_values[5].y, 1e-12);
    EXPECT_EQ(s_bessel_closed(2.5).method, MethodId::bessel_closed);
}

TEST(BesselClosed, LimitAtZero)
{
    EXPECT_NEAR(s_bessel_closed(1e-6).value, peak, 1e-10);
    EXPECT_NEAR(h_bessel_closed(1e-6).value, 0.0, 1e-10);
    expect_error(errc::domain, [] { (void)s_bessel_closed(0.0); });
    expect_error(errc::domain, [] { (void)h_bessel_closed(0.0); });
}

TEST(ClosedForms, CrossMethodAgreementOnGrid)
{
    for (double beta : grid_0_to_5()) {
        std::vector<EvalResult> rs{s_series(beta), s_lee(beta), s_airy_closed(beta)};
        if (beta > 0) rs.push_back(s_bessel_closed(beta));
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = i + 1; j < rs.size(); ++j) {
                const double tol = std::max(1e-9, rs[i].err_estimate + rs[j].err_estimate);
                EXPECT_LE(std::abs(rs[i].value - rs[j].value), tol)
                    << beta << " " << to_string(rs[i].method) << " vs " << to_string(rs[j].method);
            }
    }
}

TEST(ClosedForms, PrecisionLossBeyondRange)
{
    expect_error(errc::precision_loss, [] { (void)s_airy_closed(6.0); });
    expect_error(errc::domain, [] { (void)s_airy_closed(6.5); });
    expect_error(errc::domain, [] { (void)s_airy_closed(-1.0); });
}

TEST(ClosedForms, StricterGuardIsHonoured)
{
    SeriesControl ctl;
    ctl.cancel_guard = 10.0;
    expect_error(errc::precision_loss, [&] { (void)s_airy_closed(4.0, ctl); });
}

// ---------------------------------------------------------------- H closed forms

TEST(HClosed, ZeroAtOrigin)
{
    EXPECT_EQ(h_airy_closed(0.0).value, 0.0);
}

TEST(HClosed, MatchesFrozenValues)
{
    for (const auto& p : reference::h_values)
        if (p.x <= 5.0) {
            EXPECT_NEAR(h_airy_closed(p.x).value, p.y, 5e-9) << p.x;
            EXPECT_NEAR(h_bessel_closed(p.x).value, p.y, 5e-9) << p.x;
        }
}

TEST(HClosed, DerivativeRelationAtOne)
{
    const double h = 1e-5;
    const double fd = -2.0 * (s_airy_closed(1 + h).value - s_airy_closed(1 - h).value) / (2 * h);
    EXPECT_NEAR(h_airy_closed(1.0).value, fd, 1e-6);
}

TEST(HClosed, BesselAgreesWithAiry)
{
    for (double beta : grid_0_to_5())
        if (beta > 0) {
            EXPECT_NEAR(h_bessel_closed(beta).value, h_airy_closed(beta).value, 1e-10) << beta;
        }
}

// ---------------------------------------------------------------- conjugate halves

TEST(HalfTransforms, AreConjugateAndSumToDensity)
{
    for (const auto& row : reference::i_transform_values) {
        const double beta = row[0];
        const cplx i_part = half_transform(beta, -1), j_part = half_transform(beta, +1);
        EXPECT_LT(std::abs(i_part - cplx(row[1], row[2])), 1e-12) << beta;
        EXPECT_LT(std::abs(j_part - std::conj(i_part)), 1e-10) << beta;
        const cplx sum = (i_part + j_part) / (2 * pi);
        EXPECT_LT(std::abs(sum.imag()), 1e-10) << beta;
        EXPECT_NEAR(sum.real(), s_airy_closed(beta).value, 1e-10) << beta;
    }
}

TEST(HalfTransforms, HypergeometricFormMatchesSeries)
{
    const double g13 = specfun::gamma_real(1.0 / 3.0), g23 = specfun::gamma_real(2.0 / 3.0);
    for (double beta : {0.5, 1.0, 2.0}) {
        const cplx z(0.0, 4 * beta * beta * beta / 27);
        const cplx i_form = 2.0 / 3.0 * g23 * hyp({5.0 / 6.0}, {2.0 / 3.0}, z) -
                            cplx(0, 2 * beta / 9) * g13 * hyp({7.0 / 6.0}, {4.0 / 3.0}, z) -
                            beta * beta / 3 * hyp({1.0, 1.5}, {4.0 / 3.0, 5.0 / 3.0}, z);
        EXPECT_LT(std::abs(i_form - half_transform(beta, -1)), 1e-12) << beta;
    }
}

} // namespace
