#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "holtsmark.hpp"
#include "reference_values.hpp"

namespace {

using namespace holtsmark;

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

double s_reference(double beta)
{
    for (const auto& p : reference::s_values)
        if (p.x == beta) return p.y;
    throw std::logic_error("no frozen S value");
}

double h_reference(double beta)
{
    for (const auto& p : reference::h_values)
        if (p.x == beta) return p.y;
    throw std::logic_error("no frozen H value");
}

// ---------------------------------------------------------------- method names

TEST(MethodId, NamesRoundTrip)
{
    for (MethodId m : all_methods) EXPECT_EQ(parse_method(to_string(m)), m);
    EXPECT_EQ(parse_method("auto"), MethodId::automatic);
    EXPECT_EQ(parse_method("airy-closed"), MethodId::airy_closed);
    EXPECT_FALSE(parse_method("fourier").has_value());
}

TEST(ErrorCode, MessageNamesTheCode)
{
    const error e(errc::precision_loss, "detail");
    EXPECT_EQ(e.code(), errc::precision_loss);
    EXPECT_NE(std::string(e.what()).find(to_string(errc::precision_loss)), std::string::npos);
}

// ---------------------------------------------------------------- power series

TEST(SmallSeries, PeakValue)
{
    const auto r = s_series(0.0);
    EXPECT_NEAR(r.value, 0.2874, 5e-5);
    EXPECT_NEAR(r.value, peak, 1e-15);
    EXPECT_EQ(r.method, MethodId::series);
}

TEST(SmallSeries, LeadingCoefficients)
{
    EXPECT_NEAR(small_series_coefficient(0), 0.2874, 5e-5);
    EXPECT_NEAR(small_series_coefficient(1), -0.1061, 5e-5);
    EXPECT_NEAR(small_series_coefficient(2), 0.0246, 5e-5);
    EXPECT_NEAR(s_series_truncated(0.5, 3), 0.2624, 5e-5);
}

TEST(SmallSeries, TruncatedSumUsesCoefficients)
{
    for (double beta : {0.3, 1.0, 2.2}) {
        double sum = 0.0;
        for (std::size_t n = 0; n < 6; ++n) sum += small_series_coefficient(n) * std::pow(beta, 2.0 * n);
        EXPECT_NEAR(s_series_truncated(beta, 6), sum, 1e-15 * std::max(1.0, std::abs(sum)));
    }
}

TEST(SmallSeries, MatchesFrozenValues)
{
    for (double beta : {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0}) {
        const auto r = s_series(beta);
        EXPECT_NEAR(r.value, s_reference(beta), 3e-13) << beta;
        EXPECT_GT(r.terms_used, 0u);
    }
}

TEST(SmallSeries, ErrorEstimateIsHonest)
{
    for (double beta : {0.5, 1.0, 2.0, 3.0})
        EXPECT_LE(std::abs(s_series(beta).value - s_reference(beta)), s_series(beta).err_estimate + 1e-15) << beta;
}

TEST(SmallSeries, CancellationGuardTripsForLargeBeta)
{
    expect_error(errc::precision_loss, [] { (void)s_series(8.0); });
    expect_error(errc::domain, [] { (void)s_series(12.5); });
    expect_error(errc::domain, [] { (void)s_series(-1.0); });
}

TEST(SmallSeries, DerivativeSeriesAtZeroAndOne)
{
    EXPECT_EQ(h_series(0.0).value, 0.0);
    const double h = 1e-5;
    const double fd = -2.0 * (s_series(1 + h).value - s_series(1 - h).value) / (2 * h);
    EXPECT_NEAR(h_series(1.0).value, fd, 1e-8);
    EXPECT_NEAR(h_series(1.0).value, h_reference(1.0), 1e-13);
    EXPECT_NEAR(h_series(1.5).value, h_airy_closed(1.5).value, 1e-9);
}

TEST(SmallSeries, DerivativeSeriesMatchesFrozenValues)
{
    for (double beta : {0.5, 1.0, 1.5, 2.0, 3.0}) EXPECT_NEAR(h_series(beta).value, h_reference(beta), 1e-11) << beta;
    // At 5 the derivative terms peak near 1e5 before cancelling.
    EXPECT_NEAR(h_series(5.0).value, h_reference(5.0), 1e-10);
}

// ---------------------------------------------------------------- asymptotic series

TEST(Asymptotic, LeadingCoefficients)
{
    EXPECT_NEAR(asymptotic_coefficient(1), 0.2992, 5e-5);
    EXPECT_NEAR(asymptotic_coefficient(2), 0.9549, 5e-5);
    EXPECT_NEAR(asymptotic_coefficient(3), 1.9635, 5e-5);
    EXPECT_EQ(asymptotic_exponent(1), 2.5);
    EXPECT_EQ(asymptotic_exponent(2), 4.0);
    EXPECT_EQ(asymptotic_exponent(3), 5.5);
}

TEST(Asymptotic, FourthTermVanishes)
{
    EXPECT_EQ(asymptotic_coefficient(4), 0.0);
    EXPECT_EQ(asymptotic_coefficient(8), 0.0);
    EXPECT_EQ(s_asymptotic_truncated(3.0, 4), s_asymptotic_truncated(3.0, 3));
}

TEST(Asymptotic, MatchesFrozenValuesWithinEstimate)
{
    for (double beta : {8.0, 10.0, 15.0, 20.0, 30.0}) {
        const auto r = s_asymptotic(beta);
        EXPECT_EQ(r.method, MethodId::asymptotic);
        EXPECT_LE(std::abs(r.value - s_reference(beta)), r.err_estimate) << beta;
    }
    EXPECT_LT(s_asymptotic(10.0).err_estimate, 1e-8);
    EXPECT_LT(s_asymptotic(20.0).err_estimate, 1e-10);
}

TEST(Asymptotic, ErrorEstimateBoundsTruthAtModerateBeta)
{
    for (double beta : {4.0, 5.0}) {
        const auto r = s_asymptotic(beta);
        EXPECT_LE(std::abs(r.value - s_reference(beta)), r.err_estimate) << beta;
    }
}

TEST(Asymptotic, DerivativeSeriesMatchesFrozenValues)
{
    for (double beta : {8.0, 12.0}) {
        const auto r = h_asymptotic(beta);
        EXPECT_LE(std::abs(r.value - h_reference(beta)), r.err_estimate + 1e-15) << beta;
    }
}

TEST(Asymptotic, Domain)
{
    expect_error(errc::domain, [] { (void)s_asymptotic(1.5); });
    expect_error(errc::domain, [] { (void)h_asymptotic(0.0); });
    expect_error(errc::domain, [] { (void)s_asymptotic(10.0, 0); });
    expect_error(errc::domain, [] { (void)s_asymptotic_truncated(0.0, 4); });
}

TEST(Asymptotic, MaxTermsCapsTheSum)
{
    const auto r = s_asymptotic(30.0, 3);
    EXPECT_LE(r.terms_used, 3u);
    EXPECT_NEAR(r.value, s_asymptotic_truncated(30.0, 3), 1e-18);
}

// ---------------------------------------------------------------- Lee

TEST(Lee, PeakValue)
{
    EXPECT_NEAR(s_lee(0.0).value, std::tgamma(5.0 / 3.0) / pi, 1e-15);
    EXPECT_NEAR(s_lee(0.0).value, peak, 1e-15);
}

TEST(Lee, MatchesSeriesAndFrozenValues)
{
    EXPECT_NEAR(s_lee(1.0).value, s_series(1.0).value, 1e-10);
    for (double beta : {0.5, 1.0, 2.0, 3.0, 4.0, 5.0}) EXPECT_NEAR(s_lee(beta).value, s_reference(beta), 1e-12) << beta;
    EXPECT_EQ(s_lee(2.0).method, MethodId::lee);
}

TEST(Lee, GuardAndDomain)
{
    expect_error(errc::domain, [] { (void)s_lee(-0.5); });
    expect_error(errc::domain, [] { (void)s_lee(6.5); });
}

// ---------------------------------------------------------------- auto dispatch

TEST(Auto, PeakValueViaClosedForm)
{
    const auto r = s_auto(0.0);
    EXPECT_NEAR(r.value, 0.2874, 5e-5);
    EXPECT_EQ(r.method, MethodId::airy_closed);
}

TEST(Auto, EvenInBeta)
{
    for (double beta = 0.0; beta <= 20.0; beta += 0.37) EXPECT_EQ(s_auto(-beta).value, s_auto(beta).value);
}

TEST(Auto, LargeBetaUsesAsymptotic)
{
    const auto r = s_auto(20.0);
    EXPECT_EQ(r.method, MethodId::asymptotic);
    EXPECT_LT(r.err_estimate, 1e-10);
}

TEST(Auto, AccurateAcrossTheSwitchover)
{
    for (const auto& p : reference::s_values) EXPECT_NEAR(s_auto(p.x).value, p.y, 5e-11) << p.x;
    for (const auto& p : reference::h_values) EXPECT_NEAR(h_auto(p.x).value, p.y, 5e-9) << p.x;
}

TEST(Auto, NonNegativeOnGrid)
{
    for (int i = 0; i <= 400; ++i) {
        const double beta = 0.05 * i;
        EXPECT_GE(s_auto(beta).value, -1e-12) << beta;
        EXPECT_GE(h_auto(beta).value, -1e-12) << beta;
    }
}

TEST(Auto, DerivativeRelation)
{
    const double h = 1e-5;
    for (double beta : {0.5, 1.0, 2.0, 3.0}) {
        const double fd = -2 * beta * (s_auto(beta + h).value - s_auto(beta - h).value) / (2 * h);
        const double hv = h_auto(beta).value;
        EXPECT_LT(std::abs(fd - hv) / hv, 1e-6) << beta;
    }
}

TEST(Auto, OptionsAreValidated)
{
    AutoOptions opt;
    opt.switchover = 1.0;
    expect_error(errc::domain, [&] { (void)s_auto(1.0, opt); });
    opt.switchover = 4.0;
    EXPECT_EQ(s_auto(4.5, opt).method, MethodId::asymptotic);
    EXPECT_EQ(s_auto(3.9, opt).method, MethodId::airy_closed);
    expect_error(errc::domain, [] { (void)h_auto(-1.0); });
    expect_error(errc::domain, [] { (void)s_auto(std::nan("")); });
}

// ---------------------------------------------------------------- dispatcher

TEST(Dispatch, EveryRouteAgreesAtOne)
{
    for (MethodId m : all_methods) {
        if (m == MethodId::asymptotic) continue; // not defined this close to the peak
        const auto r = evaluate(Function::S, m, 1.0);
        EXPECT_NEAR(r.value, s_reference(1.0), 1e-10) << to_string(m);
        if (m != MethodId::automatic) {
            EXPECT_EQ(r.method, m);
        }
    }
}

TEST(Dispatch, AsymptoticRouteAtLargeBeta)
{
    EXPECT_NEAR(evaluate(Function::S, MethodId::asymptotic, 10.0).value, s_reference(10.0), 1e-12);
    EXPECT_NEAR(evaluate(Function::H, MethodId::asymptotic, 12.0).value, h_reference(12.0), 1e-12);
}

TEST(Dispatch, HRoutes)
{
    for (MethodId m : {MethodId::series, MethodId::airy_closed, MethodId::bessel_closed, MethodId::quadrature,
                       MethodId::automatic})
        EXPECT_NEAR(evaluate(Function::H, m, 2.0).value, h_reference(2.0), 1e-10) << to_string(m);
    expect_error(errc::domain, [] { (void)evaluate(Function::H, MethodId::lee, 1.0); });
}

TEST(Dispatch, BesselRouteSubstitutesAiryNearZero)
{
    const auto r = evaluate(Function::S, MethodId::bessel_closed, 0.0);
    EXPECT_EQ(r.method, MethodId::airy_closed);
    EXPECT_NEAR(r.value, peak, 1e-15);
    EXPECT_EQ(evaluate(Function::H, MethodId::bessel_closed, 0.0).value, 0.0);
}

TEST(Dispatch, QuadratureReportsEvaluations)
{
    const auto r = evaluate(Function::S, MethodId::quadrature, 2.0);
    EXPECT_GT(r.terms_used, 0u);
    EXPECT_LE(r.err_estimate, 1e-12);
}

} // namespace
