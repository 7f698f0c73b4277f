#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "qcurv/asymptotics.hpp"

using namespace qcurv;

namespace {

std::vector<double> radii(double lo, double hi, int count)
{
    std::vector<double> r(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        r[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
    }
    return r;
}

std::vector<double> eval(const std::vector<double>& r, double (*f)(double))
{
    std::vector<double> y;
    for (double x : r) {
        y.push_back(f(x));
    }
    return y;
}

}  // namespace

TEST(Asymptotics, LastDecadeWindow)
{
    const FitWindow w = FitWindow::last_decade(200.0, 0.02);
    EXPECT_DOUBLE_EQ(w.lo, 20.0);
    EXPECT_DOUBLE_EQ(w.hi, 196.0);
}

TEST(Asymptotics, WeightedFitExactForBasis)
{
    const auto r = radii(1.0, 100.0, 200);
    const auto y = eval(r, [](double x) { return 3.0 - 2.0 / x; });
    const LinearFit fit = weighted_fit(r, y, {[](double) { return 1.0; }, [](double x) { return 1.0 / x; }},
                                       FitWindow{10.0, 100.0});
    ASSERT_EQ(fit.coeffs.size(), 2u);
    EXPECT_NEAR(fit.coeffs[0], 3.0, 1e-12);
    EXPECT_NEAR(fit.coeffs[1], -2.0, 1e-10);
    EXPECT_LT(fit.rms, 1e-10);
    EXPECT_GT(fit.count, 0u);
}

TEST(Asymptotics, LogSlopeWithCorrections)
{
    const auto r = radii(1.0, 200.0, 400);
    const auto y = eval(r, [](double x) { return -0.25 * std::log(x) + 0.7 + 2.0 / (x * x) - 1.0 / (x * x * x); });
    const SlopeFit fit = fit_log_slope(r, y, FitWindow::last_decade(200.0));
    EXPECT_NEAR(fit.slope, -0.25, 1e-10);
    EXPECT_NEAR(fit.intercept, 0.7, 1e-9);
}

TEST(Asymptotics, LogSlopeShiftInvariant)
{
    const auto r = radii(1.0, 200.0, 400);
    auto y = eval(r, [](double x) { return -1.5 * std::log(x) + 1.0 / (1.0 + x * x); });
    const double a = fit_log_slope(r, y, FitWindow::last_decade(200.0)).slope;
    for (double& v : y) {
        v += 12.0;
    }
    EXPECT_NEAR(fit_log_slope(r, y, FitWindow::last_decade(200.0)).slope, a, 1e-12);
}

TEST(Asymptotics, Limit)
{
    const auto r = radii(1.0, 200.0, 400);
    const auto y = eval(r, [](double x) { return std::log(1.5) + 1.0 / (x * x); });
    const LinearFit fit = fit_limit(r, y, FitWindow::last_decade(200.0));
    EXPECT_NEAR(fit.coeffs[0], std::log(1.5), 1e-12);
}

TEST(Asymptotics, DecayExponentPlain)
{
    const auto r = radii(1.0, 200.0, 400);
    const auto y = eval(r, [](double x) { return 4.0 * std::pow(x, -1.3); });
    const DecayFit fit = fit_decay_exponent(r, y, FitWindow::last_decade(200.0));
    EXPECT_NEAR(fit.exponent, 1.3, 1e-10);
    EXPECT_NEAR(fit.coeff, 4.0, 1e-8);
}

TEST(Asymptotics, DecayExponentWithRemainder)
{
    const auto r = radii(1.0, 200.0, 400);
    const auto y = eval(r, [](double x) { return std::pow(x, -1.0) - 3.0 * std::pow(x, -2.0); });
    const DecayFit fit = fit_decay_exponent(r, y, FitWindow::last_decade(200.0), 2.0);
    EXPECT_NEAR(fit.exponent, 1.0, 1e-4);
    // without the remainder term the fitted exponent is biased
    const DecayFit plain = fit_decay_exponent(r, y, FitWindow::last_decade(200.0));
    EXPECT_GT(std::abs(plain.exponent - 1.0), 1e-3);
}
