#include <gtest/gtest.h>

#include <cmath>

#include "adsgeo/numerics.hpp"
#include "adsgeo/ode.hpp"

using namespace adsgeo::num;
namespace ode = adsgeo::ode;

TEST(Simpson, ExactForCubicsOnUniformGrid) {
    const auto s = linspace(0.0, 2.0, 11);
    std::vector<double> f;
    for (double x : s) f.push_back(x * x * x - 2 * x + 1);
    EXPECT_NEAR(simpson(s, f), 4.0 - 4.0 + 2.0, 1e-13);
}

TEST(Simpson, EvenIntervalCountAndNonUniformGrid) {
    const std::vector<double> s{0.0, 0.1, 0.35, 0.5, 0.9, 1.0};  // 5 intervals, uneven
    std::vector<double> f;
    for (double x : s) f.push_back(x * x);
    EXPECT_NEAR(simpson(s, f), 1.0 / 3.0, 1e-13);
}

TEST(Simpson, CumulativeEndsAtTotal) {
    const auto s = linspace(0.0, 1.0, 65);
    std::vector<double> f;
    for (double x : s) f.push_back(std::exp(x));
    const auto c = cumulative_simpson(s, f);
    EXPECT_EQ(c.front(), 0.0);
    EXPECT_NEAR(c.back(), simpson(s, f), 1e-14);
    EXPECT_NEAR(c.back(), std::exp(1.0) - 1.0, 1e-9);
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(c[i], std::exp(s[i]) - 1.0, 1e-8);
}

TEST(Simpson, FourthOrderConvergence) {
    const auto err = [](std::size_t n) {
        const auto s = linspace(0.0, 1.0, n);
        std::vector<double> f;
        for (double x : s) f.push_back(std::sin(3 * x));
        return std::abs(simpson(s, f) - (1 - std::cos(3.0)) / 3.0);
    };
    const double r = err(17) / err(33);
    EXPECT_GT(r, 13.0);
    EXPECT_LT(r, 19.0);
}

TEST(Derivative, InteriorFourthOrder) {
    const auto s = linspace(0.0, 1.0, 101);
    std::vector<double> f;
    for (double x : s) f.push_back(std::sin(x));
    const auto d = derivative(s, f);
    for (std::size_t i = 2; i + 2 < s.size(); ++i) EXPECT_NEAR(d[i], std::cos(s[i]), 1e-9);
    EXPECT_NEAR(d.front(), 1.0, 1e-4);
    EXPECT_NEAR(d.back(), std::cos(1.0), 1e-4);
}

TEST(Derivative, SecondDerivative) {
    const auto s = linspace(0.0, 1.0, 201);
    std::vector<double> f;
    for (double x : s) f.push_back(std::exp(2 * x));
    const auto d = second_derivative(s, f);
    for (std::size_t i = 2; i + 2 < s.size(); ++i) EXPECT_NEAR(d[i], 4 * std::exp(2 * s[i]), 1e-6);
}

TEST(GaussKronrod, SmoothAndEndpointSingularIntegrands) {
    EXPECT_NEAR(gauss_kronrod([](double x) { return std::exp(-x * x); }, 0.0, 3.0), 0.886207348259521, 1e-10);
    EXPECT_NEAR(gauss_kronrod([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12), 2.0 / 3.0, 1e-9);
}

TEST(FitLine, RecoversAffineData) {
    std::vector<double> s, y;
    for (int i = 0; i < 20; ++i) {
        s.push_back(0.1 * i);
        y.push_back(-0.3 + 2.5 * 0.1 * i);
    }
    const auto f = fit_line(s, y);
    EXPECT_NEAR(f.intercept, -0.3, 1e-13);
    EXPECT_NEAR(f.slope, 2.5, 1e-13);
    EXPECT_LT(f.max_residual, 1e-13);
}

TEST(Grid, LinspaceEndpointsAndUniformity) {
    const auto s = linspace(-1.0, 2.0, 7);
    EXPECT_EQ(s.front(), -1.0);
    EXPECT_EQ(s.back(), 2.0);
    EXPECT_TRUE(is_uniform(s));
    EXPECT_FALSE(is_uniform({0.0, 0.1, 0.3}));
}

TEST(Ode, CompensatedAddKeepsSmallIncrements) {
    ode::State<1> y{1.0}, c{};
    double naive = 1.0;
    for (int i = 0; i < 1000000; ++i) {
        ode::compensated_add<1>(y, c, {1e-16});
        naive += 1e-16;
    }
    EXPECT_EQ(naive, 1.0);
    EXPECT_NEAR(y[0] - 1.0, 1e-10, 2.3e-16);  // within one ulp of 1
}

TEST(Ode, Rk4IncrementIsFourthOrder) {
    const auto f = [](double, const ode::State<1>& y) { return ode::State<1>{y[0]}; };
    const auto err = [&](double h) { return std::abs(1.0 + ode::rk4_increment<1>(f, 0.0, {1.0}, h)[0] - std::exp(h)); };
    // local error h^5/120
    EXPECT_NEAR(err(0.1) / std::pow(0.1, 5), 1.0 / 120, 1e-3);
    EXPECT_NEAR(err(0.05) / err(0.1), 1.0 / 32, 2e-3);
}
