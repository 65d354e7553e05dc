#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "adsgeo/geodesics.hpp"
#include "adsgeo/hamiltonian.hpp"
#include "oracles.hpp"

using namespace adsgeo;

namespace {

using oracle::V4;

// Fields as linear maps of x, checked against the group law in the frame tests.
V4 fT(const V4& x) { return {-x[1], x[0], x[3], -x[2]}; }
V4 fX(const V4& x) { return {x[2], x[3], x[0], x[1]}; }
V4 fY(const V4& x) { return {x[3], -x[2], -x[1], x[0]}; }
double pair(const V4& a, const V4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

double H(const V4& x, const V4& xi, Distribution d) {
    const double t = pair(xi, fT(x)), s = pair(xi, fX(x)), k = pair(xi, fY(x));
    return d == Distribution::SpanTX ? 0.5 * (-t * t + s * s) : 0.5 * (s * s + k * k);
}

// Hamilton's equations by central differences of H (exact up to rounding: H is quadratic).
std::pair<V4, V4> hamilton(const V4& x, const V4& xi, Distribution d) {
    const double h = 1e-4;
    V4 dx, dxi;
    for (int i = 0; i < 4; ++i) {
        V4 a = xi, b = xi;
        a[i] += h;
        b[i] -= h;
        dx[i] = (H(x, a, d) - H(x, b, d)) / (2 * h);
        V4 c = x, e = x;
        c[i] += h;
        e[i] -= h;
        dxi[i] = -(H(c, xi, d) - H(e, xi, d)) / (2 * h);
    }
    return {dx, dxi};
}

Vec4 v(const V4& a) { return {a[0], a[1], a[2], a[3]}; }
V4 o(const Vec4& a) { return {a[0], a[1], a[2], a[3]}; }

PhaseState random_state(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {v(oracle::random_point(rng, 1.0)), {u(rng), u(rng), u(rng), u(rng)}};
}

}  // namespace

class Flows : public ::testing::TestWithParam<Distribution> {};

TEST_P(Flows, VectorFieldIsHamiltonian) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        const auto st = random_state(rng);
        const auto f = vector_field(st, GetParam());
        const auto [dx, dxi] = hamilton(o(st.x), o(st.xi), GetParam());
        EXPECT_LT(oracle::max_diff(o(f.x), dx), 1e-8);
        EXPECT_LT(oracle::max_diff(o(f.xi), dxi), 1e-8);
        EXPECT_NEAR(hamiltonian_value(st, GetParam()), H(o(st.x), o(st.xi), GetParam()), 1e-14);
    }
}

TEST_P(Flows, VelocityIsHorizontalAndTangent) {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 50; ++i) {
        const auto st = random_state(rng);
        const auto f = vector_field(st, GetParam());
        const PointAdS p(st.x, 1e-9);
        EXPECT_NEAR(horizontality_residual(p, f.x, GetParam()), 0.0, 1e-12);
        EXPECT_NEAR(minkowski_inner(f.x, st.x), 0.0, 1e-12);
    }
}

TEST_P(Flows, IntegratedInvariants) {
    std::mt19937_64 rng(33);
    const auto st = random_state(rng, 0.4);
    IntegratorConfig cfg;
    cfg.s1 = 5.0;
    const auto t = integrate(st, GetParam(), cfg);
    const double nu0 = dot(st.xi, st.x);
    for (std::size_t i = 0; i < t.size(); ++i) {
        EXPECT_NEAR(dot(t.momenta[i], t.points[i].coords()), nu0, 1e-10);
        EXPECT_NEAR(t.diagnostics.at("H_drift")[i], 0.0, 1e-10);
        EXPECT_NEAR(t.diagnostics.at("manifold_residual")[i], 0.0, 1e-10);
        EXPECT_NEAR(t.diagnostics.at("horiz_residual")[i], 0.0, 1e-10);
    }
    EXPECT_EQ(t.params.front(), 0.0);
    EXPECT_EQ(t.params.back(), 5.0);
}

TEST_P(Flows, MatchesIndependentRk4) {
    std::mt19937_64 rng(34);
    const auto st = random_state(rng, 0.5);
    const Distribution d = GetParam();
    const auto f = [d](const oracle::S8& y) {
        const auto [dx, dxi] = hamilton({y[0], y[1], y[2], y[3]}, {y[4], y[5], y[6], y[7]}, d);
        return oracle::S8{dx[0], dx[1], dx[2], dx[3], dxi[0], dxi[1], dxi[2], dxi[3]};
    };
    const auto y = oracle::rk4(f, {st.x[0], st.x[1], st.x[2], st.x[3], st.xi[0], st.xi[1], st.xi[2], st.xi[3]}, 2.0,
                               2000);
    IntegratorConfig cfg;
    cfg.s1 = 2.0;
    const auto t = integrate(st, d, cfg);
    EXPECT_LT(oracle::max_diff(o(t.points.back().coords()), {y[0], y[1], y[2], y[3]}), 1e-8);
    EXPECT_LT(oracle::max_diff(o(t.momenta.back()), {y[4], y[5], y[6], y[7]}), 1e-8);
}

INSTANTIATE_TEST_SUITE_P(Both, Flows, ::testing::Values(Distribution::SpanTX, Distribution::SpanXY),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(Integrator, Rk4IsFourthOrder) {
    const ConstGeodesicSpec spec{Distribution::SpanTX, ConstFamily::Timelike, 0.3};
    const auto err = [&](double h) {
        IntegratorConfig cfg;
        cfg.s1 = 3.0;
        cfg.step = h;
        const auto t = integrate(const_geodesic_initial_state(spec), Distribution::SpanTX, cfg);
        return max_abs_diff(t.points.back().coords(), const_geodesic(spec, 3.0).coords());
    };
    const double r = err(0.05) / err(0.025);
    EXPECT_GT(r, 14.0);
    EXPECT_LT(r, 18.0);
}

TEST(Integrator, AdaptiveMeetsTolerance) {
    const ConstGeodesicSpec spec{Distribution::SpanXY, ConstFamily::Unit, 1.1};
    IntegratorConfig cfg;
    cfg.method = Method::RK45Adaptive;
    cfg.s1 = 3.0;
    cfg.step = 0.1;
    const auto t = integrate(const_geodesic_initial_state(spec), Distribution::SpanXY, cfg);
    for (std::size_t i = 0; i < t.size(); ++i)
        EXPECT_LT(max_abs_diff(t.points[i].coords(), const_geodesic(spec, t.params[i]).coords()), 1e-8);
    EXPECT_LT(t.size(), 3000u);
    EXPECT_EQ(t.params.back(), 3.0);
}

TEST(Integrator, RecordEveryKeepsEndpoint) {
    IntegratorConfig cfg;
    cfg.s1 = 1.0;
    cfg.step = 0.01;
    cfg.record_every = 7;
    const auto t = integrate({{1, 0, 0, 0}, {0, 1, 0, 0}}, Distribution::SpanTX, cfg);
    EXPECT_EQ(t.params.back(), 1.0);
    EXPECT_EQ(t.size(), 1u + 100u / 7u + 1u);
}

TEST(Integrator, ErrorsAreTyped) {
    IntegratorConfig cfg;
    EXPECT_THROW(integrate({{1, 0, 0, 0.1}, {0, 1, 0, 0}}, Distribution::SpanTX, cfg), OffManifold);
    cfg.s1 = -1.0;
    EXPECT_THROW(integrate({{1, 0, 0, 0}, {0, 1, 0, 0}}, Distribution::SpanTX, cfg), std::invalid_argument);

    IntegratorConfig strict;
    strict.strict = true;
    strict.strict_bound = 1e-20;
    strict.s1 = 2.0;
    strict.step = 0.1;
    EXPECT_THROW(integrate({{1, 0, 0, 0}, {0, 1.0, 0.8, 0.3}}, Distribution::SpanTX, strict), DiagnosticBreach);

    IntegratorConfig adapt;
    adapt.method = Method::RK45Adaptive;
    adapt.rel_tol = 1e-16;
    adapt.abs_tol = 1e-300;
    adapt.min_step = 0.05;
    adapt.step = 0.1;
    adapt.s1 = 10.0;
    EXPECT_THROW(integrate({{1, 0, 0, 0}, {0, 3.0, 2.0, 0.5}}, Distribution::SpanTX, adapt), StepFailure);
}

// ─── chart systems ─────────────────────────────────────────────────────────

class ChartFlows : public ::testing::TestWithParam<LocalChart> {};

TEST_P(ChartFlows, VectorFieldIsHamiltonian) {
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> ph(0.2, 1.0), u(-1, 1);
    for (int i = 0; i < 30; ++i) {
        const ChartPhase z{GetParam(), ph(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
        const auto f = chart_vector_field(z);
        const double h = 1e-6;
        const auto Hs = [&](auto mod) {
            ChartPhase a = z, b = z;
            mod(a, h);
            mod(b, -h);
            return (chart_hamiltonian(a) - chart_hamiltonian(b)) / (2 * h);
        };
        EXPECT_NEAR(f[0], Hs([](ChartPhase& w, double e) { w.p_phi += e; }), 1e-6);
        EXPECT_NEAR(f[1], Hs([](ChartPhase& w, double e) { w.xi1 += e; }), 1e-6);
        EXPECT_NEAR(f[2], Hs([](ChartPhase& w, double e) { w.xi2 += e; }), 1e-6);
        EXPECT_NEAR(f[3], -Hs([](ChartPhase& w, double e) { w.phi += e; }), 1e-6);
    }
}

TEST_P(ChartFlows, AgreesWithCartesianFlow) {
    const ChartPhase z{GetParam(), 0.5, 0.1, -0.2, 0.3, 0.4, 0.2};
    const Distribution d = GetParam() == LocalChart::SubRiem ? Distribution::SpanXY : Distribution::SpanTX;
    const auto st = chart_phase_to_cartesian(z);
    EXPECT_NEAR(hamiltonian_value(st, d), chart_hamiltonian(z), 1e-12);
    IntegratorConfig cfg;
    cfg.s1 = 0.5;
    const auto ct = integrate_chart(z, cfg);
    const auto t = integrate(st, d, cfg);
    EXPECT_LT(max_abs_diff(chart_to_vec(ct.states.back().point()), t.points.back().coords()), 1e-9);
    for (double e : ct.energy) EXPECT_NEAR(e, ct.energy.front(), 1e-11);
}

INSTANTIATE_TEST_SUITE_P(All, ChartFlows,
                         ::testing::Values(LocalChart::Timelike, LocalChart::Spacelike, LocalChart::SubRiem),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(ChartFlows, SingularityIsReported) {
    // sub-Riemannian with xi2 = 0 crosses phi = 0 smoothly
    const ChartPhase z{LocalChart::SubRiem, 0.3, 0.0, 0.0, -2.0, 0.0, 0.0};
    IntegratorConfig cfg;
    cfg.s1 = 1.0;
    EXPECT_NO_THROW(integrate_chart(z, cfg));
    // timelike chart with xi1 != 0 is pushed into cos phi = 0
    const ChartPhase w{LocalChart::Timelike, 1.0, 0.0, 0.0, -1.0, 1.0, 0.0};
    cfg.s1 = 5.0;
    EXPECT_THROW(integrate_chart(w, cfg, 1e-2), ChartSingularity);
}

// ─── Euler-Lagrange structure and accelerations ────────────────────────────

TEST(EulerLagrange, MultiplierConstantAlongTxFlow) {
    const PhaseState st{{1, 0, 0, 0}, {0.0, 1.2, 0.5, 0.3}};  // tau, varsigma, kappa at e
    IntegratorConfig cfg;
    cfg.s1 = 2.0;
    const auto t = integrate(st, Distribution::SpanTX, cfg);
    const auto rep = euler_lagrange_residual(t, Distribution::SpanTX);
    EXPECT_TRUE(rep.lambda_constant);
    EXPECT_NEAR(rep.lambda_mean, -0.3, 1e-8);  // lambda = -kappa
    EXPECT_LT(rep.speed_drift, 1e-10);
    for (double r : rep.residual1) EXPECT_LT(std::abs(r), 1e-7);
    for (double r : rep.residual2) EXPECT_LT(std::abs(r), 1e-7);
}

TEST(EulerLagrange, RotationFormAlongXyFlow) {
    const PhaseState st{{1, 0, 0, 0}, {0.0, 0.4, 0.9, -0.2}};
    IntegratorConfig cfg;
    cfg.s1 = 3.0;
    const auto t = integrate(st, Distribution::SpanXY, cfg);
    const auto rep = euler_lagrange_residual(t, Distribution::SpanXY);
    EXPECT_TRUE(rep.lambda_constant);
    EXPECT_NEAR(rep.lambda_mean, 0.4, 1e-8);  // lambda = tau
    EXPECT_LT(rep.speed_drift, 1e-10);
}

TEST(EulerLagrange, NonHorizontalInputRejected) {
    Trajectory t;
    for (int i = 0; i < 20; ++i) {
        const double s = 0.05 * i;
        t.params.push_back(s);
        t.points.push_back(vertical_line(Distribution::SpanTX, s));
        t.velocities.push_back(vertical_line_velocity(Distribution::SpanTX, s));
    }
    EXPECT_THROW(euler_lagrange_residual(t, Distribution::SpanTX), NotHorizontal);
}

TEST(Acceleration, FrameDecompositionOfTxGeodesic) {
    const PhaseState st{{1, 0, 0, 0}, {0.0, 1.0, 0.4, 0.25}};
    IntegratorConfig cfg;
    cfg.s1 = 1.0;
    cfg.step = 1e-3;
    const auto t = integrate(st, Distribution::SpanTX, cfg);
    const auto rep = acceleration_decomposition(t);
    EXPECT_LT(rep.max_a_err, 1e-6);
    EXPECT_LT(rep.max_b_err, 1e-6);
    EXPECT_LT(rep.max_omega, 1e-6);
    EXPECT_LT(rep.max_w_err, 1e-6);
}

TEST(Covector, PairingsAreReproduced) {
    std::mt19937_64 rng(36);
    for (int i = 0; i < 20; ++i) {
        const PointAdS p(v(oracle::random_point(rng)));
        const Vec4 xi = covector_from_pairings(p, 0.3, -0.7, 1.1, 0.2);
        const auto m = momenta({p.coords(), xi});
        EXPECT_NEAR(m.tau, 0.3, 1e-10);
        EXPECT_NEAR(m.varsigma, -0.7, 1e-10);
        EXPECT_NEAR(m.kappa, 1.1, 1e-10);
        EXPECT_NEAR(dot(xi, p.coords()), 0.2, 1e-10);
    }
}
