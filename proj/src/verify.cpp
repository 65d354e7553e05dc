#include "adsgeo/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "adsgeo/batch.hpp"
#include "adsgeo/connectivity.hpp"
#include "adsgeo/geodesics.hpp"
#include "adsgeo/hamiltonian.hpp"
#include "adsgeo/io.hpp"
#include "adsgeo/numerics.hpp"

namespace adsgeo {

namespace {

using json = nlohmann::ordered_json;
constexpr double kPi = std::numbers::pi;

PhaseState start_of(const Trajectory& t) { return {t.points.front().coords(), t.momenta.front()}; }

// |x - x_exact| / max(1, |x_exact|), max norms; absolute for bounded families
double max_dev_to(const Trajectory& t, const ConstGeodesicSpec& spec) {
    double e = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        e = std::max(e, max_abs_diff(t.points[i].coords(), const_geodesic(spec, t.params[i]).coords()));
    }
    return e;
}

Trajectory run(const PhaseState& st, Distribution d, double s1, double h) {
    IntegratorConfig cfg;
    cfg.s1 = s1;
    cfg.step = h;
    return integrate(st, d, cfg);
}

SuiteResult suite_algebra(bool fault) {
    Mat4i J = kJ;
    if (fault) J[0][1] = 2;
    const Mat4i &U = kU, &E1 = kE1, &E2 = kE2;
    const auto zero = Mat4i{};
    json ids;
    ids["JE1+E1J=0"] = matadd(matmul(J, E1), matmul(E1, J)) == zero;
    ids["E2E1+E1E2=0"] = matadd(matmul(E2, E1), matmul(E1, E2)) == zero;
    ids["JE2+E2J=0"] = matadd(matmul(J, E2), matmul(E2, J)) == zero;
    ids["J^2=-U"] = matmul(J, J) == scaled(U, -1);
    ids["E1^2=U"] = matmul(E1, E1) == U;
    ids["E2^2=U"] = matmul(E2, E2) == U;
    ids["JE1=E2"] = matmul(J, E1) == E2;
    ids["E2E1=J"] = matmul(E2, E1) == J;
    ids["JE2=-E1"] = matmul(J, E2) == scaled(E1, -1);
    json table;
    table["[T,X]=2Y"] = commutator(J, E1) == scaled(E2, 2);
    table["[X,Y]=-2T"] = commutator(E1, E2) == scaled(J, -2);
    table["[T,Y]=-2X"] = commutator(J, E2) == scaled(E1, -2);
    bool ok = true;
    for (const auto& [k, v] : ids.items()) ok = ok && v.get<bool>();
    for (const auto& [k, v] : table.items()) ok = ok && v.get<bool>();
    return {"algebra", ok, {{"identities", ids}, {"commutator_table", table}}};
}

SuiteResult suite_frame(bool fault, std::uint64_t seed) {
    auto pts = sample_points(1000, seed);
    if (fault) {
        auto c = pts[7].coords();
        c[1] += 1e-6;
        pts[7] = PointAdS::unchecked(c);
    }
    const double err = frame_gram_max_error(pts, Exec::Parallel);
    return {"frame_gram", err <= 1e-12, {{"points", pts.size()}, {"max_gram_error", err}, {"bound", 1e-12}}};
}

SuiteResult suite_closed_form(bool fault) {
    struct Case {
        const char* name;
        ConstGeodesicSpec spec;
        double bound;
    };
    const Case cases[] = {
        {"tx_timelike", {Distribution::SpanTX, ConstFamily::Timelike, 0.7}, 1e-8},
        {"tx_spacelike", {Distribution::SpanTX, ConstFamily::Spacelike, 0.7}, 1e-8},
        {"xy_unit", {Distribution::SpanXY, ConstFamily::Unit, 0.7}, 1e-8},
        {"tx_lightlike_pp", {Distribution::SpanTX, ConstFamily::Lightlike, 0.0, 1, 1}, 1e-10},
        {"tx_lightlike_mp", {Distribution::SpanTX, ConstFamily::Lightlike, 0.0, -1, 1}, 1e-10},
    };
    json m;
    bool ok = true;
    for (const auto& c : cases) {
        PhaseState st = const_geodesic_initial_state(c.spec);
        if (fault) st.xi[1] += 1e-6;
        const double e = max_dev_to(run(st, c.spec.distribution, 2 * kPi, 1e-3), c.spec);
        m[c.name] = {{"max_deviation", e}, {"bound", c.bound}};
        ok = ok && e <= c.bound;
    }
    return {"closed_form", ok, m};
}

struct Drifts {
    double H = 0, manifold = 0, horiz = 0, first_integrals = 0;
};

Drifts drifts_of(const Trajectory& t, Distribution d) {
    Drifts r;
    for (double v : t.diagnostics.at("H_drift")) r.H = std::max(r.H, std::abs(v));
    for (double v : t.diagnostics.at("manifold_residual")) r.manifold = std::max(r.manifold, std::abs(v));
    for (double v : t.diagnostics.at("horiz_residual")) r.horiz = std::max(r.horiz, std::abs(v));
    if (d == Distribution::SpanTX) {
        const auto f0 = first_integrals_tx(start_of(t));
        for (std::size_t i = 0; i < t.size(); ++i) {
            const auto f = first_integrals_tx({t.points[i].coords(), t.momenta[i]});
            r.first_integrals = std::max({r.first_integrals, std::abs(f.A - f0.A), std::abs(f.B - f0.B),
                                          std::abs(f.C - f0.C), std::abs(f.D - f0.D)});
        }
    } else {
        const auto f0 = first_integrals_xy(start_of(t));
        for (std::size_t i = 0; i < t.size(); ++i) {
            const auto f = first_integrals_xy({t.points[i].coords(), t.momenta[i]});
            r.first_integrals = std::max({r.first_integrals, std::abs(f.CD - f0.CD), std::abs(f.AB - f0.AB)});
        }
    }
    return r;
}

// SpanTX momenta grow like exp(2|kappa| s), so kappa is kept small there.
std::vector<PhaseState> random_flows(std::size_t n, std::uint64_t seed, Distribution d, double speed) {
    const auto pts = sample_points(n, seed, 1.0);
    std::mt19937_64 rng(seed + 1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<PhaseState> out;
    for (const auto& p : pts) {
        double a = u(rng), b = u(rng), c = u(rng);
        const double nrm = std::sqrt(a * a + b * b + c * c);
        a *= speed / nrm, b *= speed / nrm, c *= speed / nrm;
        if (d == Distribution::SpanTX) c = 0.15 * u(rng);
        out.push_back({p.coords(), covector_from_pairings(p, a, b, c, u(rng))});
    }
    return out;
}

SuiteResult suite_conservation(bool fault, std::uint64_t seed) {
    json m;
    bool ok = true;
    IntegratorConfig cfg;
    cfg.s1 = 10.0;
    cfg.step = fault ? 0.25 : 1e-3;
    cfg.record_every = 10;
    for (Distribution d : {Distribution::SpanTX, Distribution::SpanXY}) {
        const auto flows = integrate_batch(random_flows(8, seed, d, 0.5), d, cfg, Exec::Parallel);
        Drifts worst;
        for (const auto& t : flows) {
            const auto r = drifts_of(t, d);
            worst.H = std::max(worst.H, r.H);
            worst.manifold = std::max(worst.manifold, r.manifold);
            worst.horiz = std::max(worst.horiz, r.horiz);
            worst.first_integrals = std::max(worst.first_integrals, r.first_integrals);
        }
        m[to_string(d)] = {{"flows", flows.size()},
                           {"H_drift", worst.H},
                           {"manifold_drift", worst.manifold},
                           {"horiz_residual", worst.horiz},
                           {"first_integral_drift", worst.first_integrals},
                           {"bound", 1e-8}};
        ok = ok && worst.H <= 1e-8 && worst.manifold <= 1e-8 && worst.horiz <= 1e-8 &&
             worst.first_integrals <= 1e-8;
    }
    return {"conservation", ok, m};
}

SuiteResult suite_euler_lagrange(bool fault, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const auto pts = sample_points(20, seed + 6, 1.0);
    double worst_lambda = 0, worst_speed = 0, worst_fit = 0, worst_slope = 0;
    bool ok = true;
    for (const auto& p : pts) {
        // timelike with kappa != 0
        const double r = 0.5 + 0.5 * std::abs(u(rng)), w = 0.8 * u(rng);
        const double kappa = (0.2 + 0.3 * std::abs(u(rng))) * (u(rng) < 0 ? -1 : 1);
        PhaseState st{p.coords(), covector_from_pairings(p, r * std::cosh(w), r * std::sinh(w), kappa, u(rng))};
        Trajectory t = run(st, Distribution::SpanTX, 2.0, 1e-3);
        if (fault)
            for (std::size_t i = 0; i < t.size(); ++i) t.velocities[i] = t.velocities[i] * (1.0 + 1e-4 * std::sin(37 * t.params[i]));
        const auto rep = euler_lagrange_residual(t, Distribution::SpanTX);
        std::vector<double> ang;
        for (std::size_t i = 0; i < rep.params.size(); ++i) ang.push_back(std::atanh(rep.coord2[i] / rep.coord1[i]));
        const auto fit = num::fit_line(rep.params, ang);
        const double rel = rep.lambda_max_dev / (1.0 + std::abs(rep.lambda_mean));
        worst_lambda = std::max(worst_lambda, rel);
        worst_speed = std::max(worst_speed, rep.speed_drift);
        worst_fit = std::max(worst_fit, fit.max_residual);
        worst_slope = std::max(worst_slope, std::abs(fit.slope - 2.0 * rep.lambda_mean));
        ok = ok && rel <= 1e-5 && rep.speed_drift <= 1e-8 && fit.max_residual <= 1e-6;
    }
    return {"euler_lagrange",
            ok,
            {{"flows", pts.size()},
             {"lambda_rel_dev", worst_lambda},
             {"speed_drift", worst_speed},
             {"angle_fit_residual", worst_fit},
             {"slope_minus_2lambda", worst_slope}}};
}

SuiteResult suite_connectivity(bool fault, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 9);
    std::uniform_real_distribution<double> ang(-kPi, kPi), th(0.1, 1.5);
    std::vector<std::pair<GlobalChartPoint, GlobalChartPoint>> pairs;
    while (pairs.size() < 100) {
        const double sgn = ang(rng) < 0 ? -1 : 1;
        GlobalChartPoint P{ang(rng), ang(rng), sgn * th(rng)}, Q{ang(rng), ang(rng), sgn * th(rng)};
        if (std::sin(P.psi) * std::sin(Q.psi) <= 0) Q.psi = -Q.psi;
        if (std::abs(std::sin(P.psi)) < 0.05 || std::abs(std::sin(Q.psi)) < 0.05) continue;
        pairs.emplace_back(P, Q);
    }
    const auto res = connect_tx_batch(pairs, kDefaultSamples, Exec::Parallel);
    int success = 0, typed_failures = 0;
    double worst_end = 0, worst_h = 0;
    for (std::size_t i = 0; i < res.size(); ++i) {
        if (!res[i].curve) {
            ++typed_failures;
            continue;
        }
        const auto& t = *res[i].curve;
        auto Qc = chart_to_vec(pairs[i].second);
        if (fault) Qc[0] += 1e-3;
        const double e = std::max(max_abs_diff(t.points.front().coords(), chart_to_vec(pairs[i].first)),
                                  max_abs_diff(t.points.back().coords(), Qc));
        double h = 0;
        for (double v : t.diagnostics.at("horiz_residual")) h = std::max(h, std::abs(v));
        worst_end = std::max(worst_end, e);
        worst_h = std::max(worst_h, h);
        if (e <= 1e-6 && h <= 1e-8) ++success;
    }
    // degenerate declarations must raise, never return a curve
    bool degenerate_typed = true;
    const GlobalChartPoint P{0.1, 0.5, 0.4};
    for (const auto& Q : {P, GlobalChartPoint{0.1, 2.0, 0.3}, GlobalChartPoint{1.0, -0.5, 0.4}}) {
        try {
            (void)connect_tx(P, Q);
            degenerate_typed = false;
        } catch (const Error&) {
        }
    }
    // constant theta exactness
    const double th0 = constant_theta_for(0.3, 0.2, -0.4, 1.5);
    const GlobalChartPoint A{0.3, 0.2, th0}, B{-0.4, 1.5, th0};
    const auto ct = connect_xy_constant_theta(A, B);
    const double ct_err = std::max(max_abs_diff(ct.points.front().coords(), chart_to_vec(A)),
                                   max_abs_diff(ct.points.back().coords(), chart_to_vec(B)));
    const bool ok = success >= 95 && degenerate_typed && ct_err <= 1e-12;
    return {"connectivity",
            ok,
            {{"pairs", pairs.size()},
             {"successes", success},
             {"typed_failures", typed_failures},
             {"max_endpoint_error", worst_end},
             {"max_horiz_residual", worst_h},
             {"degenerate_pairs_typed", degenerate_typed},
             {"constant_theta_endpoint_error", ct_err}}};
}

SuiteResult suite_parametric(bool fault) {
    struct Case {
        const char* name;
        ParametricGeodesicSpec spec;
        double s1;
    };
    const Case cases[] = {
        {"timelike_equal", {LocalChart::Timelike, 0.5, 0.5, 0.1}, 1.5},
        {"timelike_hyperbolic", {LocalChart::Timelike, 0.4, 0.5, 0.1}, 1.5},
        {"timelike_trigonometric", {LocalChart::Timelike, 0.5, 0.3, 0.1}, 1.5},
        {"spacelike", {LocalChart::Spacelike, 0.7, 0.4, 0.2}, 1.5},
        {"subriem_equal", {LocalChart::SubRiem, 0.6, 0.6, 0.1}, 1.5},
        {"subriem_trigonometric", {LocalChart::SubRiem, 0.5, 0.8, 0.1}, 1.5},
        {"subriem_hyperbolic", {LocalChart::SubRiem, 0.8, 0.5, 0.1}, 1.5},
    };
    json m;
    bool ok = true;
    for (const auto& c : cases) {
        IntegratorConfig cfg;
        cfg.s1 = c.s1;
        cfg.step = 1e-3;
        auto init = parametric_initial_state(c.spec);
        if (fault) init.p_phi += 1e-5;
        const auto ct = integrate_chart(init, cfg);
        double match = 0, fd = 0;
        const double h = 1e-4;
        for (std::size_t i = 0; i < ct.params.size(); i += 50) {
            const double s = ct.params[i];
            const auto z = parametric_geodesic_state(c.spec, s);
            const auto& y = ct.states[i];
            match = std::max({match, std::abs(z.phi - y.phi), std::abs(z.chi1 - y.chi1), std::abs(z.chi2 - y.chi2),
                              std::abs(z.p_phi - y.p_phi)});
            if (s > h && s < c.s1 - h) {
                const auto zp = parametric_geodesic_state(c.spec, s + h), zm = parametric_geodesic_state(c.spec, s - h);
                const auto f = chart_vector_field(z);
                fd = std::max({fd, std::abs((zp.phi - zm.phi) / (2 * h) - f[0]),
                               std::abs((zp.chi1 - zm.chi1) / (2 * h) - f[1]),
                               std::abs((zp.chi2 - zm.chi2) / (2 * h) - f[2]),
                               std::abs((zp.p_phi - zm.p_phi) / (2 * h) - f[3])});
            }
        }
        m[c.name] = {{"fd_residual", fd}, {"integrator_mismatch", match}};
        ok = ok && fd <= 1e-6 && match <= 1e-6;
    }
    return {"parametric", ok, m};
}

SuiteResult suite_cartesian_ab2(bool fault) {
    const double D = 1.3;
    const CartesianGeodesicSpec spec{1.0 + 0.5, -0.5, 1.0 / D, D};  // A-B=2, CD=1
    const auto x0 = cartesian_geodesic_tx(spec, 0.0);
    const auto v0 = cartesian_geodesic_tx_velocity_ab2(fault ? D + 1e-6 : D, 0.0);
    const double meaning = std::abs(D + (v0[1] + v0[2]));
    // consistency with the flow from the matching covector
    const PhaseState st{PointAdS::identity().coords(), initial_covector_tx(spec)};
    const auto t = run(st, Distribution::SpanTX, 2.0, 1e-3);
    double dev = 0;
    for (std::size_t i = 0; i < t.size(); i += 20)
        dev = std::max(dev, max_abs_diff(t.points[i].coords(), cartesian_geodesic_tx(spec, t.params[i]).coords()));
    const double base = max_abs_diff(x0.coords(), PointAdS::identity().coords());
    const bool ok = base == 0.0 && meaning <= 1e-10 && dev <= 1e-8;
    return {"cartesian_ab2",
            ok,
            {{"x0_error", base}, {"D_meaning_error", meaning}, {"flow_deviation", dev}}};
}

SuiteResult suite_causal(bool fault) {
    const GlobalChartPoint c21{0.2, 0.5, 0.7};
    const auto k21 = classify(chart_to_cartesian(c21), pushforward(c21, {0.0, 1.3, 0.0}));
    const GlobalChartPoint c22{0.2, kPi, 0.7};
    const auto k22 = classify(chart_to_cartesian(c22), pushforward(c22, {0.0, 0.0, 0.9}));
    const double psi0 = 0.6, K = std::cos(psi0) / std::sin(psi0) / 2.0 * (fault ? 1.001 : 1.0);
    const auto f = [&](double th) {
        return chart_velocity_norm_sq({0.0, psi0, th}, {1.0, 0.0, K * std::sinh(2 * th)});
    };
    double lo = 0.0, hi = 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0 ? lo : hi) = mid;
    }
    const double Kexact = std::cos(psi0) / std::sin(psi0) / 2.0;
    const double analytic = 0.5 * std::asinh(1.0 / (2.0 * Kexact));
    const double err = std::abs(0.5 * (lo + hi) - analytic);
    const bool ok = k21.kind == CausalClass::Kind::Timelike && k22.kind == CausalClass::Kind::Spacelike && err <= 1e-10;
    return {"causal",
            ok,
            {{"psi_only_curve", to_string(k21)},
             {"theta_only_curve", to_string(k22)},
             {"threshold_bisection", 0.5 * (lo + hi)},
             {"threshold_analytic", analytic},
             {"threshold_error", err}}};
}

SuiteResult suite_convergence(bool fault) {
    const ConstGeodesicSpec spec{Distribution::SpanTX, ConstFamily::Timelike, 0.7};
    const auto st = const_geodesic_initial_state(spec);
    const double s1 = 2 * kPi;
    const auto end_err = [&](double h) {
        const auto t = run(st, Distribution::SpanTX, s1, h);
        return max_abs_diff(t.points.back().coords(), const_geodesic(spec, t.params.back()).coords());
    };
    const double h = 2 * kPi / 100;
    const double e1 = end_err(h), e2 = end_err(fault ? h / 3 : h / 2);
    const double ratio = e1 / e2;
    return {"convergence", ratio >= 12 && ratio <= 20,
            {{"step", h}, {"error_h", e1}, {"error_h_over_2", e2}, {"ratio", ratio}}};
}

SuiteResult suite_io(bool fault) {
    const ConstGeodesicSpec spec{Distribution::SpanTX, ConstFamily::Timelike, 0.7};
    const auto t = run(const_geodesic_initial_state(spec), Distribution::SpanTX, 1.0, 1e-2);
    const auto tab = io::integrate_table(t);
    std::stringstream csv, js;
    io::write_csv(csv, tab);
    io::write_json(js, tab, {"verify", {}, io::kVersion});
    auto back_csv = io::read_csv(csv);
    const auto back_js = io::read_json(js);
    if (fault) back_csv.rows[3][2] += 1e-12;
    double csv_err = 0;
    bool json_exact = back_js.columns == tab.columns && back_js.rows.size() == tab.rows.size();
    for (std::size_t i = 0; i < tab.rows.size(); ++i)
        for (std::size_t j = 0; j < tab.columns.size(); ++j) {
            const double a = tab.rows[i][j];
            if (!std::isfinite(a)) continue;
            csv_err = std::max(csv_err, std::abs(back_csv.rows[i][j] - a) / std::max(1.0, std::abs(a)));
            if (json_exact && back_js.rows[i][j] != a) json_exact = false;
        }
    return {"io_roundtrip", json_exact && csv_err <= 1e-15 && back_csv.columns == io::integrate_columns(),
            {{"json_bit_identical", json_exact}, {"csv_max_rel_error", csv_err}}};
}

}  // namespace

bool VerifyReport::all_pass() const {
    for (const auto& s : suites)
        if (!s.pass) return false;
    return true;
}

nlohmann::ordered_json VerifyReport::to_json() const {
    json j;
    j["version"] = io::kVersion;
    j["all_pass"] = all_pass();
    auto arr = json::array();
    for (const auto& s : suites) arr.push_back({{"name", s.name}, {"pass", s.pass}, {"measured", s.measured}});
    j["suites"] = arr;
    return j;
}

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"algebra",       "frame_gram",   "closed_form", "conservation",
                                                "euler_lagrange", "connectivity", "parametric",  "cartesian_ab2",
                                                "causal",        "convergence",  "io_roundtrip"};
    return names;
}

VerifyReport run_verify(const VerifyOptions& opt) {
    VerifyReport r;
    const auto f = [&](const char* n) { return opt.inject_fault == n; };
    const auto guarded = [&](const char* name, auto&& fn) {
        try {
            r.suites.push_back(fn());
        } catch (const std::exception& e) {
            r.suites.push_back({name, false, {{"exception", e.what()}}});
        }
    };
    guarded("algebra", [&] { return suite_algebra(f("algebra")); });
    guarded("frame_gram", [&] { return suite_frame(f("frame_gram"), opt.seed); });
    guarded("closed_form", [&] { return suite_closed_form(f("closed_form")); });
    guarded("conservation", [&] { return suite_conservation(f("conservation"), opt.seed); });
    guarded("euler_lagrange", [&] { return suite_euler_lagrange(f("euler_lagrange"), opt.seed); });
    guarded("connectivity", [&] { return suite_connectivity(f("connectivity"), opt.seed); });
    guarded("parametric", [&] { return suite_parametric(f("parametric")); });
    guarded("cartesian_ab2", [&] { return suite_cartesian_ab2(f("cartesian_ab2")); });
    guarded("causal", [&] { return suite_causal(f("causal")); });
    guarded("convergence", [&] { return suite_convergence(f("convergence")); });
    guarded("io_roundtrip", [&] { return suite_io(f("io_roundtrip")); });
    return r;
}

}  // namespace adsgeo
