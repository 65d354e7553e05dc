#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>

#include "adsgeo/connectivity.hpp"
#include "adsgeo/geodesics.hpp"
#include "adsgeo/hamiltonian.hpp"
#include "adsgeo/numerics.hpp"

namespace adsgeo::cli {

using json = nlohmann::json;

namespace {

Distribution parse_dist(const std::string& s) {
    if (s == "tx") return Distribution::SpanTX;
    if (s == "xy") return Distribution::SpanXY;
    throw UsageError("unknown distribution '" + s + "' (expected tx or xy)");
}

LocalChart parse_local_chart(const std::string& s) {
    if (s == "timelike") return LocalChart::Timelike;
    if (s == "spacelike") return LocalChart::Spacelike;
    if (s == "subriem") return LocalChart::SubRiem;
    throw UsageError("unknown chart '" + s + "' (expected timelike, spacelike or subriem)");
}

void check_format(const Output& o) {
    if (o.format != "csv" && o.format != "json")
        throw UsageError("unknown format '" + o.format + "' (expected csv or json)");
}

void check_keys(const json& j, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw UsageError("params must be a JSON object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [k, _] : j.items())
        if (!ok.count(k) && k != "out" && k != "format") throw UsageError("unknown key '" + k + "'");
}

template <class T>
void take(const json& j, const char* key, T& dst) {
    if (!j.contains(key)) return;
    try {
        dst = j.at(key).get<T>();
    } catch (const json::exception&) {
        throw UsageError(std::string("bad value for '") + key + "'");
    }
}

void take_output(const json& j, Output& o) {
    take(j, "out", o.path);
    take(j, "format", o.format);
}

Vec4 to_vec4(const std::vector<double>& v, const char* what) {
    if (v.size() != 4) throw UsageError(std::string(what) + " needs 4 values");
    return {v[0], v[1], v[2], v[3]};
}

Trajectory with_diagnostics(Trajectory t, Distribution d) {
    auto& hr = t.diagnostics["horiz_residual"];
    auto& h1 = t.diagnostics["hcoord1"];
    auto& h2 = t.diagnostics["hcoord2"];
    for (std::size_t i = 0; i < t.size(); ++i) {
        hr.push_back(horizontality_residual(t.points[i], t.velocities[i], d, 1e300));
        const auto [a, b] = horizontal_coords(t.points[i], t.velocities[i], d, 1e300);
        h1.push_back(a);
        h2.push_back(b);
    }
    return t;
}

json vec_json(const std::vector<double>& v) { return json(v); }

}  // namespace

double default_tol(double fallback) {
    if (const char* env = std::getenv("ADSGEO_DEFAULT_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0.0 && std::isfinite(v)) return v;
    }
    return fallback;
}

const std::vector<std::string>& geodesic_families() {
    static const std::vector<std::string> f{"const-timelike", "const-spacelike", "const-lightlike", "const",
                                            "vertical",       "cartesian",       "parametric"};
    return f;
}

// ─── geodesic ───────────────────────────────────────────────────────────────

Result cmd_geodesic(const GeodesicParams& p) {
    check_format(p.out);
    const auto& fams = geodesic_families();
    if (std::find(fams.begin(), fams.end(), p.family) == fams.end()) {
        std::string list;
        for (const auto& f : fams) list += (list.empty() ? "" : ", ") + f;
        throw UsageError("unknown family '" + p.family + "'; families: " + list);
    }
    Distribution d = parse_dist(p.dist);
    if (p.n < 2) throw UsageError("--n must be at least 2");
    if (!(p.s_max > p.s_min)) throw UsageError("--s-max must exceed --s-min");
    Trajectory t;
    t.params = num::linspace(p.s_min, p.s_max, p.n);
    const auto& s = t.params;

    if (p.family.rfind("const", 0) == 0 || p.family == "vertical") {
        if (p.family == "vertical") {
            for (double si : s) {
                t.points.push_back(vertical_line(d, si));
                t.velocities.push_back(vertical_line_velocity(d, si));
            }
        } else {
            ConstGeodesicSpec spec{d, ConstFamily::Unit, p.psi, p.alpha_sign, p.beta_sign};
            if (p.family == "const") {
                if (d != Distribution::SpanXY)
                    throw UsageError("family 'const' is the SpanXY family; use const-timelike/-spacelike/-lightlike "
                                     "with --dist tx");
            } else {
                if (d != Distribution::SpanTX) throw UsageError("family '" + p.family + "' needs --dist tx");
                spec.family = p.family == "const-timelike"    ? ConstFamily::Timelike
                              : p.family == "const-spacelike" ? ConstFamily::Spacelike
                                                               : ConstFamily::Lightlike;
                if (spec.family == ConstFamily::Lightlike &&
                    (std::abs(p.alpha_sign) != 1 || std::abs(p.beta_sign) != 1))
                    throw UsageError("--alpha-sign and --beta-sign must be +1 or -1");
            }
            for (double si : s) {
                t.points.push_back(const_geodesic(spec, si));
                t.velocities.push_back(const_geodesic_velocity(spec, si));
            }
        }
    } else if (p.family == "cartesian") {
        std::vector<Vec4> pts;
        if (d == Distribution::SpanTX) {
            pts = cartesian_geodesic_tx_grid({p.A, p.B, p.C, p.D}, s);
        } else {
            for (double si : s) pts.push_back(cartesian_geodesic_xy(p.B, p.C, p.D, si).coords());
        }
        for (const auto& x : pts) t.points.push_back(PointAdS::unchecked(x));
        if (d == Distribution::SpanTX && p.A - p.B == 2.0) {
            for (double si : s) t.velocities.push_back(cartesian_geodesic_tx_velocity_ab2(p.D, si));
        } else {
            t.velocities = num::derivative(s, pts);
        }
    } else {  // parametric
        const ParametricGeodesicSpec spec{parse_local_chart(p.chart), p.phi_dot0, p.chi2_dot, p.chi2_0};
        d = spec.chart == LocalChart::SubRiem ? Distribution::SpanXY : Distribution::SpanTX;
        auto& phi = t.diagnostics["phi"];
        auto& chi1 = t.diagnostics["chi1"];
        auto& chi2 = t.diagnostics["chi2"];
        for (double si : s) {
            const auto z = parametric_geodesic_state(spec, si);
            const auto f = chart_vector_field(z);
            t.points.push_back(PointAdS::unchecked(chart_to_vec(z.point())));
            t.velocities.push_back(pushforward(z.point(), Vec3{f[0], f[1], f[2]}));
            phi.push_back(z.phi);
            chi1.push_back(z.chi1);
            chi2.push_back(z.chi2);
        }
    }
    t = with_diagnostics(std::move(t), d);
    json params = {{"dist", to_string(d)}, {"family", p.family}, {"psi", p.psi}, {"s_min", p.s_min},
                   {"s_max", p.s_max},     {"n", p.n}};
    if (p.family == "const-lightlike") params.update({{"alpha_sign", p.alpha_sign}, {"beta_sign", p.beta_sign}});
    if (p.family == "cartesian") params.update({{"A", p.A}, {"B", p.B}, {"C", p.C}, {"D", p.D}});
    if (p.family == "parametric")
        params.update({{"chart", p.chart}, {"phi_dot0", p.phi_dot0}, {"chi2_dot", p.chi2_dot}, {"chi2_0", p.chi2_0}});
    return {io::curve_table(t), {"geodesic", params, io::kVersion}};
}

// ─── integrate ──────────────────────────────────────────────────────────────

Result cmd_integrate(const IntegrateParams& p) {
    check_format(p.out);
    const Distribution d = parse_dist(p.dist);
    const double tol = p.tol > 0 ? p.tol : default_tol();
    const Vec4 x = to_vec4(p.x, "--x");
    const PointAdS x0(x, tol);  // OffManifold -> exit 1
    Vec4 xi;
    if (!p.xi.empty())
        xi = to_vec4(p.xi, "--xi");
    else
        xi = covector_from_pairings(x0, p.tau, p.varsigma, p.kappa, p.nu);
    IntegratorConfig cfg;
    if (p.method == "rk4")
        cfg.method = Method::RK4Fixed;
    else if (p.method == "rk45")
        cfg.method = Method::RK45Adaptive;
    else
        throw UsageError("unknown method '" + p.method + "' (expected rk4 or rk45)");
    cfg.s0 = p.s0;
    cfg.s1 = p.s1;
    cfg.step = p.step;
    cfg.rel_tol = p.rtol;
    cfg.abs_tol = p.atol;
    cfg.record_every = p.record_every;
    cfg.strict = p.strict;
    cfg.strict_bound = p.strict_bound;
    cfg.manifold_tol = tol;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto t = integrate({x, xi}, d, cfg);
    const json params = {{"dist", to_string(d)}, {"x", vec_json(p.x)},     {"xi", {xi[0], xi[1], xi[2], xi[3]}},
                         {"s0", p.s0},           {"s1", p.s1},             {"step", p.step},
                         {"method", p.method},   {"strict", p.strict},     {"record_every", p.record_every}};
    return {io::integrate_table(t), {"integrate", params, io::kVersion}};
}

// ─── connect ────────────────────────────────────────────────────────────────

Result cmd_connect(const ConnectParams& p) {
    check_format(p.out);
    const Distribution d = parse_dist(p.dist);
    if (p.chart != "global" && p.chart != "cartesian")
        throw UsageError("--chart is required: global (phi,psi,theta) or cartesian (x1..x4)");
    if (int(p.const_psi) + int(p.const_theta) + int(p.piecewise) > 1)
        throw UsageError("--const-psi, --const-theta and --piecewise are exclusive");
    if (p.const_psi && d != Distribution::SpanTX) throw UsageError("--const-psi needs --dist tx");
    if (p.const_theta && d != Distribution::SpanXY) throw UsageError("--const-theta needs --dist xy");
    if (p.piecewise && d != Distribution::SpanTX) throw UsageError("--piecewise needs --dist tx");
    const double tol = p.tol > 0 ? p.tol : default_tol();
    GlobalChartPoint P, Q;
    if (p.chart == "global") {
        if (p.P.size() != 3 || p.Q.size() != 3) throw UsageError("--P and --Q need phi,psi,theta");
        P = {p.P[0], p.P[1], p.P[2]};
        Q = {p.Q[0], p.Q[1], p.Q[2]};
    } else {
        P = cartesian_to_global_chart(PointAdS(to_vec4(p.P, "--P"), tol), tol);
        Q = cartesian_to_global_chart(PointAdS(to_vec4(p.Q, "--Q"), tol), tol);
    }
    if (P.phi == Q.phi && P.psi == Q.psi && P.theta == Q.theta)
        throw DegenerateConfiguration("connect: P = Q");
    Trajectory t;
    std::string variant;
    if (p.const_psi) {
        t = connect_tx_constant_psi(P, Q, p.n, tol);
        variant = "const-psi";
    } else if (p.const_theta) {
        t = connect_xy_constant_theta(P, Q, p.n, tol);
        variant = "const-theta";
    } else if (p.piecewise) {
        t = connect_piecewise_timelike(P, Q, p.n, tol);
        variant = "piecewise";
    } else if (d == Distribution::SpanTX) {
        t = connect_tx(P, Q, p.n);
        variant = "bridge";
    } else {
        t = connect_xy(P, Q, std::nullopt, p.n);
        variant = "bridge";
    }
    const json params = {{"dist", to_string(d)}, {"chart", p.chart}, {"P", vec_json(p.P)},
                         {"Q", vec_json(p.Q)},   {"n", p.n},         {"variant", variant}};
    return {io::curve_table(t), {"connect", params, io::kVersion}};
}

// ─── JSON configs ───────────────────────────────────────────────────────────

GeodesicParams geodesic_from_json(const json& j) {
    check_keys(j, {"dist", "family", "psi", "s_min", "s_max", "n", "alpha_sign", "beta_sign", "A", "B", "C", "D",
                   "chart", "phi_dot0", "chi2_dot", "chi2_0"});
    GeodesicParams p;
    take(j, "dist", p.dist);
    take(j, "family", p.family);
    take(j, "psi", p.psi);
    take(j, "s_min", p.s_min);
    take(j, "s_max", p.s_max);
    take(j, "n", p.n);
    take(j, "alpha_sign", p.alpha_sign);
    take(j, "beta_sign", p.beta_sign);
    take(j, "A", p.A);
    take(j, "B", p.B);
    take(j, "C", p.C);
    take(j, "D", p.D);
    take(j, "chart", p.chart);
    take(j, "phi_dot0", p.phi_dot0);
    take(j, "chi2_dot", p.chi2_dot);
    take(j, "chi2_0", p.chi2_0);
    take_output(j, p.out);
    return p;
}

IntegrateParams integrate_from_json(const json& j) {
    check_keys(j, {"dist", "x", "xi", "tau", "varsigma", "kappa", "nu", "s0", "s1", "step", "rtol", "atol", "method",
                   "record_every", "strict", "strict_bound", "tol"});
    IntegrateParams p;
    take(j, "dist", p.dist);
    take(j, "x", p.x);
    take(j, "xi", p.xi);
    take(j, "tau", p.tau);
    take(j, "varsigma", p.varsigma);
    take(j, "kappa", p.kappa);
    take(j, "nu", p.nu);
    take(j, "s0", p.s0);
    take(j, "s1", p.s1);
    take(j, "step", p.step);
    take(j, "rtol", p.rtol);
    take(j, "atol", p.atol);
    take(j, "method", p.method);
    take(j, "record_every", p.record_every);
    take(j, "strict", p.strict);
    take(j, "strict_bound", p.strict_bound);
    take(j, "tol", p.tol);
    take_output(j, p.out);
    return p;
}

ConnectParams connect_from_json(const json& j) {
    check_keys(j, {"dist", "chart", "P", "Q", "n", "const_psi", "const_theta", "piecewise", "tol"});
    ConnectParams p;
    take(j, "dist", p.dist);
    take(j, "chart", p.chart);
    take(j, "P", p.P);
    take(j, "Q", p.Q);
    take(j, "n", p.n);
    take(j, "const_psi", p.const_psi);
    take(j, "const_theta", p.const_theta);
    take(j, "piecewise", p.piecewise);
    take(j, "tol", p.tol);
    take_output(j, p.out);
    return p;
}

void emit(const Result& r, const Output& o) {
    const auto f = io::format_from_string(o.format);
    if (!o.path.empty()) {
        io::write_file(o.path, r.table, r.meta, f);
        return;
    }
    if (f == io::Format::Csv)
        io::write_csv(std::cout, r.table);
    else
        io::write_json(std::cout, r.table, r.meta);
}

int exit_code_for(const std::exception& e, json& record) {
    record["message"] = e.what();
    if (const auto* u = dynamic_cast<const UsageError*>(&e)) {
        (void)u;
        record["error"] = "UsageError";
        return kExitUsage;
    }
    if (const auto* a = dynamic_cast<const Error*>(&e)) {
        record["error"] = to_string(a->kind());
        return kExitFailure;
    }
    if (dynamic_cast<const std::invalid_argument*>(&e)) {
        record["error"] = "InvalidArgument";
        return kExitUsage;
    }
    record["error"] = "Failure";
    return kExitFailure;
}

std::vector<SweepOutcome> cmd_sweep(const json& config) {
    if (!config.is_object() || !config.contains("runs") || !config.at("runs").is_array())
        throw UsageError("sweep config needs a \"runs\" array");
    for (const auto& [k, _] : config.items())
        if (k != "runs") throw UsageError("unknown key '" + k + "' in sweep config");
    const auto& runs = config.at("runs");
    // parse and validate everything before dispatch
    struct Job {
        std::string command;
        json params;
    };
    std::vector<Job> jobs;
    std::set<std::string> outs;
    for (const auto& r : runs) {
        if (!r.is_object()) throw UsageError("each run must be an object");
        for (const auto& [k, _] : r.items())
            if (k != "command" && k != "params") throw UsageError("unknown key '" + k + "' in run");
        Job job{r.value("command", ""), r.value("params", json::object())};
        if (job.command == "geodesic")
            (void)geodesic_from_json(job.params);
        else if (job.command == "integrate")
            (void)integrate_from_json(job.params);
        else if (job.command == "connect")
            (void)connect_from_json(job.params);
        else
            throw UsageError("unknown sweep command '" + job.command + "' (expected geodesic, integrate, connect)");
        const std::string out = job.params.value("out", "");
        if (out.empty()) throw UsageError("every sweep run needs params.out");
        if (!outs.insert(out).second) throw UsageError("duplicate output path '" + out + "'");
        jobs.push_back(std::move(job));
    }
    std::vector<SweepOutcome> res(jobs.size());
    const auto n = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto& job = jobs[std::size_t(i)];
        auto& out = res[std::size_t(i)];
        out.out = job.params.value("out", "");
        try {
            if (job.command == "geodesic") {
                const auto p = geodesic_from_json(job.params);
                emit(cmd_geodesic(p), p.out);
            } else if (job.command == "integrate") {
                const auto p = integrate_from_json(job.params);
                emit(cmd_integrate(p), p.out);
            } else {
                const auto p = connect_from_json(job.params);
                emit(cmd_connect(p), p.out);
            }
        } catch (const std::exception& e) {
            json rec;
            out.exit_code = exit_code_for(e, rec);
            out.message = rec.dump();
        }
    }
    return res;
}

}  // namespace adsgeo::cli
