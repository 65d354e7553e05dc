#include "adsgeo/hamiltonian.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "adsgeo/numerics.hpp"
#include "adsgeo/ode.hpp"

namespace adsgeo {

namespace {

using S8 = ode::State<8>;
using S4 = ode::State<4>;

S8 pack(const PhaseState& st) {
    return {st.x[0], st.x[1], st.x[2], st.x[3], st.xi[0], st.xi[1], st.xi[2], st.xi[3]};
}
PhaseState unpack(const S8& y) { return {{y[0], y[1], y[2], y[3]}, {y[4], y[5], y[6], y[7]}}; }

// xi M^T for the structure matrices, as row vectors
Vec4 xi_JT(const Vec4& k) { return rowmul(k, transpose(kJ)); }
Vec4 xi_E1T(const Vec4& k) { return rowmul(k, kE1); }  // E1 symmetric
Vec4 xi_E2T(const Vec4& k) { return rowmul(k, kE2); }  // E2 symmetric

}  // namespace

Momenta momenta(const PhaseState& st) {
    return {dot(st.xi, field_T(st.x)), dot(st.xi, field_X(st.x)), dot(st.xi, field_Y(st.x))};
}

double hamiltonian_value(const PhaseState& st, Distribution d) {
    const Momenta m = momenta(st);
    return d == Distribution::SpanTX ? 0.5 * (-m.tau * m.tau + m.varsigma * m.varsigma)
                                     : 0.5 * (m.varsigma * m.varsigma + m.kappa * m.kappa);
}

Vec4 covector_from_pairings(const PointAdS& p, double tau, double varsigma, double kappa, double nu) {
    const Vec4 v = reconstruct_from_frame(p, {tau, varsigma, kappa, nu});
    return {-v[0], -v[1], v[2], v[3]};
}

PhaseState vector_field(const PhaseState& st, Distribution d) {
    const Momenta m = momenta(st);
    const Vec4& x = st.x;
    const Vec4& k = st.xi;
    if (d == Distribution::SpanTX)
        return {-m.tau * field_T(x) + m.varsigma * field_X(x), m.tau * xi_JT(k) - m.varsigma * xi_E1T(k)};
    return {m.varsigma * field_X(x) + m.kappa * field_Y(x), -m.varsigma * xi_E1T(k) - m.kappa * xi_E2T(k)};
}

void IntegratorConfig::validate() const {
    if (!(s1 > s0)) throw std::invalid_argument("integrator: s1 must exceed s0");
    if (!(step > 0.0)) throw std::invalid_argument("integrator: step must be positive");
    if (record_every < 1) throw std::invalid_argument("integrator: record_every must be >= 1");
    if (method == Method::RK45Adaptive && !(rel_tol > 0.0 && abs_tol > 0.0))
        throw std::invalid_argument("integrator: tolerances must be positive");
}

namespace {

// Drives a fixed or adaptive scheme and calls rec(s, y) on recorded samples.
template <std::size_t N, class F, class Rec>
void drive(const F& f, ode::State<N> y, const IntegratorConfig& cfg, const Rec& rec) {
    double s = cfg.s0;
    rec(s, y);
    if (cfg.method == Method::RK4Fixed) {
        const double span = cfg.s1 - cfg.s0;
        const auto nsteps = static_cast<std::size_t>(std::ceil(span / cfg.step - 1e-9));
        const double h = span / double(nsteps);
        ode::State<N> comp{};
        for (std::size_t i = 1; i <= nsteps; ++i) {
            ode::compensated_add<N>(y, comp, ode::rk4_increment<N>(f, s, y, h));
            s = i == nsteps ? cfg.s1 : cfg.s0 + double(i) * h;
            if (i % std::size_t(cfg.record_every) == 0 || i == nsteps) rec(s, y);
        }
        return;
    }
    double h = std::min(cfg.step, cfg.s1 - cfg.s0);
    std::size_t accepted = 0;
    while (s < cfg.s1) {
        const bool last = s + h >= cfg.s1;
        const double hh = last ? cfg.s1 - s : h;
        double err = 0.0;
        const auto y5 = ode::dp45_step<N>(f, s, y, hh, cfg.rel_tol, cfg.abs_tol, err);
        if (!std::isfinite(err)) err = 1e10;
        if (err <= 1.0) {
            y = y5;
            s = last ? cfg.s1 : s + hh;
            ++accepted;
            if (accepted % std::size_t(cfg.record_every) == 0 || s == cfg.s1) rec(s, y);
        }
        const double fac = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h = hh * fac;
        if (h < cfg.min_step) {
            std::ostringstream os;
            os << "adaptive step underflow at s=" << s;
            throw StepFailure(os.str());
        }
    }
}

}  // namespace

Trajectory integrate(const PhaseState& state0, Distribution d, const IntegratorConfig& cfg) {
    cfg.validate();
    require_on_manifold(state0.x, cfg.manifold_tol);
    const double H0 = hamiltonian_value(state0, d);
    Trajectory t;
    auto& dH = t.diagnostics["H"];
    auto& dDrift = t.diagnostics["H_drift"];
    auto& dMan = t.diagnostics["manifold_residual"];
    auto& dHor = t.diagnostics["horiz_residual"];
    auto& dC1 = t.diagnostics["hcoord1"];
    auto& dC2 = t.diagnostics["hcoord2"];
    const auto f = [d](double, const S8& y) { return pack(vector_field(unpack(y), d)); };
    const auto rec = [&](double s, const S8& y) {
        const PhaseState st = unpack(y);
        const PhaseState dy = vector_field(st, d);
        const double H = hamiltonian_value(st, d);
        const Momenta m = momenta(st);
        const double man = manifold_residual(st.x);
        const double hor = d == Distribution::SpanTX ? minkowski_inner(field_Y(st.x), dy.x)
                                                     : minkowski_inner(field_T(st.x), dy.x);
        t.params.push_back(s);
        t.points.push_back(PointAdS::unchecked(st.x));
        t.velocities.push_back(dy.x);
        t.momenta.push_back(st.xi);
        dH.push_back(H);
        dDrift.push_back(H - H0);
        dMan.push_back(man);
        dHor.push_back(hor);
        dC1.push_back(d == Distribution::SpanTX ? m.tau : m.varsigma);
        dC2.push_back(d == Distribution::SpanTX ? m.varsigma : m.kappa);
        if (cfg.strict && (std::abs(H - H0) > cfg.strict_bound || std::abs(man) > cfg.strict_bound ||
                           std::abs(hor) > cfg.strict_bound)) {
            std::ostringstream os;
            os << "diagnostic breach at s=" << s << ": H drift " << H - H0 << ", manifold " << man
               << ", horizontality " << hor;
            throw DiagnosticBreach(os.str());
        }
    };
    drive<8>(f, pack(state0), cfg, rec);
    return t;
}

// ─── chart systems ──────────────────────────────────────────────────────────

namespace {

// W and dW/dphi; `tn` is tan/tanh, `ct` its reciprocal
struct WTerm {
    double W, dW, tn, ct;
};

WTerm w_term(const ChartPhase& z) {
    const double f = z.phi;
    WTerm r{};
    switch (z.chart) {
        case LocalChart::Timelike: {
            r.tn = std::tan(f);
            const double sec2 = 1.0 + r.tn * r.tn;
            r.W = z.xi1 * r.tn;
            r.dW = z.xi1 * sec2;
            if (z.xi2 != 0.0) {
                r.ct = 1.0 / r.tn;
                r.W += z.xi2 * r.ct;
                r.dW -= z.xi2 * (1.0 + r.ct * r.ct);
            }
            return r;
        }
        case LocalChart::Spacelike: {
            r.tn = std::tanh(f);
            r.W = z.xi1 * r.tn;
            r.dW = z.xi1 * (1.0 - r.tn * r.tn);
            if (z.xi2 != 0.0) {
                r.ct = 1.0 / r.tn;
                r.W -= z.xi2 * r.ct;
                r.dW += z.xi2 * (r.ct * r.ct - 1.0);
            }
            return r;
        }
        case LocalChart::SubRiem: {
            r.tn = std::tanh(f);
            r.W = -z.xi1 * r.tn;
            r.dW = -z.xi1 * (1.0 - r.tn * r.tn);
            if (z.xi2 != 0.0) {
                r.ct = 1.0 / r.tn;
                r.W += z.xi2 * r.ct;
                r.dW -= z.xi2 * (r.ct * r.ct - 1.0);
            }
            return r;
        }
    }
    return r;
}

}  // namespace

double chart_hamiltonian(const ChartPhase& z) {
    const WTerm w = w_term(z);
    switch (z.chart) {
        case LocalChart::Timelike: return 0.5 * (-z.p_phi * z.p_phi + w.W * w.W);
        case LocalChart::Spacelike: return 0.5 * (z.p_phi * z.p_phi - w.W * w.W);
        case LocalChart::SubRiem: return 0.5 * (z.p_phi * z.p_phi + w.W * w.W);
    }
    return 0.0;
}

std::array<double, 4> chart_vector_field(const ChartPhase& z) {
    const WTerm w = w_term(z);
    // chi velocities expanded so that xi2 = 0 needs no cot/coth
    const double tn2 = w.tn * w.tn;
    const double ct2 = z.xi2 != 0.0 ? w.ct * w.ct : 0.0;
    switch (z.chart) {
        case LocalChart::Timelike:
            return {-z.p_phi, z.xi1 * tn2 + z.xi2, z.xi1 + z.xi2 * ct2, -w.W * w.dW};
        case LocalChart::Spacelike:
            return {z.p_phi, -z.xi1 * tn2 + z.xi2, z.xi1 - z.xi2 * ct2, w.W * w.dW};
        case LocalChart::SubRiem:
            return {z.p_phi, z.xi1 * tn2 - z.xi2, z.xi2 * ct2 - z.xi1, -w.W * w.dW};
    }
    return {};
}

ChartTrajectory integrate_chart(const ChartPhase& init, const IntegratorConfig& cfg, double guard) {
    cfg.validate();
    const auto check = [&](const ChartPhase& z, double s) {
        const double f = z.phi;
        bool sing = false;
        if (z.chart == LocalChart::Timelike) {
            if (std::abs(std::cos(f)) < guard) sing = true;
            if (z.xi2 != 0.0 && std::abs(std::sin(f)) < guard) sing = true;
        } else if (z.xi2 != 0.0 && std::abs(std::sinh(f)) < guard) {
            sing = true;
        }
        if (sing || !std::isfinite(f)) {
            std::ostringstream os;
            os << to_string(z.chart) << " chart flow hit a coordinate singularity at s=" << s
               << " (phi=" << f << ")";
            throw ChartSingularity(os.str());
        }
    };
    const auto mk = [&](const S4& y) {
        ChartPhase z = init;
        z.phi = y[0];
        z.chi1 = y[1];
        z.chi2 = y[2];
        z.p_phi = y[3];
        return z;
    };
    const auto f = [&](double, const S4& y) { return chart_vector_field(mk(y)); };
    ChartTrajectory out;
    const auto rec = [&](double s, const S4& y) {
        const ChartPhase z = mk(y);
        check(z, s);
        out.params.push_back(s);
        out.states.push_back(z);
        out.energy.push_back(chart_hamiltonian(z));
    };
    drive<4>(f, S4{init.phi, init.chi1, init.chi2, init.p_phi}, cfg, rec);
    return out;
}

PhaseState chart_phase_to_cartesian(const ChartPhase& z) {
    const LocalChartPoint c = z.point();
    return {chart_to_vec(c), chart_covector_to_cartesian(c, {z.p_phi, z.xi1, z.xi2})};
}

// ─── Euler-Lagrange verification ────────────────────────────────────────────

EulerLagrangeReport euler_lagrange_residual(const Trajectory& t, Distribution d, double horiz_tol) {
    if (t.size() < 7) throw EmptyTrajectory("euler_lagrange_residual: need at least 7 samples");
    const auto v = trajectory_velocities(t);
    const std::size_t n = t.size();
    std::vector<double> c1(n), c2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = horizontality_residual(t.points[i], v[i], d, 1e300);
        if (std::abs(r) > horiz_tol) {
            std::ostringstream os;
            os << "sample " << i << " not horizontal: residual " << r;
            throw NotHorizontal(os.str());
        }
        std::tie(c1[i], c2[i]) = horizontal_coords(t.points[i], v[i], d, 1e300);
    }
    const auto d1 = num::derivative(t.params, c1);
    const auto d2 = num::derivative(t.params, c2);
    EulerLagrangeReport rep;
    const auto speed = [&](std::size_t i) {
        return d == Distribution::SpanTX ? -c1[i] * c1[i] + c2[i] * c2[i] : c1[i] * c1[i] + c2[i] * c2[i];
    };
    const double q0 = speed(0);
    for (std::size_t i = 0; i < n; ++i) rep.speed_drift = std::max(rep.speed_drift, std::abs(speed(i) - q0));
    double sum = 0.0;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const double a = c1[i], b = c2[i], da = d1[i], db = d2[i];
        const double nrm = 2.0 * (a * a + b * b);
        double lam = 0.0, r1 = 0.0, r2 = 0.0;
        if (d == Distribution::SpanTX) {
            lam = nrm > 0.0 ? (da * b + db * a) / nrm : 0.0;
            r1 = da - 2.0 * lam * b;
            r2 = db - 2.0 * lam * a;
        } else {
            lam = nrm > 0.0 ? (da * b - db * a) / nrm : 0.0;
            r1 = da - 2.0 * lam * b;
            r2 = db + 2.0 * lam * a;
        }
        rep.params.push_back(t.params[i]);
        rep.coord1.push_back(a);
        rep.coord2.push_back(b);
        rep.lambda_hat.push_back(lam);
        rep.residual1.push_back(r1);
        rep.residual2.push_back(r2);
        sum += lam;
    }
    rep.lambda_mean = sum / double(rep.lambda_hat.size());
    for (double l : rep.lambda_hat) rep.lambda_max_dev = std::max(rep.lambda_max_dev, std::abs(l - rep.lambda_mean));
    rep.lambda_constant = rep.lambda_max_dev <= 1e-5 * (1.0 + std::abs(rep.lambda_mean));
    return rep;
}

AccelerationReport acceleration_decomposition(const Trajectory& t, double horiz_tol) {
    if (t.size() < 7) throw EmptyTrajectory("acceleration_decomposition: need at least 7 samples");
    const std::size_t n = t.size();
    std::vector<Vec4> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = t.points[i].coords();
    const auto v = trajectory_velocities(t);
    const auto acc = t.velocities.empty() ? num::second_derivative(t.params, pts) : num::derivative(t.params, v);
    std::vector<double> al(n), be(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = horizontality_residual(t.points[i], v[i], Distribution::SpanTX, 1e300);
        if (std::abs(r) > horiz_tol) {
            std::ostringstream os;
            os << "sample " << i << " not horizontal: residual " << r;
            throw NotHorizontal(os.str());
        }
        std::tie(al[i], be[i]) = horizontal_coords(t.points[i], v[i], Distribution::SpanTX, 1e300);
    }
    const auto dal = num::derivative(t.params, al);
    const auto dbe = num::derivative(t.params, be);
    AccelerationReport rep;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const FrameCoeffs fc = decompose_in_frame(t.points[i], acc[i], 1e300);
        rep.params.push_back(t.params[i]);
        rep.coeffs.push_back(fc);
        rep.max_a_err = std::max(rep.max_a_err, std::abs(fc.alpha - dal[i]));
        rep.max_b_err = std::max(rep.max_b_err, std::abs(fc.beta - dbe[i]));
        rep.max_omega = std::max(rep.max_omega, std::abs(fc.gamma));
        rep.max_w_err = std::max(rep.max_w_err, std::abs(fc.delta - (al[i] * al[i] - be[i] * be[i])));
    }
    return rep;
}

}  // namespace adsgeo
