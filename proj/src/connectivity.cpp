#include "adsgeo/connectivity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "adsgeo/numerics.hpp"

namespace adsgeo {

namespace {

constexpr double kPi = std::numbers::pi;

double sgn(double v) { return v < 0.0 ? -1.0 : 1.0; }

GlobalChartPoint flip_theta(const GlobalChartPoint& c) { return {c.phi + kPi, c.psi - kPi, -c.theta}; }

struct ChartSamples {
    std::vector<double> s;
    std::vector<Vec3> q, dq;
};

Trajectory assemble(const ChartSamples& cs, Distribution d) {
    Trajectory t;
    t.params = cs.s;
    const std::size_t n = cs.s.size();
    t.points.reserve(n);
    t.velocities.reserve(n);
    auto& phi = t.diagnostics["phi"];
    auto& psi = t.diagnostics["psi"];
    auto& theta = t.diagnostics["theta"];
    auto& hor = t.diagnostics["horiz_residual"];
    for (std::size_t i = 0; i < n; ++i) {
        const GlobalChartPoint c{cs.q[i][0], cs.q[i][1], cs.q[i][2]};
        t.points.push_back(chart_to_cartesian(c));
        t.velocities.push_back(pushforward(c, cs.dq[i]));
        phi.push_back(c.phi);
        psi.push_back(c.psi);
        theta.push_back(c.theta);
        hor.push_back(horizontality_residual(t.points.back(), t.velocities.back(), d, 1e300));
    }
    return t;
}

void require_samples(std::size_t n) {
    if (n < 3) throw std::invalid_argument("connect: need at least 3 samples");
}

}  // namespace

namespace {

double bump(double t) { return t >= 1.0 ? 0.0 : (1.0 - t) * (1.0 - t) * (1.0 - t) * (1.0 + 3.0 * t); }
double bump_d(double t) { return t >= 1.0 ? 0.0 : -12.0 * t * (1.0 - t) * (1.0 - t); }
// integral of the bump over [0, t]; 2/5 for t >= 1
double bump_int(double t) {
    if (t >= 1.0) return 0.4;
    const double t2 = t * t;
    return t - 2.0 * t2 * t + 2.0 * t2 * t2 - 0.6 * t2 * t2 * t;
}

}  // namespace

double Bridge::operator()(double u) const {
    if (eps == 0.0) return q0 + (q1 - q0) * u + c * u * (1.0 - u);
    return m + (q0 - m) * bump(u / eps) + (q1 - m) * bump((1.0 - u) / eps);
}

double Bridge::derivative(double u) const {
    if (eps == 0.0) return (q1 - q0) + c * (1.0 - 2.0 * u);
    return ((q0 - m) * bump_d(u / eps) - (q1 - m) * bump_d((1.0 - u) / eps)) / eps;
}

double Bridge::integral(double u) const {
    if (eps == 0.0) return q0 * u + 0.5 * (q1 - q0) * u * u + c * (0.5 * u * u - u * u * u / 3.0);
    return m * u + (q0 - m) * eps * bump_int(u / eps) + (q1 - m) * eps * (0.4 - bump_int((1.0 - u) / eps));
}

Bridge bridge_function(double q0, double q1, double I) { return {q0, q1, 6.0 * (I - 0.5 * (q0 + q1))}; }

Bridge localized_bridge(double q0, double q1, double I, double eps) {
    if (!(eps > 0.0 && eps <= 0.5)) throw std::invalid_argument("localized_bridge: eps must lie in (0, 1/2]");
    const double m = (I - 0.4 * eps * (q0 + q1)) / (1.0 - 0.8 * eps);
    return {q0, q1, 0.0, eps, m};
}

// ─── SpanTX ─────────────────────────────────────────────────────────────────

Trajectory connect_tx(const GlobalChartPoint& Pin, const GlobalChartPoint& Qin, std::size_t n, BridgeMode mode) {
    require_samples(n);
    GlobalChartPoint P = Pin, Q = Qin;
    if (P.theta == 0.0 || Q.theta == 0.0)
        throw DegenerateConfiguration("connect_tx: theta = 0 at an endpoint");
    if (sgn(P.theta) != sgn(Q.theta)) Q = flip_theta(Q);
    const double sP = std::sin(P.psi), sQ = std::sin(Q.psi);
    if (std::abs(sP) < 1e-14 || std::abs(sQ) < 1e-14)
        throw DegenerateConfiguration("connect_tx: sin psi = 0 at an endpoint");
    if (sgn(sP) != sgn(sQ))
        throw DegenerateConfiguration("connect_tx: sin psi changes sign between the endpoints");
    // bring psi_Q into the same pi-window as psi_P; (phi,psi) ~ (phi-2pi m, psi-2pi m)
    const double jP = std::floor(P.psi / kPi), jQ = std::floor(Q.psi / kPi);
    const double shift = (jQ - jP) * kPi;
    Q.psi -= shift;
    Q.phi -= shift;
    const double k = Q.phi - P.phi;
    if (std::abs(k) < 1e-14) throw DegenerateConfiguration("connect_tx: phi0 = phi1");

    const double sigma = sgn(P.theta);
    const double Z0 = std::asinh(1.0 / std::sinh(std::abs(2.0 * P.theta)));
    const double Z1 = std::asinh(1.0 / std::sinh(std::abs(2.0 * Q.theta)));
    const double q0 = std::cos(P.psi) / sP, q1 = std::cos(Q.psi) / sQ, I = (Z0 - Z1) / k;
    const double offset = jP * kPi;
    const auto s = num::linspace(0.0, 1.0, n);

    // running integral of q on the grid; Simpson is exact for the quadratic
    const auto running = [&](const Bridge& q) {
        if (q.eps == 0.0) {
            std::vector<double> qv(n);
            for (std::size_t i = 0; i < n; ++i) qv[i] = q(s[i]);
            return num::cumulative_simpson(s, qv);
        }
        std::vector<double> Qv(n);
        for (std::size_t i = 0; i < n; ++i) Qv[i] = q.integral(s[i]);
        return Qv;
    };
    // first s where Z = Z0 - k int q leaves (0, inf), or -1
    const auto first_loss = [&](const std::vector<double>& Qv) {
        for (std::size_t i = 0; i < n; ++i)
            if (!(Z0 - k * Qv[i] > 0.0)) return s[i];
        return -1.0;
    };

    Bridge q = bridge_function(q0, q1, I);
    auto Qint = running(q);
    double lost = first_loss(Qint);
    if (lost >= 0.0 && mode == BridgeMode::Adaptive) {
        for (double eps = 0.25; eps >= 1e-6 && lost >= 0.0; eps *= 0.5) {
            q = localized_bridge(q0, q1, I, eps);
            Qint = running(q);
            lost = first_loss(Qint);
        }
    }
    if (lost >= 0.0) {
        std::ostringstream os;
        os << "connect_tx: tanh argument left (0,inf) at s=" << lost << " (theta would change sign)";
        throw ThetaSignLoss(os.str());
    }

    ChartSamples cs;
    cs.s = s;
    for (std::size_t i = 0; i < n; ++i) {
        const double qv = q(s[i]);
        const double Z = Z0 - k * Qint[i];
        const double shz = std::sinh(Z);
        const double p = sigma / shz;
        const double dp = sigma * k * qv * std::cosh(Z) / (shz * shz);
        cs.q.push_back({P.phi + k * s[i], std::atan2(1.0, qv) + offset, 0.5 * std::asinh(p)});
        cs.dq.push_back({k, -q.derivative(s[i]) / (1.0 + qv * qv), 0.5 * dp / std::sqrt(1.0 + p * p)});
    }
    cs.q.back()[0] = Q.phi;
    Trajectory t = assemble(cs, Distribution::SpanTX);
    t.diagnostics["bridge_eps"].assign(n, q.eps);
    return t;
}

Trajectory connect_tx(const PointAdS& P, const PointAdS& Q, std::size_t n, BridgeMode mode) {
    return connect_tx(cartesian_to_global_chart(P), cartesian_to_global_chart(Q), n, mode);
}

double constant_psi_for(double phi0, double theta0, double phi1, double theta1) {
    if (!(theta0 * theta1 > 0.0)) throw DomainError("constant psi: tanh ratio is not positive");
    if (phi0 == phi1) throw DegenerateConfiguration("constant psi: phi0 = phi1");
    const double cot = std::log(std::tanh(theta1) / std::tanh(theta0)) / (phi1 - phi0);
    return std::atan2(1.0, cot);
}

Trajectory connect_tx_constant_psi(const GlobalChartPoint& P, const GlobalChartPoint& Q, std::size_t n,
                                   double tol) {
    require_samples(n);
    const double th0 = P.theta, th1 = Q.theta;
    if (!(th0 * th1 > 0.0)) throw DomainError("connect_tx_constant_psi: tanh ratio is not positive");
    if (P.phi == Q.phi) throw DegenerateConfiguration("connect_tx_constant_psi: phi0 = phi1");
    const double L = std::log(std::tanh(th1) / std::tanh(th0));
    const double cot = L / (Q.phi - P.phi);
    const double psi = P.psi;
    if (std::abs(wrap_angle(P.psi - Q.psi)) > tol)
        throw IncompatiblePair("connect_tx_constant_psi: psi differs between P and Q");
    const double sp = std::sin(psi);
    if (std::abs(sp) < 1e-300 || std::abs(std::cos(psi) / sp - cot) > tol * (1.0 + std::abs(cot))) {
        std::ostringstream os;
        os << "connect_tx_constant_psi: psi=" << psi << " does not satisfy cot psi = " << cot;
        throw IncompatiblePair(os.str());
    }
    ChartSamples cs;
    cs.s = num::linspace(0.0, 1.0, n);
    for (double s : cs.s) {
        if (th0 != th1) {
            const double th = th0 + s * (th1 - th0), dth = th1 - th0;
            const double phi = P.phi + std::log(std::tanh(th) / std::tanh(th0)) / cot;
            const double dphi = dth * 2.0 / std::sinh(2.0 * th) / cot;
            cs.q.push_back({phi, psi, th});
            cs.dq.push_back({dphi, 0.0, dth});
        } else {
            cs.q.push_back({P.phi + s * (Q.phi - P.phi), psi, th0});
            cs.dq.push_back({Q.phi - P.phi, 0.0, 0.0});
        }
    }
    cs.q.back()[0] = Q.phi;
    Trajectory t = assemble(cs, Distribution::SpanTX);
    auto& cr = t.diagnostics["chart_residual"];
    for (std::size_t i = 0; i < n; ++i)
        cr.push_back(chart_horizontality_residual({cs.q[i][0], cs.q[i][1], cs.q[i][2]}, cs.dq[i]));
    return t;
}

// ─── SpanXY ─────────────────────────────────────────────────────────────────

PsiProfile hermite_profile(double psi0, double psi1, double m0, double m1) {
    return [=](double t) -> std::array<double, 3> {
        const double t2 = t * t, t3 = t2 * t;
        const double v = (2 * t3 - 3 * t2 + 1) * psi0 + (t3 - 2 * t2 + t) * m0 + (-2 * t3 + 3 * t2) * psi1 +
                         (t3 - t2) * m1;
        const double d = (6 * t2 - 6 * t) * psi0 + (3 * t2 - 4 * t + 1) * m0 + (-6 * t2 + 6 * t) * psi1 +
                         (3 * t2 - 2 * t) * m1;
        const double dd = (12 * t - 6) * psi0 + (6 * t - 4) * m0 + (-12 * t + 6) * psi1 + (6 * t - 2) * m1;
        return {v, d, dd};
    };
}

Trajectory connect_xy(const GlobalChartPoint& Pin, const GlobalChartPoint& Qin, std::optional<PsiProfile> profile,
                      std::size_t n) {
    require_samples(n);
    GlobalChartPoint P = Pin.theta < 0.0 ? flip_theta(Pin) : Pin;
    GlobalChartPoint Q = Qin.theta < 0.0 ? flip_theta(Qin) : Qin;
    const double delta = P.phi - Q.phi;
    if (!profile) {
        if (P.phi == Q.phi && P.psi == Q.psi && P.theta == Q.theta) {
            ChartSamples cs;
            cs.s = num::linspace(0.0, 1.0, n);
            cs.q.assign(n, {P.phi, P.psi, P.theta});
            cs.dq.assign(n, {0.0, 0.0, 0.0});
            return assemble(cs, Distribution::SpanXY);
        }
        if (delta == 0.0) throw DegenerateConfiguration("connect_xy: phi0 = phi1 needs an explicit profile");
        const double m = sgn(delta) * std::max(std::cosh(2.0 * P.theta), std::cosh(2.0 * Q.theta));
        profile = hermite_profile(P.psi, Q.psi, m, m);
    }
    const auto& prof = *profile;
    const auto e0 = prof(0.0), e1 = prof(1.0);
    if (std::abs(e0[0] - P.psi) > 1e-12 || std::abs(e1[0] - Q.psi) > 1e-12)
        throw std::invalid_argument("connect_xy: profile does not meet psi0, psi1");
    const Bridge q = bridge_function(e0[1] / std::cosh(2.0 * P.theta), e1[1] / std::cosh(2.0 * Q.theta), delta);

    ChartSamples cs;
    cs.s = num::linspace(0.0, 1.0, n);
    std::vector<double> qv(n);
    for (std::size_t i = 0; i < n; ++i) qv[i] = q(cs.s[i]);
    const auto Qint = num::cumulative_simpson(cs.s, qv);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = cs.s[i];
        const auto pr = prof(s);
        const double qq = qv[i], dq = q.derivative(s);
        double p = qq != 0.0 ? pr[1] / qq : -1.0;
        if (!(p >= 1.0 - 1e-12) || !std::isfinite(p)) {
            std::ostringstream os;
            os << "connect_xy: p(s) = psi'/q < 1 at s=" << s << " (p=" << p << ")";
            throw DomainError(os.str());
        }
        p = std::max(p, 1.0);
        const double dp = (pr[2] * qq - pr[1] * dq) / (qq * qq);
        const double dth = p - 1.0 > 1e-14 ? 0.5 * dp / std::sqrt(p * p - 1.0) : 0.0;
        cs.q.push_back({P.phi - Qint[i], pr[0], 0.5 * std::acosh(p)});
        cs.dq.push_back({-qq, pr[1], dth});
    }
    cs.q.back()[0] = Q.phi;
    return assemble(cs, Distribution::SpanXY);
}

double constant_theta_for(double phi0, double psi0, double phi1, double psi1) {
    if (phi0 == phi1) throw IncompatiblePair("constant theta: phi0 = phi1");
    const double R = (psi1 - psi0) / (phi0 - phi1);
    if (!(R >= 1.0)) {
        std::ostringstream os;
        os << "constant theta: (psi1-psi0)/(phi0-phi1) = " << R << " < 1";
        throw IncompatiblePair(os.str());
    }
    return 0.5 * std::acosh(R);
}

Trajectory connect_xy_constant_theta(const GlobalChartPoint& Pin, const GlobalChartPoint& Qin, std::size_t n,
                                     double tol) {
    require_samples(n);
    const GlobalChartPoint P = Pin.theta < 0.0 ? flip_theta(Pin) : Pin;
    const GlobalChartPoint Q = Qin.theta < 0.0 ? flip_theta(Qin) : Qin;
    const double th = constant_theta_for(P.phi, P.psi, Q.phi, Q.psi);
    if (std::abs(P.theta - th) > tol || std::abs(Q.theta - th) > tol) {
        std::ostringstream os;
        os << "connect_xy_constant_theta: endpoints need theta=" << th << ", got " << P.theta << ", " << Q.theta;
        throw IncompatiblePair(os.str());
    }
    const double R = (Q.psi - P.psi) / (P.phi - Q.phi);
    const double C = P.psi + P.phi * R;
    const double dphi = Q.phi - P.phi;
    ChartSamples cs;
    cs.s = num::linspace(0.0, 1.0, n);
    for (double s : cs.s) {
        const double phi = P.phi + s * dphi;
        cs.q.push_back({phi, -phi * R + C, th});
        cs.dq.push_back({dphi, -R * dphi, 0.0});
    }
    cs.q.back() = {Q.phi, Q.psi, th};
    Trajectory t = assemble(cs, Distribution::SpanXY);
    auto& cr = t.diagnostics["chart_residual"];
    for (std::size_t i = 0; i < n; ++i) cr.push_back(cs.dq[i][1] + cs.dq[i][0] * std::cosh(2.0 * th));
    return t;
}

// ─── piecewise timelike ─────────────────────────────────────────────────────

Trajectory connect_piecewise_timelike(const GlobalChartPoint& P, const GlobalChartPoint& Q, std::size_t m,
                                      double tol) {
    require_samples(m);
    if (std::abs(P.theta - Q.theta) > tol)
        throw IncompatiblePair("piecewise timelike connection needs equal theta");
    const double th = P.theta;
    const double psi_star = kPi / 2.0 + kPi * std::round((P.psi - kPi / 2.0) / kPi);
    struct Seg {
        Vec3 a, b;
    };
    std::vector<Seg> segs;
    const Vec3 A{P.phi, P.psi, th}, B{P.phi, psi_star, th}, C{Q.phi, psi_star, th}, D{Q.phi, Q.psi, th};
    if (A != B) segs.push_back({A, B});
    if (B != C) segs.push_back({B, C});
    if (C != D) segs.push_back({C, D});
    if (segs.empty()) throw DegenerateConfiguration("piecewise timelike connection: P = Q");
    ChartSamples cs;
    std::vector<std::size_t> corners;
    const auto u = num::linspace(0.0, 1.0, m);
    for (std::size_t k = 0; k < segs.size(); ++k) {
        const Vec3 d{segs[k].b[0] - segs[k].a[0], segs[k].b[1] - segs[k].a[1], 0.0};
        for (std::size_t i = (k == 0 ? 0 : 1); i < m; ++i) {
            cs.s.push_back(double(k) + u[i]);
            cs.q.push_back({segs[k].a[0] + u[i] * d[0], segs[k].a[1] + u[i] * d[1], th});
            cs.dq.push_back(d);
        }
        if (k + 1 < segs.size()) corners.push_back(cs.s.size() - 1);
    }
    Trajectory t = assemble(cs, Distribution::SpanTX);
    t.corners = corners;
    return t;
}

Trajectory reversed(const Trajectory& t) {
    Trajectory r = t;
    const std::size_t n = t.size();
    if (n == 0) return r;
    const double lo = t.params.front(), hi = t.params.back();
    for (std::size_t i = 0; i < n; ++i) {
        r.params[i] = lo + hi - t.params[n - 1 - i];
        r.points[i] = t.points[n - 1 - i];
    }
    if (!t.velocities.empty())
        for (std::size_t i = 0; i < n; ++i) r.velocities[i] = -t.velocities[n - 1 - i];
    if (!t.momenta.empty())
        for (std::size_t i = 0; i < n; ++i) r.momenta[i] = -t.momenta[n - 1 - i];
    for (auto& [k, v] : r.diagnostics) std::reverse(v.begin(), v.end());
    for (auto& c : r.corners) c = n - 1 - c;
    std::reverse(r.corners.begin(), r.corners.end());
    return r;
}

}  // namespace adsgeo
