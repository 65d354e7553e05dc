#include "adsgeo/geodesics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "adsgeo/numerics.hpp"

namespace adsgeo {

using cd = std::complex<double>;

namespace {
constexpr cd kI{0.0, 1.0};

double sgn(double v) { return v < 0.0 ? -1.0 : 1.0; }

cd expm1c(cd z) { return 2.0 * std::exp(0.5 * z) * std::sinh(0.5 * z); }
}  // namespace

// ─── constant horizontal coordinates ────────────────────────────────────────

PointAdS const_geodesic(const ConstGeodesicSpec& sp, double s) {
    const double ps = sp.psi;
    if (sp.distribution == Distribution::SpanXY)
        return PointAdS::unchecked(
            {std::cosh(s), 0.0, std::cos(ps) * std::sinh(s), std::sin(ps) * std::sinh(s)});
    switch (sp.family) {
        case ConstFamily::Timelike:
            return PointAdS::unchecked(
                {std::cos(s), -std::cosh(ps) * std::sin(s), std::sinh(ps) * std::sin(s), 0.0});
        case ConstFamily::Spacelike:
            return PointAdS::unchecked(
                {std::cosh(s), -std::sinh(ps) * std::sinh(s), std::cosh(ps) * std::sinh(s), 0.0});
        case ConstFamily::Lightlike:
            return PointAdS::unchecked({1.0, -double(sp.alpha_sign) * s, double(sp.beta_sign) * s, 0.0});
        case ConstFamily::Unit: break;
    }
    throw std::invalid_argument("const_geodesic: family not available on SpanTX");
}

Vec4 const_geodesic_velocity(const ConstGeodesicSpec& sp, double s) {
    const double ps = sp.psi;
    if (sp.distribution == Distribution::SpanXY)
        return {std::sinh(s), 0.0, std::cos(ps) * std::cosh(s), std::sin(ps) * std::cosh(s)};
    switch (sp.family) {
        case ConstFamily::Timelike:
            return {-std::sin(s), -std::cosh(ps) * std::cos(s), std::sinh(ps) * std::cos(s), 0.0};
        case ConstFamily::Spacelike:
            return {std::sinh(s), -std::sinh(ps) * std::cosh(s), std::cosh(ps) * std::cosh(s), 0.0};
        case ConstFamily::Lightlike:
            return {0.0, -double(sp.alpha_sign), double(sp.beta_sign), 0.0};
        case ConstFamily::Unit: break;
    }
    throw std::invalid_argument("const_geodesic: family not available on SpanTX");
}

std::pair<double, double> const_geodesic_coords(const ConstGeodesicSpec& sp) {
    const double ps = sp.psi;
    if (sp.distribution == Distribution::SpanXY) return {std::cos(ps), std::sin(ps)};
    switch (sp.family) {
        case ConstFamily::Timelike: return {std::cosh(ps), std::sinh(ps)};
        case ConstFamily::Spacelike: return {std::sinh(ps), std::cosh(ps)};
        case ConstFamily::Lightlike: return {double(sp.alpha_sign), double(sp.beta_sign)};
        case ConstFamily::Unit: break;
    }
    throw std::invalid_argument("const_geodesic: family not available on SpanTX");
}

PhaseState const_geodesic_initial_state(const ConstGeodesicSpec& sp) {
    const auto [h1, h2] = const_geodesic_coords(sp);
    if (sp.distribution == Distribution::SpanTX) return {{1, 0, 0, 0}, {0.0, h1, h2, 0.0}};
    return {{1, 0, 0, 0}, {0.0, 0.0, h1, h2}};
}

PointAdS vertical_line(Distribution d, double s) {
    if (d == Distribution::SpanTX) return PointAdS::unchecked({std::cosh(s), 0.0, 0.0, -std::sinh(s)});
    return PointAdS::unchecked({std::cos(s), std::sin(s), 0.0, 0.0});
}

Vec4 vertical_line_velocity(Distribution d, double s) {
    if (d == Distribution::SpanTX) return {std::sinh(s), 0.0, 0.0, -std::cosh(s)};
    return {-std::sin(s), std::cos(s), 0.0, 0.0};
}

// ─── Cartesian SpanTX ──────────────────────────────────────────────────────

FirstIntegralsTX first_integrals_tx(const PhaseState& st) {
    const Vec4& x = st.x;
    const Vec4& k = st.xi;
    const double u1 = x[0] + x[3], u2 = x[0] - x[3], u3 = x[1] + x[2], u4 = x[1] - x[2];
    const double p1 = k[0] + k[3], p2 = k[0] - k[3], p3 = k[1] + k[2], p4 = k[1] - k[2];
    return {u1 * p1 + u3 * p3, u2 * p2 + u4 * p4, u2 * p3 - u4 * p1, u1 * p4 - u3 * p2};
}

Vec4 initial_covector_tx(const CartesianGeodesicSpec& sp) {
    return {0.5 * (sp.A + sp.B), 0.5 * (sp.C + sp.D), 0.5 * (sp.C - sp.D), 0.5 * (sp.A - sp.B)};
}

namespace {

enum class TxCase { AB2, General };

TxCase tx_case(const CartesianGeodesicSpec& sp) {
    if (std::abs(sp.C * sp.D - 1.0) > 1e-10) {
        std::ostringstream os;
        os << "Cartesian SpanTX solutions need CD=1, got " << sp.C * sp.D;
        throw NormalizationError(os.str());
    }
    const double m = sp.A - sp.B;
    if (std::abs(m - 2.0) <= 1e-12) return TxCase::AB2;
    if (std::abs(m) <= 2.0 + 1e-12)
        throw UnsupportedCase("Cartesian SpanTX: closed forms given only for A-B=2 and |A-B|>2");
    return TxCase::General;
}

struct PQ {
    double p, q, dp, dq;
};

PQ pq_at(const CartesianGeodesicSpec& sp, double s) {
    const double m = sp.A - sp.B, D = sp.D, C = sp.C;
    const double r = std::sqrt(m * m - 4.0);
    const double E = std::expm1(-s * r);
    const double den_p = 2.0 * r - (m - r) * E;
    const double den_q = 2.0 * r + (m + r) * E;
    PQ o;
    o.p = (2.0 / D) * E / den_p;
    o.q = 2.0 * D * E / den_q;
    o.dp = -(D * o.p * o.p + m * o.p + 1.0 / D);
    o.dq = -(C * o.q * o.q - m * o.q + 1.0 / C);
    return o;
}

void check_poles(const CartesianGeodesicSpec& sp, double s) {
    const double m = sp.A - sp.B;
    const double r = std::sqrt(m * m - 4.0);
    const double E = std::expm1(-s * r);
    const double den_p = 2.0 * r - (m - r) * E;
    const double den_q = 2.0 * r + (m + r) * E;
    if (!(den_p > 0.0) || !(den_q > 0.0)) {
        std::ostringstream os;
        os << "Cartesian SpanTX: s=" << s << " lies past the pole of p or q";
        throw DomainError(os.str());
    }
}

Vec4 from_u(double u1, double u2, double u3, double u4) {
    return {0.5 * (u1 + u2), 0.5 * (u3 + u4), 0.5 * (u3 - u4), 0.5 * (u1 - u2)};
}

// log u1 and log u2 increments over [a,b]
std::pair<double, double> log_u_increment(const CartesianGeodesicSpec& sp, double a, double b,
                                          double tol) {
    if (a == b) return {0.0, 0.0};
    const auto f1 = [&](double s) {
        const PQ v = pq_at(sp, s);
        return -v.dp * v.q / (v.p * v.q + 1.0);
    };
    const auto f2 = [&](double s) {
        const PQ v = pq_at(sp, s);
        return -v.dq * v.p / (v.p * v.q + 1.0);
    };
    const double lo = std::min(a, b), hi = std::max(a, b), sg = b >= a ? 1.0 : -1.0;
    const double i1 = num::gauss_kronrod(f1, lo, hi, tol);
    const double i2 = num::gauss_kronrod(f2, lo, hi, tol);
    if (!std::isfinite(i1) || !std::isfinite(i2))
        throw DomainError("Cartesian SpanTX: u-integral diverged (pq+1 vanished)");
    return {sg * i1, sg * i2};
}

Vec4 general_point(const CartesianGeodesicSpec& sp, double s, double l1, double l2) {
    const PQ v = pq_at(sp, s);
    const double u1 = std::exp(l1), u2 = std::exp(l2);
    return from_u(u1, u2, v.q * u2, v.p * u1);
}

}  // namespace

Vec4 cartesian_geodesic_tx_velocity_ab2(double D, double s) {
    const double ep = D * std::exp(s), em = std::exp(-s) / D;
    return {-s * std::cosh(s), -0.5 * (ep + em) - 0.5 * s * (ep - em), -0.5 * (ep - em) - 0.5 * s * (ep + em),
            s * std::sinh(s)};
}

double cartesian_tx_p(const CartesianGeodesicSpec& sp, double s) {
    if (tx_case(sp) != TxCase::General) throw UnsupportedCase("p,q defined for |A-B|>2");
    return pq_at(sp, s).p;
}
double cartesian_tx_q(const CartesianGeodesicSpec& sp, double s) {
    if (tx_case(sp) != TxCase::General) throw UnsupportedCase("p,q defined for |A-B|>2");
    return pq_at(sp, s).q;
}

PointAdS cartesian_geodesic_tx(const CartesianGeodesicSpec& sp, double s, double quad_tol) {
    if (tx_case(sp) == TxCase::AB2) {
        const double D = sp.D, ep = D * std::exp(s), em = std::exp(-s) / D;
        return PointAdS::unchecked({std::cosh(s) - s * std::sinh(s), -0.5 * s * (ep + em),
                                    -0.5 * s * (ep - em), -std::sinh(s) + s * std::cosh(s)});
    }
    check_poles(sp, s);
    const auto [l1, l2] = log_u_increment(sp, 0.0, s, quad_tol);
    return PointAdS::unchecked(general_point(sp, s, l1, l2));
}

std::vector<Vec4> cartesian_geodesic_tx_grid(const CartesianGeodesicSpec& sp, const std::vector<double>& s,
                                             double quad_tol) {
    std::vector<Vec4> out;
    out.reserve(s.size());
    if (tx_case(sp) == TxCase::AB2) {
        for (double v : s) out.push_back(cartesian_geodesic_tx(sp, v).coords());
        return out;
    }
    double l1 = 0.0, l2 = 0.0, prev = 0.0;
    for (double v : s) {
        check_poles(sp, v);
        const auto [d1, d2] = log_u_increment(sp, prev, v, quad_tol);
        l1 += d1;
        l2 += d2;
        prev = v;
        out.push_back(general_point(sp, v, l1, l2));
    }
    return out;
}

// ─── Cartesian SpanXY ──────────────────────────────────────────────────────

FirstIntegralsXY first_integrals_xy(const PhaseState& st) {
    const cd z{st.x[0], st.x[1]}, w{st.x[2], st.x[3]};
    const cd ph{st.xi[0], st.xi[1]}, ps{st.xi[2], st.xi[3]};
    return {z * ps + w * ph, z * std::conj(ph) + w * std::conj(ps)};
}

namespace {

void check_xy_norm(double C, double D) {
    if (std::abs(C * C + D * D - 1.0) > 1e-10) {
        std::ostringstream os;
        os << "Cartesian SpanXY solutions need C^2+D^2=1, got " << C * C + D * D;
        throw NormalizationError(os.str());
    }
}

std::pair<cd, cd> xy_p_dp(double B, double C, double D, double s) {
    const cd K{C, D}, Kb{C, -D};
    cd p;
    const double one_m_b2 = 1.0 - B * B;
    if (one_m_b2 == 0.0) {
        p = Kb * s / (1.0 - kI * B * s);
    } else {
        const cd r = std::sqrt(cd{one_m_b2, 0.0});
        const cd E = expm1c(-2.0 * r * s);
        p = -Kb * E / (r * (2.0 + E) + kI * B * E);
    }
    const cd dp = Kb + 2.0 * kI * B * p - K * p * p;
    return {p, dp};
}

}  // namespace

cd cartesian_xy_p(double B, double C, double D, double s) { return xy_p_dp(B, C, D, s).first; }

PointAdS cartesian_geodesic_xy(double B, double C, double D, double s, double quad_tol) {
    check_xy_norm(C, D);
    if (B == 1.0) {
        const cd z = (1.0 - kI * s) * std::exp(kI * s);
        const cd w = s * cd{C, D} * std::exp(-kI * s);
        return PointAdS::unchecked({z.real(), z.imag(), w.real(), w.imag()});
    }
    const auto integrand = [&](double t) {
        const auto [p, dp] = xy_p_dp(B, C, D, t);
        return std::conj(p) * dp / (1.0 - std::norm(p));
    };
    const double lo = std::min(0.0, s), hi = std::max(0.0, s), sg = s >= 0.0 ? 1.0 : -1.0;
    const double re = num::gauss_kronrod([&](double t) { return integrand(t).real(); }, lo, hi, quad_tol);
    const double im = num::gauss_kronrod([&](double t) { return integrand(t).imag(); }, lo, hi, quad_tol);
    const cd z = std::exp(sg * cd{re, im});
    const cd p = xy_p_dp(B, C, D, s).first;
    const cd w = std::conj(p) * std::conj(z);
    return PointAdS::unchecked({z.real(), z.imag(), w.real(), w.imag()});
}

// ─── parametric chart solutions ─────────────────────────────────────────────

namespace {

double xi1_of(const ParametricGeodesicSpec& sp) {
    return sp.chart == LocalChart::SubRiem ? -sp.chi2_dot : sp.chi2_dot;
}

// atan(A tan x) continued across x = pi/2 + n pi
double unwrapped_atan_tan(double x, double A) {
    const double c = std::cos(x), s = std::sin(x);
    return x + std::atan2((A - 1.0) * s * c, c * c + A * s * s);
}

struct ParamEval {
    double g, dg, chi1;  // g = sin phi (timelike) or sinh phi
};

ParamEval eval_param(const ParametricGeodesicSpec& sp, double s, const ParametricOptions& opt) {
    const double c = sp.phi_dot0;
    if (c == 0.0 || !std::isfinite(c)) throw DomainError("parametric geodesic: phi_dot0 must be nonzero");
    const double x1 = xi1_of(sp), ax = std::abs(x1), sx = sgn(x1);
    const double k = x1 * x1 - c * c;
    const bool equal = std::abs(k) <= opt.case_tol * std::max(1.0, c * c);
    if (equal && k != 0.0 && opt.throw_on_boundary) {
        std::ostringstream os;
        os << "parametric geodesic: chi2_dot^2 - phi_dot0^2 = " << k << " inside the case boundary band";
        throw CaseBoundary(os.str());
    }
    ParamEval e{};
    switch (sp.chart) {
        case LocalChart::Timelike:
            if (equal) {
                e.g = c * s;
                e.dg = c;
                if (std::abs(e.g) < 1.0) e.chi1 = -x1 * s + (x1 / c) * std::atanh(c * s);
            } else if (k > 0.0) {
                const double r = std::sqrt(k);
                e.g = c / r * std::sinh(r * s);
                e.dg = c * std::cosh(r * s);
                if (std::abs(e.g) < 1.0) e.chi1 = -x1 * s + sx * std::atanh(ax / r * std::tanh(r * s));
            } else {
                const double b = std::sqrt(-k);
                e.g = c / b * std::sin(b * s);
                e.dg = c * std::cos(b * s);
                if (std::abs(e.g) < 1.0) e.chi1 = -x1 * s + sx * std::atanh(ax / b * std::tan(b * s));
            }
            if (!(std::abs(e.g) < 1.0)) {
                std::ostringstream os;
                os << "timelike parametric geodesic leaves the chart (|sin phi| >= 1) at s=" << s;
                throw OutOfDomain(os.str());
            }
            return e;
        case LocalChart::Spacelike: {
            const double m = std::sqrt(c * c + x1 * x1);
            e.g = c / m * std::sinh(m * s);
            e.dg = c * std::cosh(m * s);
            e.chi1 = -x1 * s + sx * std::atanh(ax / m * std::tanh(m * s));
            return e;
        }
        case LocalChart::SubRiem:
            if (equal) {
                e.g = c * s;
                e.dg = c;
                e.chi1 = x1 * s - (x1 / c) * std::atan(c * s);
            } else if (k > 0.0) {
                const double b = std::sqrt(k);
                e.g = c / b * std::sin(b * s);
                e.dg = c * std::cos(b * s);
                e.chi1 = x1 * s - sx * unwrapped_atan_tan(b * s, ax / b);
            } else {
                const double a = std::sqrt(-k);
                e.g = c / a * std::sinh(a * s);
                e.dg = c * std::cosh(a * s);
                e.chi1 = x1 * s - sx * std::atan(ax / a * std::tanh(a * s));
            }
            return e;
    }
    return e;
}

}  // namespace

ParametricCase parametric_case(const ParametricGeodesicSpec& sp, double case_tol) {
    if (sp.chart == LocalChart::Spacelike) return ParametricCase::Single;
    const double c = sp.phi_dot0, x1 = xi1_of(sp);
    const double k = x1 * x1 - c * c;
    if (std::abs(k) <= case_tol * std::max(1.0, c * c)) return ParametricCase::Equal;
    const bool sinh_type = sp.chart == LocalChart::Timelike ? k > 0.0 : k < 0.0;
    return sinh_type ? ParametricCase::Hyperbolic : ParametricCase::Trigonometric;
}

LocalChartPoint parametric_geodesic(const ParametricGeodesicSpec& sp, double s, const ParametricOptions& opt) {
    const ParamEval e = eval_param(sp, s, opt);
    const double phi = sp.chart == LocalChart::Timelike ? std::asin(e.g) : std::asinh(e.g);
    return {sp.chart, phi, e.chi1, sp.chi2_dot * s + sp.chi2_0};
}

ChartPhase parametric_geodesic_state(const ParametricGeodesicSpec& sp, double s, const ParametricOptions& opt) {
    const ParamEval e = eval_param(sp, s, opt);
    ChartPhase z;
    z.chart = sp.chart;
    z.xi1 = xi1_of(sp);
    z.xi2 = 0.0;
    z.chi1 = e.chi1;
    z.chi2 = sp.chi2_dot * s + sp.chi2_0;
    if (sp.chart == LocalChart::Timelike) {
        z.phi = std::asin(e.g);
        z.p_phi = -e.dg / std::cos(z.phi);
    } else {
        z.phi = std::asinh(e.g);
        z.p_phi = e.dg / std::cosh(z.phi);
    }
    return z;
}

ChartPhase parametric_initial_state(const ParametricGeodesicSpec& sp) {
    ChartPhase z;
    z.chart = sp.chart;
    z.chi2 = sp.chi2_0;
    z.xi1 = xi1_of(sp);
    z.p_phi = sp.chart == LocalChart::Timelike ? -sp.phi_dot0 : sp.phi_dot0;
    return z;
}

}  // namespace adsgeo
