#include "adsgeo/charts.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace adsgeo {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

double sgn(double v) { return v < 0.0 ? -1.0 : 1.0; }

void check_local_domain(const LocalChartPoint& c) {
    auto bad = [&](const char* what) {
        std::ostringstream os;
        os << to_string(c.chart) << " chart: " << what << " (phi=" << c.phi << ", chi1=" << c.chi1
           << ", chi2=" << c.chi2 << ")";
        throw OutOfDomain(os.str());
    };
    if (!std::isfinite(c.phi) || !std::isfinite(c.chi1) || !std::isfinite(c.chi2)) bad("non-finite");
    if (c.chart == LocalChart::Timelike && !(std::abs(c.phi) < kHalfPi)) bad("phi outside (-pi/2,pi/2)");
    if (c.chart == LocalChart::SubRiem &&
        (!(std::abs(c.chi1) < kHalfPi) || !(std::abs(c.chi2) < kHalfPi)))
        bad("chi outside (-pi/2,pi/2)");
}
}  // namespace

const char* to_string(LocalChart c) {
    switch (c) {
        case LocalChart::Timelike: return "timelike";
        case LocalChart::Spacelike: return "spacelike";
        case LocalChart::SubRiem: return "subriem";
    }
    return "unknown";
}

double wrap_angle(double a) {
    double r = std::remainder(a, 2.0 * kPi);
    if (r <= -kPi) r += 2.0 * kPi;
    return r;
}

GlobalChartPoint normalized(const GlobalChartPoint& c) {
    return GlobalChartPoint::from_ab(wrap_angle(c.a()), wrap_angle(c.b()), c.theta);
}

Vec4 chart_to_vec(const GlobalChartPoint& c) {
    const double a = c.a(), b = c.b();
    const double ch = std::cosh(c.theta), sh = std::sinh(c.theta);
    return {std::cos(a) * ch, std::sin(a) * ch, std::cos(b) * sh, std::sin(b) * sh};
}

PointAdS chart_to_cartesian(const GlobalChartPoint& c) { return PointAdS::unchecked(chart_to_vec(c)); }

Vec4 chart_to_vec(const LocalChartPoint& c) {
    const double f = c.phi, u = c.chi1, v = c.chi2;
    switch (c.chart) {
        case LocalChart::Timelike:
            return {std::cos(f) * std::cosh(u), std::sin(f) * std::cosh(v), std::sin(f) * std::sinh(v),
                    std::cos(f) * std::sinh(u)};
        case LocalChart::Spacelike:
            return {std::cosh(f) * std::cosh(u), std::sinh(f) * std::sinh(v),
                    std::sinh(f) * std::cosh(v), std::cosh(f) * std::sinh(u)};
        case LocalChart::SubRiem:
            return {std::cos(u) * std::cosh(f), std::sin(u) * std::cosh(f), std::cos(v) * std::sinh(f),
                    std::sin(v) * std::sinh(f)};
    }
    return {};
}

PointAdS chart_to_cartesian(const LocalChartPoint& c) {
    check_local_domain(c);
    return PointAdS::unchecked(chart_to_vec(c));
}

std::array<Vec4, 3> chart_jacobian(const GlobalChartPoint& c) {
    const double a = c.a(), b = c.b();
    const double ch = std::cosh(c.theta), sh = std::sinh(c.theta);
    const Vec4 da{-std::sin(a) * ch, std::cos(a) * ch, 0.0, 0.0};
    const Vec4 db{0.0, 0.0, -std::sin(b) * sh, std::cos(b) * sh};
    const Vec4 dt{std::cos(a) * sh, std::sin(a) * sh, std::cos(b) * ch, std::sin(b) * ch};
    return {0.5 * (da + db), 0.5 * (da - db), dt};
}

std::array<Vec4, 3> chart_jacobian(const LocalChartPoint& c) {
    const double f = c.phi, u = c.chi1, v = c.chi2;
    switch (c.chart) {
        case LocalChart::Timelike: {
            const double cf = std::cos(f), sf = std::sin(f);
            return {Vec4{-sf * std::cosh(u), cf * std::cosh(v), cf * std::sinh(v), -sf * std::sinh(u)},
                    Vec4{cf * std::sinh(u), 0.0, 0.0, cf * std::cosh(u)},
                    Vec4{0.0, sf * std::sinh(v), sf * std::cosh(v), 0.0}};
        }
        case LocalChart::Spacelike: {
            const double cf = std::cosh(f), sf = std::sinh(f);
            return {Vec4{sf * std::cosh(u), cf * std::sinh(v), cf * std::cosh(v), sf * std::sinh(u)},
                    Vec4{cf * std::sinh(u), 0.0, 0.0, cf * std::cosh(u)},
                    Vec4{0.0, sf * std::cosh(v), sf * std::sinh(v), 0.0}};
        }
        case LocalChart::SubRiem: {
            const double cf = std::cosh(f), sf = std::sinh(f);
            return {Vec4{std::cos(u) * sf, std::sin(u) * sf, std::cos(v) * cf, std::sin(v) * cf},
                    Vec4{-std::sin(u) * cf, std::cos(u) * cf, 0.0, 0.0},
                    Vec4{0.0, 0.0, -std::sin(v) * sf, std::cos(v) * sf}};
        }
    }
    return {};
}

namespace {
template <class C>
Vec4 push(const C& c, const Vec3& d) {
    const auto jac = chart_jacobian(c);
    return d[0] * jac[0] + d[1] * jac[1] + d[2] * jac[2];
}
}  // namespace

Vec4 pushforward(const GlobalChartPoint& c, const Vec3& cdot) { return push(c, cdot); }
Vec4 pushforward(const LocalChartPoint& c, const Vec3& cdot) { return push(c, cdot); }

GlobalChartPoint cartesian_to_global_chart(const PointAdS& p, double tol) {
    require_on_manifold(p.coords(), tol);
    const Vec4& x = p.coords();
    if (std::hypot(x[0], x[1]) == 0.0) throw BranchAmbiguity("x1 = x2 = 0");
    const double a = std::atan2(x[1], x[0]);
    const double r = std::hypot(x[2], x[3]);
    if (r == 0.0) return GlobalChartPoint::from_ab(a, 0.0, 0.0);
    double b = std::atan2(x[3], x[2]);
    double theta = std::asinh(r);
    if (b > kHalfPi || b <= -kHalfPi) {
        theta = -theta;
        b = b > 0.0 ? b - kPi : b + kPi;
    }
    return GlobalChartPoint::from_ab(a, b, theta);
}

LocalChartPoint cartesian_to_chart(const PointAdS& p, LocalChart chart, double tol) {
    require_on_manifold(p.coords(), tol);
    const Vec4& x = p.coords();
    auto out = [&](const char* what) -> LocalChartPoint {
        throw OutOfDomain(std::string(to_string(chart)) + " chart: " + what);
    };
    LocalChartPoint c{chart, 0.0, 0.0, 0.0};
    switch (chart) {
        case LocalChart::Timelike: {
            if (!(x[0] > std::abs(x[3]))) return out("requires x1 > |x4|");
            const double cf = std::sqrt((x[0] - x[3]) * (x[0] + x[3]));
            double s2 = (x[1] - x[2]) * (x[1] + x[2]);
            if (s2 < -tol) return out("requires |x2| >= |x3|");
            s2 = std::max(s2, 0.0);
            const double sf = sgn(x[1]) * std::sqrt(s2);
            c.phi = std::atan2(sf, cf);
            c.chi1 = std::atanh(x[3] / x[0]);
            c.chi2 = s2 > 0.0 ? std::atanh(x[2] / x[1]) : 0.0;
            return c;
        }
        case LocalChart::Spacelike: {
            if (!(x[0] > std::abs(x[3]))) return out("requires x1 > |x4|");
            double s2 = (x[2] - x[1]) * (x[2] + x[1]);
            if (s2 < -tol) return out("requires |x3| >= |x2|");
            s2 = std::max(s2, 0.0);
            c.phi = std::asinh(sgn(x[2]) * std::sqrt(s2));
            c.chi1 = std::atanh(x[3] / x[0]);
            c.chi2 = s2 > 0.0 ? std::atanh(x[1] / x[2]) : 0.0;
            return c;
        }
        case LocalChart::SubRiem: {
            if (!(x[0] > 0.0)) return out("requires x1 > 0");
            const double r = std::hypot(x[2], x[3]);
            if (r > 0.0 && x[2] == 0.0) return out("requires x3 != 0");
            c.chi1 = std::atan(x[1] / x[0]);
            c.phi = std::asinh(sgn(x[2]) * r);
            c.chi2 = r > 0.0 ? std::atan(x[3] / x[2]) : 0.0;
            return c;
        }
    }
    return c;
}

double chart_horizontality_residual(const GlobalChartPoint& c, const Vec3& d) {
    return d[0] * std::cos(c.psi) * std::sinh(2.0 * c.theta) - 2.0 * d[2] * std::sin(c.psi);
}

ChartAlphaBeta chart_horizontal_coords(const GlobalChartPoint& c, const Vec3& d) {
    return {-0.5 * (d[0] * std::cosh(2.0 * c.theta) + d[1]),
            0.5 * (d[0] * std::sin(c.psi) * std::sinh(2.0 * c.theta) + 2.0 * d[2] * std::cos(c.psi))};
}

double chart_velocity_norm_sq(const GlobalChartPoint& c, const Vec3& d, double tol) {
    const double res = chart_horizontality_residual(c, d);
    if (std::abs(res) > tol) {
        std::ostringstream os;
        os << "chart velocity not horizontal: residual " << res;
        throw NotHorizontal(os.str());
    }
    return 0.25 * (-d[0] * d[0] - d[1] * d[1] + 4.0 * d[2] * d[2] -
                   2.0 * d[0] * d[1] * std::cosh(2.0 * c.theta));
}

ChartFrame chart_frame(const LocalChartPoint& c) {
    const double f = c.phi, d = c.chi1 - c.chi2;
    switch (c.chart) {
        case LocalChart::Timelike: {
            const double t = std::tan(f), ct = 1.0 / t;
            return {{std::cosh(d), t * std::sinh(d), ct * std::sinh(d)},
                    {std::sinh(d), t * std::cosh(d), ct * std::cosh(d)},
                    {0.0, 1.0, -1.0}};
        }
        case LocalChart::Spacelike: {
            const double t = std::tanh(f), ct = 1.0 / t;
            return {{std::sinh(d), -t * std::cosh(d), ct * std::cosh(d)},
                    {std::cosh(d), -t * std::sinh(d), ct * std::sinh(d)},
                    {0.0, 1.0, -1.0}};
        }
        case LocalChart::SubRiem: {
            const double t = std::tanh(f), ct = 1.0 / t;
            return {{0.0, 1.0, -1.0},
                    {std::cos(d), -t * std::sin(d), ct * std::sin(d)},
                    {-std::sin(d), -t * std::cos(d), ct * std::cos(d)}};
        }
    }
    return {};
}

Vec3 chart_frame_pairings(const LocalChartPoint& c, const Vec3& m) {
    const ChartFrame fr = chart_frame(c);
    auto pair = [&](const Vec3& v) {
        double s = v[0] * m[0] + v[1] * m[1];
        if (m[2] != 0.0) s += v[2] * m[2];
        return s;
    };
    return {pair(fr.T), pair(fr.X), pair(fr.Y)};
}

Vec4 chart_covector_to_cartesian(const LocalChartPoint& c, const Vec3& m) {
    const Vec3 h = chart_frame_pairings(c, m);
    const Vec4 x = chart_to_vec(c);
    auto lower = [](const Vec4& v) { return Vec4{-v[0], -v[1], v[2], v[3]}; };
    return -h[0] * lower(field_T(x)) + h[1] * lower(field_X(x)) + h[2] * lower(field_Y(x));
}

}  // namespace adsgeo
