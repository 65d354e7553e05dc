#include "adsgeo/horizontality.hpp"

#include <cmath>
#include <stdexcept>

#include "adsgeo/numerics.hpp"

namespace adsgeo {

const char* to_string(Distribution d) { return d == Distribution::SpanTX ? "tx" : "xy"; }

const char* to_string(const CausalClass& c) {
    switch (c.kind) {
        case CausalClass::Kind::Timelike:
            return c.future_directed ? "timelike-future" : "timelike-past";
        case CausalClass::Kind::Spacelike: return "spacelike";
        case CausalClass::Kind::Lightlike: return "lightlike";
    }
    return "unknown";
}

void Trajectory::validate(double tol) const {
    const std::size_t n = params.size();
    if (points.size() != n) throw std::invalid_argument("trajectory: points/params length mismatch");
    if (!velocities.empty() && velocities.size() != n)
        throw std::invalid_argument("trajectory: velocities length mismatch");
    if (!momenta.empty() && momenta.size() != n)
        throw std::invalid_argument("trajectory: momenta length mismatch");
    for (const auto& [k, v] : diagnostics)
        if (v.size() != n) throw std::invalid_argument("trajectory: diagnostic '" + k + "' length mismatch");
    for (std::size_t i = 1; i < n; ++i)
        if (!(params[i] > params[i - 1]))
            throw std::invalid_argument("trajectory: params not strictly increasing");
    for (const auto& p : points) require_on_manifold(p.coords(), tol);
}

double horizontality_residual(const PointAdS& p, const Vec4& v, Distribution d, double tol) {
    require_on_manifold(p.coords(), tol);
    const Vec4& x = p.coords();
    return d == Distribution::SpanTX ? minkowski_inner(field_Y(x), v)
                                     : minkowski_inner(field_T(x), v);
}

std::pair<double, double> horizontal_coords(const PointAdS& p, const Vec4& v, Distribution d,
                                            double tol) {
    require_on_manifold(p.coords(), tol);
    const Vec4& x = p.coords();
    if (d == Distribution::SpanTX) return {minkowski_inner(v, field_T(x)), minkowski_inner(v, field_X(x))};
    return {minkowski_inner(v, field_X(x)), minkowski_inner(v, field_Y(x))};
}

double contact_form(const PointAdS& p, const Vec4& v, Distribution d) {
    const Vec4& x = p.coords();
    return d == Distribution::SpanTX ? minkowski_inner(field_Y(x), v)
                                     : -minkowski_inner(field_T(x), v);
}

CausalClass classify(const PointAdS& p, const Vec4& v, double lightlike_tol, double tangent_tol) {
    const Vec4& x = p.coords();
    if (std::abs(minkowski_inner(v, x)) > tangent_tol)
        throw NotTangent("classify: vector is not tangent at p");
    if (v == Vec4{}) return CausalClass::spacelike();
    const double q = minkowski_inner(v, v);
    if (std::abs(q) <= lightlike_tol) return CausalClass::lightlike();
    if (q > 0.0) return CausalClass::spacelike();
    return CausalClass::timelike(minkowski_inner(v, field_T(x)) < 0.0);
}

std::vector<Vec4> trajectory_velocities(const Trajectory& t) {
    if (!t.velocities.empty()) return t.velocities;
    std::vector<Vec4> pts;
    pts.reserve(t.size());
    for (const auto& p : t.points) pts.push_back(p.coords());
    return num::derivative(t.params, pts);
}

double curve_length(const Trajectory& t) {
    if (t.empty()) throw EmptyTrajectory("curve_length: empty trajectory");
    if (t.size() == 1) return 0.0;
    const auto v = trajectory_velocities(t);
    std::vector<double> f(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) f[i] = std::sqrt(std::abs(minkowski_inner(v[i], v[i])));
    return num::simpson(t.params, f);
}

double action(const Trajectory& t, Distribution d) {
    if (t.empty()) throw EmptyTrajectory("action: empty trajectory");
    if (t.size() == 1) return 0.0;
    const auto v = trajectory_velocities(t);
    std::vector<double> f(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto [a, b] = horizontal_coords(t.points[i], v[i], d, 1e300);
        f[i] = d == Distribution::SpanTX ? 0.5 * (-a * a + b * b) : 0.5 * (a * a + b * b);
    }
    return num::simpson(t.params, f);
}

Trajectory translate_curve(const PointAdS& p, const Trajectory& t, double tol) {
    require_on_manifold(p.coords(), tol);
    Trajectory out = t;
    for (std::size_t i = 0; i < t.size(); ++i) out.points[i] = group_mul(p, t.points[i], 1e300);
    for (auto& v : out.velocities) v = left_translate_tangent(p, v);
    // covectors pull back through the inverse transpose; for this group the
    // tangent map preserves <,>, so the transpose-inverse is I M I
    for (auto& xi : out.momenta) {
        const Vec4 w{-xi[0], -xi[1], xi[2], xi[3]};
        Vec4 lw = left_translate_tangent(p, w);
        xi = {-lw[0], -lw[1], lw[2], lw[3]};
    }
    return out;
}

}  // namespace adsgeo
