#include "adsgeo/core.hpp"

#include <cmath>
#include <sstream>

namespace adsgeo {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::OffManifold: return "OffManifold";
        case ErrorKind::NotTangent: return "NotTangent";
        case ErrorKind::NotHorizontal: return "NotHorizontal";
        case ErrorKind::EmptyTrajectory: return "EmptyTrajectory";
        case ErrorKind::OutOfDomain: return "OutOfDomain";
        case ErrorKind::BranchAmbiguity: return "BranchAmbiguity";
        case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
        case ErrorKind::ThetaSignLoss: return "ThetaSignLoss";
        case ErrorKind::IncompatiblePair: return "IncompatiblePair";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::UnsupportedCase: return "UnsupportedCase";
        case ErrorKind::NormalizationError: return "NormalizationError";
        case ErrorKind::CaseBoundary: return "CaseBoundary";
        case ErrorKind::StepFailure: return "StepFailure";
        case ErrorKind::DiagnosticBreach: return "DiagnosticBreach";
        case ErrorKind::ChartSingularity: return "ChartSingularity";
    }
    return "Unknown";
}

double max_abs_diff(const Vec4& a, const Vec4& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

void require_on_manifold(const Vec4& x, double tol) {
    for (double v : x.c)
        if (!std::isfinite(v)) throw OffManifold("non-finite coordinate");
    const double r = manifold_residual(x);
    if (std::abs(r) > tol) {
        std::ostringstream os;
        os << "point off manifold: |<x,x>+1| = " << std::abs(r) << " > " << tol;
        throw OffManifold(os.str());
    }
}

PointAdS::PointAdS(const Vec4& x, double tol) : x_(x) { require_on_manifold(x, tol); }

PointAdS group_mul(const PointAdS& p, const PointAdS& q, double tol) {
    require_on_manifold(p.coords(), tol);
    require_on_manifold(q.coords(), tol);
    const Vec4& x = p.coords();
    const Vec4& y = q.coords();
    return PointAdS::unchecked({
        x[0] * y[0] - x[1] * y[1] + x[2] * y[2] + x[3] * y[3],
        x[1] * y[0] + x[0] * y[1] + x[3] * y[2] - x[2] * y[3],
        x[2] * y[0] + x[3] * y[1] + x[0] * y[2] - x[1] * y[3],
        x[3] * y[0] - x[2] * y[1] + x[1] * y[2] + x[0] * y[3],
    });
}

PointAdS group_inverse(const PointAdS& p, double tol) {
    require_on_manifold(p.coords(), tol);
    const Vec4& x = p.coords();
    return PointAdS::unchecked({x[0], -x[1], -x[2], -x[3]});
}

Vec4 left_translate_tangent(const PointAdS& p, const Vec4& v) {
    const Vec4& x = p.coords();
    // columns of (L_p)_* are N, T, X, Y
    return v[0] * x + v[1] * field_T(x) + v[2] * field_X(x) + v[3] * field_Y(x);
}

Frame frame_at(const PointAdS& p, double tol) {
    require_on_manifold(p.coords(), tol);
    const Vec4& x = p.coords();
    return {x, field_T(x), field_X(x), field_Y(x)};
}

FrameCoeffs decompose_in_frame(const PointAdS& p, const Vec4& v, double tol) {
    const Frame f = frame_at(p, tol);
    return {minkowski_inner(v, f.T), minkowski_inner(v, f.X), minkowski_inner(v, f.Y),
            minkowski_inner(v, f.N)};
}

Vec4 reconstruct_from_frame(const PointAdS& p, const FrameCoeffs& c) {
    const Vec4& x = p.coords();
    return -c.alpha * field_T(x) + c.beta * field_X(x) + c.gamma * field_Y(x) - c.delta * x;
}

}  // namespace adsgeo
