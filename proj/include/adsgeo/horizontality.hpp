#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "adsgeo/core.hpp"

namespace adsgeo {

enum class Distribution { SpanTX, SpanXY };

const char* to_string(Distribution d);

inline constexpr double kLightlikeTol = 1e-10;

struct CausalClass {
    enum class Kind { Timelike, Spacelike, Lightlike };
    Kind kind = Kind::Spacelike;
    bool future_directed = false;  ///< meaningful for Timelike only

    static CausalClass timelike(bool future) { return {Kind::Timelike, future}; }
    static CausalClass spacelike() { return {Kind::Spacelike, false}; }
    static CausalClass lightlike() { return {Kind::Lightlike, false}; }
    friend bool operator==(const CausalClass&, const CausalClass&) = default;
};

const char* to_string(const CausalClass& c);

/// Sampled curve. `velocities` and `momenta` are either empty or the same
/// length as `points`. `corners` lists sample indices where a piecewise curve
/// changes segment.
struct Trajectory {
    std::vector<double> params;
    std::vector<PointAdS> points;
    std::vector<Vec4> velocities;
    std::vector<Vec4> momenta;
    std::map<std::string, std::vector<double>> diagnostics;
    std::vector<std::size_t> corners;

    std::size_t size() const { return params.size(); }
    bool empty() const { return params.empty(); }

    /// Throws std::invalid_argument on ragged lists or non-increasing params,
    /// OffManifold on a bad point.
    void validate(double tol = kManifoldTol) const;
};

/// <xE2,v> for SpanTX, <xJ,v> for SpanXY.
double horizontality_residual(const PointAdS& p, const Vec4& v, Distribution d,
                              double tol = kManifoldTol);

/// (alpha,beta) = (<v,T>,<v,X>) for SpanTX, (beta,gamma) = (<v,X>,<v,Y>) for SpanXY.
std::pair<double, double> horizontal_coords(const PointAdS& p, const Vec4& v, Distribution d,
                                            double tol = kManifoldTol);

/// omega = <xE2,dx> on SpanTX, w = -<xJ,dx> on SpanXY.
double contact_form(const PointAdS& p, const Vec4& v, Distribution d);

CausalClass classify(const PointAdS& p, const Vec4& v, double lightlike_tol = kLightlikeTol,
                     double tangent_tol = 1e-9);

/// Stored velocities, or finite-difference velocities of the points.
std::vector<Vec4> trajectory_velocities(const Trajectory& t);

/// Simpson quadrature of |<c',c'>|^{1/2}.
double curve_length(const Trajectory& t);

/// Simpson quadrature of 1/2(-alpha^2+beta^2) or 1/2(beta^2+gamma^2).
double action(const Trajectory& t, Distribution d);

/// Pointwise left translation by p; velocities and momenta are carried along.
Trajectory translate_curve(const PointAdS& p, const Trajectory& t, double tol = kManifoldTol);

}  // namespace adsgeo
