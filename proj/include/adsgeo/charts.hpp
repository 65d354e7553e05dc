#pragma once

#include <array>

#include "adsgeo/core.hpp"

namespace adsgeo {

using Vec3 = std::array<double, 3>;

/// Global chart: a=(phi+psi)/2, b=(phi-psi)/2,
/// x = (cos a cosh t, sin a cosh t, cos b sinh t, sin b sinh t).
struct GlobalChartPoint {
    double phi = 0.0, psi = 0.0, theta = 0.0;

    double a() const { return 0.5 * (phi + psi); }
    double b() const { return 0.5 * (phi - psi); }
    static GlobalChartPoint from_ab(double a, double b, double theta) {
        return {a + b, a - b, theta};
    }
};

/// Same point with a, b reduced to (-pi, pi].
GlobalChartPoint normalized(const GlobalChartPoint& c);

/// Wrap an angle to (-pi, pi].
double wrap_angle(double a);

enum class LocalChart {
    Timelike,   ///< (cos phi cosh chi1, sin phi cosh chi2, sin phi sinh chi2, cos phi sinh chi1)
    Spacelike,  ///< (cosh phi cosh chi1, sinh phi sinh chi2, sinh phi cosh chi2, cosh phi sinh chi1)
    SubRiem,    ///< (cos chi1 cosh phi, sin chi1 cosh phi, cos chi2 sinh phi, sin chi2 sinh phi)
};

const char* to_string(LocalChart c);

struct LocalChartPoint {
    LocalChart chart = LocalChart::Timelike;
    double phi = 0.0, chi1 = 0.0, chi2 = 0.0;
};

// ─── maps ───────────────────────────────────────────────────────────────────

Vec4 chart_to_vec(const GlobalChartPoint& c);
PointAdS chart_to_cartesian(const GlobalChartPoint& c);
/// Throws OutOfDomain outside the chart's open domain.
PointAdS chart_to_cartesian(const LocalChartPoint& c);
Vec4 chart_to_vec(const LocalChartPoint& c);

/// Columns d x / d(phi, psi, theta).
std::array<Vec4, 3> chart_jacobian(const GlobalChartPoint& c);
/// Columns d x / d(phi, chi1, chi2).
std::array<Vec4, 3> chart_jacobian(const LocalChartPoint& c);

Vec4 pushforward(const GlobalChartPoint& c, const Vec3& cdot);
Vec4 pushforward(const LocalChartPoint& c, const Vec3& cdot);

/// Inverse of the global chart. theta carries a sign so that b lies in
/// (-pi/2, pi/2]; theta = 0 gives b = 0.
GlobalChartPoint cartesian_to_global_chart(const PointAdS& p, double tol = kManifoldTol);

/// Inverse of a local chart; OutOfDomain if p is outside its image. On the
/// coordinate degeneracy (sin phi = 0 or sinh phi = 0) chi2 is returned as 0.
LocalChartPoint cartesian_to_chart(const PointAdS& p, LocalChart chart, double tol = kManifoldTol);

// ─── horizontality in the global chart ──────────────────────────────────────

/// phidot cos psi sinh 2theta - 2 thetadot sin psi; equals 2<c',Y>.
double chart_horizontality_residual(const GlobalChartPoint& c, const Vec3& cdot);

struct ChartAlphaBeta {
    double alpha = 0.0, beta = 0.0;
};
ChartAlphaBeta chart_horizontal_coords(const GlobalChartPoint& c, const Vec3& cdot);

/// <c',c'> for a horizontal velocity: (-phidot^2 - psidot^2 + 4thetadot^2
/// - 2 phidot psidot cosh 2theta)/4. Throws NotHorizontal when
/// |residual| > tol.
double chart_velocity_norm_sq(const GlobalChartPoint& c, const Vec3& cdot, double tol = 1e-9);

// ─── frames and covectors in the local charts ───────────────────────────────

/// Components of T, X, Y on (d_phi, d_chi1, d_chi2) at c.
struct ChartFrame {
    Vec3 T, X, Y;
};
ChartFrame chart_frame(const LocalChartPoint& c);

/// Frame pairings (h_T, h_X, h_Y) of the chart covector (p_phi, xi1, xi2).
/// Terms multiplied by xi2 are dropped when xi2 == 0 so that the pairing is
/// defined on the coordinate degeneracy.
Vec3 chart_frame_pairings(const LocalChartPoint& c, const Vec3& momentum);

/// Cartesian covector with the same frame pairings and xi.x = 0.
Vec4 chart_covector_to_cartesian(const LocalChartPoint& c, const Vec3& momentum);

}  // namespace adsgeo
