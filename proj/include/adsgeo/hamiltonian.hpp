#pragma once

#include <string>
#include <vector>

#include "adsgeo/charts.hpp"
#include "adsgeo/core.hpp"
#include "adsgeo/horizontality.hpp"

namespace adsgeo {

/// Position and covector (xi_k paired with d/dx_k).
struct PhaseState {
    Vec4 x;
    Vec4 xi;
};

/// tau = xi.(xJ), varsigma = xi.(xE1), kappa = xi.(xE2).
struct Momenta {
    double tau = 0.0, varsigma = 0.0, kappa = 0.0;
};
Momenta momenta(const PhaseState& st);

/// 1/2(-tau^2 + varsigma^2) on SpanTX, 1/2(varsigma^2 + kappa^2) on SpanXY.
double hamiltonian_value(const PhaseState& st, Distribution d);

/// Covector xi at p with xi.T = tau, xi.X = varsigma, xi.Y = kappa, xi.N = nu.
Vec4 covector_from_pairings(const PointAdS& p, double tau, double varsigma, double kappa, double nu = 0.0);

/// (xdot, xidot) = (dH/dxi, -dH/dx).
PhaseState vector_field(const PhaseState& st, Distribution d);

enum class Method { RK4Fixed, RK45Adaptive };

struct IntegratorConfig {
    Method method = Method::RK4Fixed;
    double step = 1e-3;  ///< fixed step, or initial step for RK45
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double s0 = 0.0;
    double s1 = 1.0;
    int record_every = 1;
    double min_step = 1e-14;
    double manifold_tol = kManifoldTol;  ///< check on the initial point
    bool strict = false;                 ///< throw DiagnosticBreach past strict_bound
    double strict_bound = 1e-6;

    void validate() const;
};

/// Flow of the Cartesian Hamiltonian system. Diagnostics per sample:
/// "H", "H_drift", "manifold_residual", "horiz_residual", "hcoord1", "hcoord2"
/// (tau,varsigma on SpanTX; varsigma,kappa on SpanXY). Velocities are the
/// exact right-hand side at each sample.
Trajectory integrate(const PhaseState& state0, Distribution d, const IntegratorConfig& cfg);

// ─── chart systems ──────────────────────────────────────────────────────────

/// Phase point of a local chart: coordinates and conjugate momenta
/// (p_phi, xi1, xi2). xi1, xi2 are conserved.
struct ChartPhase {
    LocalChart chart = LocalChart::Timelike;
    double phi = 0.0, chi1 = 0.0, chi2 = 0.0;
    double p_phi = 0.0, xi1 = 0.0, xi2 = 0.0;

    LocalChartPoint point() const { return {chart, phi, chi1, chi2}; }
};

/// Timelike: 1/2(-p^2 + (xi1 tan phi + xi2 cot phi)^2)
/// Spacelike: 1/2(p^2 - (xi1 tanh phi - xi2 coth phi)^2)
/// SubRiem: 1/2(p^2 + (xi2 coth phi - xi1 tanh phi)^2)
double chart_hamiltonian(const ChartPhase& z);

/// (phidot, chi1dot, chi2dot, pdot).
std::array<double, 4> chart_vector_field(const ChartPhase& z);

struct ChartTrajectory {
    std::vector<double> params;
    std::vector<ChartPhase> states;
    std::vector<double> energy;
};

/// Throws ChartSingularity when the flow approaches phi with |sin phi| (or
/// |sinh phi|) below `guard` while xi2 != 0, or |cos phi| below `guard` on
/// the timelike chart.
ChartTrajectory integrate_chart(const ChartPhase& init, const IntegratorConfig& cfg,
                                double guard = 1e-8);

/// Cartesian phase state of a chart phase point.
PhaseState chart_phase_to_cartesian(const ChartPhase& z);

// ─── Euler-Lagrange verification ────────────────────────────────────────────

struct EulerLagrangeReport {
    std::vector<double> params;      ///< interior samples used
    std::vector<double> coord1, coord2;  ///< (alpha,beta) or (beta,gamma)
    std::vector<double> lambda_hat;
    std::vector<double> residual1, residual2;
    double lambda_mean = 0.0;
    double lambda_max_dev = 0.0;
    bool lambda_constant = false;
    double speed_drift = 0.0;  ///< max |q(s) - q(s0)| for q = -a^2+b^2 or b^2+c^2
};

/// SpanTX: alpha' = 2 lambda beta, beta' = 2 lambda alpha.
/// SpanXY: beta' = 2 lambda gamma, gamma' = -2 lambda beta.
/// Throws NotHorizontal if any sample exceeds `horiz_tol`. Two samples at
/// each end are dropped (finite-difference stencil width).
EulerLagrangeReport euler_lagrange_residual(const Trajectory& t, Distribution d,
                                            double horiz_tol = 1e-6);

struct AccelerationReport {
    std::vector<double> params;
    std::vector<FrameCoeffs> coeffs;  ///< inner products of c'' with T, X, Y, N
    double max_a_err = 0.0;           ///< |<c'',T> - alpha'|
    double max_b_err = 0.0;           ///< |<c'',X> - beta'|
    double max_omega = 0.0;           ///< |<c'',Y>|
    double max_w_err = 0.0;           ///< |<c'',N> - (alpha^2 - beta^2)|
};

/// Frame decomposition of the acceleration of a horizontal SpanTX curve.
AccelerationReport acceleration_decomposition(const Trajectory& t, double horiz_tol = 1e-6);

}  // namespace adsgeo
