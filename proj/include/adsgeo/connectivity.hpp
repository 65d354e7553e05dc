#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "adsgeo/charts.hpp"
#include "adsgeo/horizontality.hpp"

namespace adsgeo {

/// Bridge q on [0,1] with q(0)=q0, q(1)=q1 and integral I.
/// Quadratic (eps = 0): q(u) = q0 + (q1-q0)u + c u(1-u), c = 6(I - (q0+q1)/2).
/// Localized (0 < eps <= 1/2): q(u) = m + (q0-m) b(u/eps) + (q1-m) b((1-u)/eps)
/// with the C2 bump b(t) = (1-t)^3(1+3t) on [0,1], zero beyond.
struct Bridge {
    double q0 = 0.0, q1 = 0.0, c = 0.0;
    double eps = 0.0, m = 0.0;

    double operator()(double u) const;
    double derivative(double u) const;
    /// Integral over [0,u].
    double integral(double u) const;
};

Bridge bridge_function(double q0, double q1, double I);
Bridge localized_bridge(double q0, double q1, double I, double eps);

/// Quadratic: the minimal quadratic bridge only. Adaptive: the quadratic
/// first, then localized bridges of shrinking width while theta would
/// change sign. Samples carry "bridge_eps" (0 for the quadratic).
enum class BridgeMode { Quadratic, Adaptive };

inline constexpr std::size_t kDefaultSamples = 257;

/// Samples of connecting curves carry chart diagnostics "phi", "psi",
/// "theta" and "horiz_residual" (Cartesian, for the relevant distribution).

/// SpanTX connection in the global chart, built from phi linear,
/// psi = arccot q, 2 theta = arcsinh p. The representation of Q is adjusted
/// (b -> b+pi with theta -> -theta, and 2pi shifts) before the construction.
/// Errors: DegenerateConfiguration (equal phi, sin psi = 0 or of opposite
/// signs, theta = 0), ThetaSignLoss (the tanh argument leaves (0,inf)).
Trajectory connect_tx(const GlobalChartPoint& P, const GlobalChartPoint& Q,
                      std::size_t n = kDefaultSamples, BridgeMode mode = BridgeMode::Adaptive);
Trajectory connect_tx(const PointAdS& P, const PointAdS& Q, std::size_t n = kDefaultSamples,
                      BridgeMode mode = BridgeMode::Adaptive);

/// psi in (0,pi) with cot psi = ln(tanh theta1 / tanh theta0) / (phi1 - phi0).
double constant_psi_for(double phi0, double theta0, double phi1, double theta1);

/// SpanTX connection with constant psi. P and Q must share psi and satisfy
/// the cot relation above (IncompatiblePair otherwise); theta0, theta1
/// nonzero of equal sign (DomainError otherwise).
Trajectory connect_tx_constant_psi(const GlobalChartPoint& P, const GlobalChartPoint& Q,
                                   std::size_t n = kDefaultSamples, double tol = 1e-9);

/// psi(s), psi'(s), psi''(s) on [0,1].
using PsiProfile = std::function<std::array<double, 3>(double)>;

/// Cubic Hermite profile from psi0 to psi1 with end slopes m0, m1.
PsiProfile hermite_profile(double psi0, double psi1, double m0, double m1);

/// SpanXY connection: q from the bridge with q(0)=psi'(0)/cosh 2theta0,
/// q(1)=psi'(1)/cosh 2theta1, integral phi0-phi1; p = psi'/q; theta = 1/2
/// arccosh p; phi = phi0 - int q. Negative theta endpoints are rewritten as
/// (phi+pi, psi-pi, -theta). DomainError names the first s with p < 1.
Trajectory connect_xy(const GlobalChartPoint& P, const GlobalChartPoint& Q,
                      std::optional<PsiProfile> profile = std::nullopt,
                      std::size_t n = kDefaultSamples);

/// theta0 = 1/2 arccosh((psi1-psi0)/(phi0-phi1)); IncompatiblePair if the
/// ratio is below 1 or undefined.
double constant_theta_for(double phi0, double psi0, double phi1, double psi1);

/// SpanXY connection at constant theta: psi = -phi cosh 2theta0 + C.
Trajectory connect_xy_constant_theta(const GlobalChartPoint& P, const GlobalChartPoint& Q,
                                     std::size_t n = kDefaultSamples, double tol = 1e-9);

/// Piecewise timelike SpanTX connection between points with equal theta:
/// psi moves to pi/2 + n pi at fixed phi, phi moves at fixed psi, then psi
/// moves to psi1. Zero-length pieces are skipped; `corners` marks joins.
Trajectory connect_piecewise_timelike(const GlobalChartPoint& P, const GlobalChartPoint& Q,
                                      std::size_t n_per_segment = 65, double tol = 1e-12);

/// Parameter reversal s -> 1 - s (velocities negated).
Trajectory reversed(const Trajectory& t);

}  // namespace adsgeo
