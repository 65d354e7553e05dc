#pragma once

#include <complex>
#include <vector>

#include "adsgeo/charts.hpp"
#include "adsgeo/hamiltonian.hpp"
#include "adsgeo/horizontality.hpp"

namespace adsgeo {

// ─── constant horizontal coordinates ────────────────────────────────────────

enum class ConstFamily { Timelike, Spacelike, Lightlike, Unit };

struct ConstGeodesicSpec {
    Distribution distribution = Distribution::SpanTX;
    ConstFamily family = ConstFamily::Timelike;  ///< Unit is the only SpanXY family
    double psi = 0.0;
    int alpha_sign = 1;  ///< lightlike only
    int beta_sign = 1;   ///< lightlike only
};

/// SpanTX timelike:  (cos s, -cosh psi sin s, sinh psi sin s, 0)
/// SpanTX spacelike: (cosh s, -sinh psi sinh s, cosh psi sinh s, 0)
/// SpanTX lightlike: (1, -alpha s, beta s, 0)
/// SpanXY:           (cosh s, 0, cos psi sinh s, sin psi sinh s)
PointAdS const_geodesic(const ConstGeodesicSpec& spec, double s);
Vec4 const_geodesic_velocity(const ConstGeodesicSpec& spec, double s);

/// Constant horizontal coordinates of the family.
std::pair<double, double> const_geodesic_coords(const ConstGeodesicSpec& spec);

/// Momentum at the identity whose flow is the family.
PhaseState const_geodesic_initial_state(const ConstGeodesicSpec& spec);

/// SpanTX: (cosh s, 0, 0, -sinh s). SpanXY: (cos s, sin s, 0, 0).
PointAdS vertical_line(Distribution d, double s);
Vec4 vertical_line_velocity(Distribution d, double s);

// ─── Cartesian solutions on SpanTX ─────────────────────────────────────────

struct CartesianGeodesicSpec {
    double A = 0.0, B = 0.0, C = 1.0, D = 1.0;
};

struct FirstIntegralsTX {
    double A = 0.0, B = 0.0, C = 0.0, D = 0.0;
};

/// u1=x1+x4, u2=x1-x4, u3=x2+x3, u4=x2-x3 (psi_k likewise from xi);
/// A=u1psi1+u3psi3, B=u2psi2+u4psi4, C=u2psi3-u4psi1, D=u1psi4-u3psi2.
FirstIntegralsTX first_integrals_tx(const PhaseState& st);

/// Covector at the identity with the given first integrals.
Vec4 initial_covector_tx(const CartesianGeodesicSpec& spec);

/// A-B=2: explicit solution. |A-B|>2: p,q closed forms and u_k by
/// adaptive quadrature. Throws NormalizationError unless CD=1,
/// UnsupportedCase for |A-B|<2 or A-B=-2, DomainError past the pole of q.
PointAdS cartesian_geodesic_tx(const CartesianGeodesicSpec& spec, double s, double quad_tol = 1e-10);

/// Grid version: the u-integrals are accumulated interval by interval.
std::vector<Vec4> cartesian_geodesic_tx_grid(const CartesianGeodesicSpec& spec,
                                             const std::vector<double>& s, double quad_tol = 1e-10);

/// Analytic velocity of the A-B=2 solution.
Vec4 cartesian_geodesic_tx_velocity_ab2(double D, double s);

/// p = u4/u1, q = u3/u2 for |A-B|>2.
double cartesian_tx_p(const CartesianGeodesicSpec& spec, double s);
double cartesian_tx_q(const CartesianGeodesicSpec& spec, double s);

// ─── Cartesian solutions on SpanXY ─────────────────────────────────────────

struct FirstIntegralsXY {
    std::complex<double> CD;  ///< z psi + w phi = C + iD
    std::complex<double> AB;  ///< z conj(phi) + w conj(psi) = A - iB
};

FirstIntegralsXY first_integrals_xy(const PhaseState& st);

/// p = conj(w)/z.
std::complex<double> cartesian_xy_p(double B, double C, double D, double s);

/// Requires C^2+D^2=1 (NormalizationError). B=1 uses the explicit solution
/// z=(1-is)e^{is}, w=s(C+iD)e^{-is}; otherwise quadrature of conj(p)p'/(1-|p|^2).
PointAdS cartesian_geodesic_xy(double B, double C, double D, double s, double quad_tol = 1e-10);

// ─── parametric chart solutions ─────────────────────────────────────────────

struct ParametricGeodesicSpec {
    LocalChart chart = LocalChart::Timelike;
    double phi_dot0 = 1.0;
    double chi2_dot = 0.0;  ///< chi2(s) = chi2_dot s + chi2_0
    double chi2_0 = 0.0;
};

enum class ParametricCase { Equal, Hyperbolic, Trigonometric, Single };

/// Equal: chi2_dot^2 = phi_dot0^2. Hyperbolic/Trigonometric name the shape of
/// sin phi (sinh phi): sinh-type or sin-type growth. Single: spacelike chart.
ParametricCase parametric_case(const ParametricGeodesicSpec& spec, double case_tol = 1e-12);

struct ParametricOptions {
    double case_tol = 1e-12;
    bool throw_on_boundary = false;  ///< CaseBoundary inside the tolerance band
};

/// Closed-form chart point at s. Timelike chart: OutOfDomain once |sin phi|
/// reaches 1.
LocalChartPoint parametric_geodesic(const ParametricGeodesicSpec& spec, double s,
                                    const ParametricOptions& opt = {});

/// Chart phase point at s (coordinates plus conjugate momenta).
ChartPhase parametric_geodesic_state(const ParametricGeodesicSpec& spec, double s,
                                     const ParametricOptions& opt = {});

/// Chart phase point at s=0: phi=chi1=0, chi2=chi2_0, xi2=0.
ChartPhase parametric_initial_state(const ParametricGeodesicSpec& spec);

}  // namespace adsgeo
