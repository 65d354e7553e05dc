#pragma once

// Reference computations written independently of the library.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <random>

namespace oracle {

using V4 = std::array<double, 4>;
using cplx = std::complex<double>;

inline double inner(const V4& a, const V4& b) { return -a[0] * b[0] - a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

inline double max_diff(const V4& a, const V4& b) {
    double m = 0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// SU(1,1): x <-> [[z, w], [conj w, conj z]], z = x1 + i x2, w = x3 + i x4.
inline V4 su11_mul(const V4& x, const V4& y) {
    const cplx z1(x[0], x[1]), w1(x[2], x[3]), z2(y[0], y[1]), w2(y[2], y[3]);
    const cplx z = z1 * z2 + w1 * std::conj(w2), w = z1 * w2 + w1 * std::conj(z2);
    return {z.real(), z.imag(), w.real(), w.imag()};
}

inline V4 su11_inv(const V4& x) { return {x[0], -x[1], -x[2], -x[3]}; }

// Random point from |z|^2 - |w|^2 = 1 with |w| = sinh r.
inline V4 random_point(std::mt19937_64& rng, double rmax = 2.0) {
    std::uniform_real_distribution<double> a(-M_PI, M_PI), r(0.0, rmax);
    const double rr = r(rng), az = a(rng), aw = a(rng);
    return {std::cosh(rr) * std::cos(az), std::cosh(rr) * std::sin(az), std::sinh(rr) * std::cos(aw),
            std::sinh(rr) * std::sin(aw)};
}

// Left-invariant fields by differentiating the group law along one-parameter subgroups
// exp(tJ) = (cos t, sin t, 0, 0), exp(tE1) = (cosh t, 0, sinh t, 0), exp(tE2) = (cosh t, 0, 0, sinh t).
inline V4 field(const V4& x, int which) {
    const double h = 1e-6;
    const auto sub = [&](double t) -> V4 {
        if (which == 0) return {std::cos(t), std::sin(t), 0, 0};
        if (which == 1) return {std::cosh(t), 0, std::sinh(t), 0};
        return {std::cosh(t), 0, 0, std::sinh(t)};
    };
    const V4 p = su11_mul(x, sub(h)), m = su11_mul(x, sub(-h)), p2 = su11_mul(x, sub(2 * h)),
             m2 = su11_mul(x, sub(-2 * h));
    V4 r;
    for (int i = 0; i < 4; ++i) r[i] = (8 * (p[i] - m[i]) - (p2[i] - m2[i])) / (12 * h);
    return r;
}
inline V4 T(const V4& x) { return field(x, 0); }
inline V4 X(const V4& x) { return field(x, 1); }
inline V4 Y(const V4& x) { return field(x, 2); }

// Central difference of a vector function of one variable (4th order).
template <class F>
V4 ddt(const F& f, double s, double h = 1e-4) {
    const V4 a = f(s + h), b = f(s - h), c = f(s + 2 * h), d = f(s - 2 * h);
    V4 r;
    for (int i = 0; i < 4; ++i) r[i] = (8 * (a[i] - b[i]) - (c[i] - d[i])) / (12 * h);
    return r;
}

// Classical RK4 on a generic 8-dimensional system (positions + covector).
using S8 = std::array<double, 8>;
inline S8 rk4(const std::function<S8(const S8&)>& f, S8 y, double s1, std::size_t nsteps) {
    const double h = s1 / double(nsteps);
    for (std::size_t k = 0; k < nsteps; ++k) {
        const auto add = [](const S8& a, const S8& b, double c) {
            S8 r;
            for (int i = 0; i < 8; ++i) r[i] = a[i] + c * b[i];
            return r;
        };
        const S8 k1 = f(y), k2 = f(add(y, k1, h / 2)), k3 = f(add(y, k2, h / 2)), k4 = f(add(y, k3, h));
        for (int i = 0; i < 8; ++i) y[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    }
    return y;
}

// Chart geodesic systems with xi2 = 0; chart 0 timelike, 1 spacelike, 2 sub-Riemannian.
// State (phi, chi1, chi2, p_phi); xi1 is conserved.
//   timelike  H = 1/2(-p^2 + (xi1 tan phi + xi2 cot phi)^2)
//   spacelike H = 1/2(p^2 - (xi1 tanh phi - xi2 coth phi)^2)
//   subriem   H = 1/2(p^2 + (xi2 coth phi - xi1 tanh phi)^2)
// chi2' = dH/dxi2 at xi2 = 0.
using S4 = std::array<double, 4>;
inline S4 chart_rhs(int chart, double xi1, const S4& y) {
    const double phi = y[0], p = y[3];
    switch (chart) {
        case 0: {
            const double t = std::tan(phi), c = std::cos(phi);
            return {-p, xi1 * t * t, xi1, -xi1 * xi1 * t / (c * c)};
        }
        case 1: {
            const double t = std::tanh(phi), c = std::cosh(phi);
            return {p, -xi1 * t * t, xi1, xi1 * xi1 * t / (c * c)};
        }
        default: {
            const double t = std::tanh(phi), c = std::cosh(phi);
            return {p, xi1 * t * t, -xi1, -xi1 * xi1 * t / (c * c)};
        }
    }
}

inline S4 rk4_chart(int chart, double xi1, S4 y, double s1, std::size_t nsteps) {
    const double h = s1 / double(nsteps);
    const auto add = [](S4 a, const S4& b, double c) {
        for (int i = 0; i < 4; ++i) a[i] += c * b[i];
        return a;
    };
    for (std::size_t k = 0; k < nsteps; ++k) {
        const S4 k1 = chart_rhs(chart, xi1, y), k2 = chart_rhs(chart, xi1, add(y, k1, h / 2)),
                 k3 = chart_rhs(chart, xi1, add(y, k2, h / 2)), k4 = chart_rhs(chart, xi1, add(y, k3, h));
        for (int i = 0; i < 4; ++i) y[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    }
    return y;
}

}  // namespace oracle
