#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace adsgeo::ode {

template <std::size_t N>
using State = std::array<double, N>;

template <std::size_t N>
State<N> axpy(const State<N>& y, double h, const State<N>& k) {
    State<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = y[i] + h * k[i];
    return r;
}

/// Increment h/6 (k1 + 2k2 + 2k3 + k4) of the classical fourth-order Runge-Kutta step.
template <std::size_t N, class F>
State<N> rk4_increment(const F& f, double s, const State<N>& y, double h) {
    const State<N> k1 = f(s, y);
    const State<N> k2 = f(s + 0.5 * h, axpy(y, 0.5 * h, k1));
    const State<N> k3 = f(s + 0.5 * h, axpy(y, 0.5 * h, k2));
    const State<N> k4 = f(s + h, axpy(y, h, k3));
    State<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return r;
}

/// y += dy with Kahan compensation carried in c.
template <std::size_t N>
void compensated_add(State<N>& y, State<N>& c, const State<N>& dy) {
    for (std::size_t i = 0; i < N; ++i) {
        const double a = dy[i] - c[i];
        const double t = y[i] + a;
        c[i] = (t - y[i]) - a;
        y[i] = t;
    }
}

/// Dormand-Prince 5(4) step. Returns the 5th-order solution and writes the
/// scaled error norm (<= 1 means accept) to `err`.
template <std::size_t N, class F>
State<N> dp45_step(const F& f, double s, const State<N>& y, double h, double rtol, double atol,
                   double& err) {
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                     a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                     b6 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                     e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    State<N> t;
    const State<N> k1 = f(s, y);
    for (std::size_t i = 0; i < N; ++i) t[i] = y[i] + h * a21 * k1[i];
    const State<N> k2 = f(s + c2 * h, t);
    for (std::size_t i = 0; i < N; ++i) t[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    const State<N> k3 = f(s + c3 * h, t);
    for (std::size_t i = 0; i < N; ++i) t[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    const State<N> k4 = f(s + c4 * h, t);
    for (std::size_t i = 0; i < N; ++i)
        t[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    const State<N> k5 = f(s + c5 * h, t);
    for (std::size_t i = 0; i < N; ++i)
        t[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    const State<N> k6 = f(s + h, t);
    State<N> y5;
    for (std::size_t i = 0; i < N; ++i)
        y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    const State<N> k7 = f(s + h, y5);
    double acc = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
        acc = std::max(acc, std::abs(e) / sc);
    }
    err = acc;
    return y5;
}

}  // namespace adsgeo::ode
