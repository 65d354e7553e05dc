#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace adsgeo::num {

/// True if the grid spacing is constant to relative tolerance `rtol`.
bool is_uniform(const std::vector<double>& s, double rtol = 1e-9);

/// Composite Simpson on a (possibly non-uniform) grid. An odd trailing
/// interval is closed with the three-point rule over the last interval only.
double simpson(const std::vector<double>& s, const std::vector<double>& f);

/// Running integral from s[0] to each s[i], same accuracy as `simpson`.
std::vector<double> cumulative_simpson(const std::vector<double>& s, const std::vector<double>& f);

/// d/ds of samples. 4th-order central differences in the interior of a
/// uniform grid, 2nd-order one-sided at the two ends (and next to them).
/// Non-uniform grids fall back to 3-point Lagrange weights.
template <class T>
std::vector<T> derivative(const std::vector<double>& s, const std::vector<T>& f);

/// Second derivative: central 5-point stencil, 2nd-order one-sided near ends.
template <class T>
std::vector<T> second_derivative(const std::vector<double>& s, const std::vector<T>& f);

/// Adaptive Gauss-Kronrod (15 point) integral of f over [a,b].
double gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-10, unsigned max_depth = 15);

/// Least-squares line y = a + b s. Returns {a, b, max |residual|}.
struct LineFit {
    double intercept = 0.0, slope = 0.0, max_residual = 0.0;
};
LineFit fit_line(const std::vector<double>& s, const std::vector<double>& y);

/// Unit-spaced grid of n points on [a,b].
std::vector<double> linspace(double a, double b, std::size_t n);

}  // namespace adsgeo::num

#include "adsgeo/numerics_impl.hpp"
