#include "adsgeo/numerics.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <stdexcept>

namespace adsgeo::num {

bool is_uniform(const std::vector<double>& s, double rtol) {
    if (s.size() < 3) return true;
    const double h = (s.back() - s.front()) / double(s.size() - 1);
    for (std::size_t i = 1; i < s.size(); ++i)
        if (std::abs((s[i] - s[i - 1]) - h) > rtol * std::abs(h)) return false;
    return true;
}

namespace {

// integral over [x0,x2] of the quadratic through three points
double simpson_pair(double x0, double x1, double x2, double f0, double f1, double f2) {
    const double h0 = x1 - x0, h1 = x2 - x1, H = h0 + h1;
    return H / 6.0 *
           (f0 * (2.0 - h1 / h0) + f1 * H * H / (h0 * h1) + f2 * (2.0 - h0 / h1));
}

// integral over [x1,x2] of the quadratic through (x0,x1,x2)
double last_interval(double x0, double x1, double x2, double f0, double f1, double f2) {
    const double h0 = x1 - x0, h1 = x2 - x1;
    const double w2 = h1 * (2.0 * h1 + 3.0 * h0) / (6.0 * (h0 + h1));
    const double w1 = h1 * (h1 + 3.0 * h0) / (6.0 * h0);
    const double w0 = -h1 * h1 * h1 / (6.0 * h0 * (h0 + h1));
    return w0 * f0 + w1 * f1 + w2 * f2;
}

// integral over [x0,x1] of the quadratic through (x0,x1,x2)
double first_interval(double x0, double x1, double x2, double f0, double f1, double f2) {
    return last_interval(-x2, -x1, -x0, f2, f1, f0);
}

}  // namespace

double simpson(const std::vector<double>& s, const std::vector<double>& f) {
    const std::size_t n = s.size();
    if (n != f.size()) throw std::invalid_argument("simpson: size mismatch");
    if (n < 2) return 0.0;
    if (n == 2) return 0.5 * (s[1] - s[0]) * (f[0] + f[1]);
    double acc = 0.0;
    std::size_t i = 0;
    for (; i + 2 < n; i += 2) acc += simpson_pair(s[i], s[i + 1], s[i + 2], f[i], f[i + 1], f[i + 2]);
    if (i + 1 < n)
        acc += last_interval(s[i - 1], s[i], s[i + 1], f[i - 1], f[i], f[i + 1]);
    return acc;
}

std::vector<double> cumulative_simpson(const std::vector<double>& s, const std::vector<double>& f) {
    const std::size_t n = s.size();
    if (n != f.size()) throw std::invalid_argument("cumulative_simpson: size mismatch");
    std::vector<double> out(n, 0.0);
    if (n < 2) return out;
    if (n == 2) {
        out[1] = 0.5 * (s[1] - s[0]) * (f[0] + f[1]);
        return out;
    }
    for (std::size_t i = 2; i < n; i += 2)
        out[i] = out[i - 2] + simpson_pair(s[i - 2], s[i - 1], s[i], f[i - 2], f[i - 1], f[i]);
    for (std::size_t i = 1; i < n; i += 2) {
        if (i + 1 < n)
            out[i] = out[i - 1] + first_interval(s[i - 1], s[i], s[i + 1], f[i - 1], f[i], f[i + 1]);
        else
            out[i] = out[i - 1] + last_interval(s[i - 2], s[i - 1], s[i], f[i - 2], f[i - 1], f[i]);
    }
    return out;
}

double gauss_kronrod(const std::function<double(double)>& f, double a, double b, double tol,
                     unsigned max_depth) {
    if (a == b) return 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, tol);
}

LineFit fit_line(const std::vector<double>& s, const std::vector<double>& y) {
    const std::size_t n = s.size();
    if (n != y.size() || n < 2) throw std::invalid_argument("fit_line: need >=2 matching samples");
    double ms = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ms += s[i];
        my += y[i];
    }
    ms /= double(n);
    my /= double(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (s[i] - ms) * (s[i] - ms);
        sxy += (s[i] - ms) * (y[i] - my);
    }
    LineFit r;
    r.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    r.intercept = my - r.slope * ms;
    for (std::size_t i = 0; i < n; ++i)
        r.max_residual = std::max(r.max_residual, std::abs(y[i] - r.intercept - r.slope * s[i]));
    return r;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = a;
        return v;
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = a + (b - a) * double(i) / double(n - 1);
    v.back() = b;
    return v;
}

}  // namespace adsgeo::num
