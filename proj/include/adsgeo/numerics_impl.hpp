#pragma once

#include <stdexcept>

namespace adsgeo::num {

template <class T>
std::vector<T> derivative(const std::vector<double>& s, const std::vector<T>& f) {
    const std::size_t n = s.size();
    if (n != f.size()) throw std::invalid_argument("derivative: size mismatch");
    std::vector<T> d(n);
    if (n < 2) return d;
    if (n == 2) {
        d[0] = d[1] = (1.0 / (s[1] - s[0])) * (f[1] - f[0]);
        return d;
    }
    if (is_uniform(s) && n >= 5) {
        const double h = (s[n - 1] - s[0]) / double(n - 1);
        for (std::size_t i = 2; i + 2 < n; ++i)
            d[i] = (1.0 / (12.0 * h)) * ((f[i - 2] - f[i + 2]) + 8.0 * (f[i + 1] - f[i - 1]));
        d[0] = (1.0 / (2.0 * h)) * (-3.0 * f[0] + 4.0 * f[1] - f[2]);
        d[n - 1] = (1.0 / (2.0 * h)) * (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]);
        d[1] = (1.0 / (2.0 * h)) * (f[2] - f[0]);
        d[n - 2] = (1.0 / (2.0 * h)) * (f[n - 1] - f[n - 3]);
        return d;
    }
    // 3-point Lagrange on a general grid
    auto lag = [&](std::size_t i0, std::size_t at) {
        const double x0 = s[i0], x1 = s[i0 + 1], x2 = s[i0 + 2], x = s[at];
        const double w0 = ((x - x1) + (x - x2)) / ((x0 - x1) * (x0 - x2));
        const double w1 = ((x - x0) + (x - x2)) / ((x1 - x0) * (x1 - x2));
        const double w2 = ((x - x0) + (x - x1)) / ((x2 - x0) * (x2 - x1));
        return w0 * f[i0] + w1 * f[i0 + 1] + w2 * f[i0 + 2];
    };
    d[0] = lag(0, 0);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = lag(i - 1, i);
    d[n - 1] = lag(n - 3, n - 1);
    return d;
}

template <class T>
std::vector<T> second_derivative(const std::vector<double>& s, const std::vector<T>& f) {
    const std::size_t n = s.size();
    if (n != f.size()) throw std::invalid_argument("second_derivative: size mismatch");
    std::vector<T> d(n);
    if (n < 4 || !is_uniform(s)) {
        auto v = derivative(s, f);
        return derivative(s, v);
    }
    const double h = (s[n - 1] - s[0]) / double(n - 1);
    const double h2 = h * h;
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = (1.0 / (12.0 * h2)) *
               (-1.0 * (f[i - 2] + f[i + 2]) + 16.0 * (f[i - 1] + f[i + 1]) - 30.0 * f[i]);
    if (n >= 5) {
        d[1] = (1.0 / h2) * (f[0] - 2.0 * f[1] + f[2]);
        d[n - 2] = (1.0 / h2) * (f[n - 3] - 2.0 * f[n - 2] + f[n - 1]);
    }
    d[0] = (1.0 / h2) * (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]);
    d[n - 1] = (1.0 / h2) * (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]);
    return d;
}

}  // namespace adsgeo::num
