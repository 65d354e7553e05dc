#pragma once

#include <array>
#include <cstddef>

#include "adsgeo/errors.hpp"

namespace adsgeo {

inline constexpr double kManifoldTol = 1e-9;

/// Point or covector of R^{2,2}.
struct Vec4 {
    std::array<double, 4> c{};

    constexpr Vec4() = default;
    constexpr Vec4(double x1, double x2, double x3, double x4) : c{x1, x2, x3, x4} {}

    constexpr double& operator[](std::size_t i) { return c[i]; }
    constexpr double operator[](std::size_t i) const { return c[i]; }

    constexpr Vec4& operator+=(const Vec4& o) {
        for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
        return *this;
    }
    constexpr Vec4& operator-=(const Vec4& o) {
        for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
        return *this;
    }
    constexpr Vec4& operator*=(double s) {
        for (auto& v : c) v *= s;
        return *this;
    }
    friend constexpr Vec4 operator+(Vec4 a, const Vec4& b) { return a += b; }
    friend constexpr Vec4 operator-(Vec4 a, const Vec4& b) { return a -= b; }
    friend constexpr Vec4 operator*(double s, Vec4 a) { return a *= s; }
    friend constexpr Vec4 operator*(Vec4 a, double s) { return a *= s; }
    friend constexpr Vec4 operator-(Vec4 a) { return a *= -1.0; }
    friend constexpr bool operator==(const Vec4&, const Vec4&) = default;
};

/// Euclidean dot product (pairing of a covector with a vector).
constexpr double dot(const Vec4& a, const Vec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

double max_abs_diff(const Vec4& a, const Vec4& b);

/// <a,b> = -a1 b1 - a2 b2 + a3 b3 + a4 b4.
constexpr double minkowski_inner(const Vec4& a, const Vec4& b) {
    return -a[0] * b[0] - a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

/// Signed constraint residual <x,x> + 1.
constexpr double manifold_residual(const Vec4& x) { return minkowski_inner(x, x) + 1.0; }

// ─── structure matrices ─────────────────────────────────────────────────────

using Mat4i = std::array<std::array<int, 4>, 4>;

inline constexpr Mat4i kU{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
inline constexpr Mat4i kJ{{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}};
inline constexpr Mat4i kE1{{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}};
inline constexpr Mat4i kE2{{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}}};

constexpr Mat4i matmul(const Mat4i& a, const Mat4i& b) {
    Mat4i r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int s = 0;
            for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}
constexpr Mat4i matadd(const Mat4i& a, const Mat4i& b, int sb = 1) {
    Mat4i r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = a[i][j] + sb * b[i][j];
    return r;
}
constexpr Mat4i scaled(const Mat4i& a, int s) {
    Mat4i r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = s * a[i][j];
    return r;
}
constexpr Mat4i transpose(const Mat4i& a) {
    Mat4i r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = a[j][i];
    return r;
}
/// [a,b] = ab - ba.
constexpr Mat4i commutator(const Mat4i& a, const Mat4i& b) {
    return matadd(matmul(a, b), matmul(b, a), -1);
}

/// Row vector times matrix, x M.
constexpr Vec4 rowmul(const Vec4& x, const Mat4i& m) {
    Vec4 r;
    for (int j = 0; j < 4; ++j) {
        double s = 0.0;
        for (int i = 0; i < 4; ++i) s += x[i] * m[i][j];
        r[j] = s;
    }
    return r;
}

// ─── points of the group ────────────────────────────────────────────────────

/// A point of H^{1,2}: -x1^2 - x2^2 + x3^2 + x4^2 = -1.
class PointAdS {
public:
    /// Validating constructor; throws OffManifold if |<x,x>+1| > tol.
    explicit PointAdS(const Vec4& x, double tol = kManifoldTol);

    /// No check. For values produced by exact on-manifold formulas.
    static PointAdS unchecked(const Vec4& x) { return PointAdS(x, Raw{}); }
    static PointAdS identity() { return unchecked({1.0, 0.0, 0.0, 0.0}); }

    const Vec4& coords() const { return x_; }
    double operator[](std::size_t i) const { return x_[i]; }

private:
    struct Raw {};
    PointAdS(const Vec4& x, Raw) : x_(x) {}
    Vec4 x_;
};

void require_on_manifold(const Vec4& x, double tol = kManifoldTol);

PointAdS group_mul(const PointAdS& p, const PointAdS& q, double tol = kManifoldTol);
PointAdS group_inverse(const PointAdS& p, double tol = kManifoldTol);

/// (L_p)_* v, the tangent map of left translation by p applied to v.
Vec4 left_translate_tangent(const PointAdS& p, const Vec4& v);

struct Frame {
    Vec4 N, T, X, Y;
};

/// N = xU, T = xJ, X = xE1, Y = xE2.
Frame frame_at(const PointAdS& p, double tol = kManifoldTol);

constexpr Vec4 field_T(const Vec4& x) { return {-x[1], x[0], x[3], -x[2]}; }
constexpr Vec4 field_X(const Vec4& x) { return {x[2], x[3], x[0], x[1]}; }
constexpr Vec4 field_Y(const Vec4& x) { return {x[3], -x[2], -x[1], x[0]}; }

/// Inner products against the frame: alpha=<v,T>, beta=<v,X>, gamma=<v,Y>, delta=<v,N>.
struct FrameCoeffs {
    double alpha = 0.0, beta = 0.0, gamma = 0.0, delta = 0.0;
};

FrameCoeffs decompose_in_frame(const PointAdS& p, const Vec4& v, double tol = kManifoldTol);

/// Inverse of decompose_in_frame: -alpha T + beta X + gamma Y - delta N.
Vec4 reconstruct_from_frame(const PointAdS& p, const FrameCoeffs& f);

}  // namespace adsgeo
