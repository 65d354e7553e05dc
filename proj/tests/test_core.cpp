#include <gtest/gtest.h>

#include <random>

#include "adsgeo/core.hpp"
#include "oracles.hpp"

using namespace adsgeo;

namespace {

Vec4 v(const oracle::V4& a) { return {a[0], a[1], a[2], a[3]}; }
oracle::V4 o(const Vec4& a) { return {a[0], a[1], a[2], a[3]}; }

}  // namespace

TEST(Algebra, AnticommutingPairs) {
    const Mat4i zero{};
    EXPECT_EQ(matadd(matmul(kJ, kE1), matmul(kE1, kJ)), zero);
    EXPECT_EQ(matadd(matmul(kE2, kE1), matmul(kE1, kE2)), zero);
    EXPECT_EQ(matadd(matmul(kJ, kE2), matmul(kE2, kJ)), zero);
}

TEST(Algebra, SquaresAndProducts) {
    EXPECT_EQ(matmul(kJ, kJ), scaled(kU, -1));
    EXPECT_EQ(matmul(kE1, kE1), kU);
    EXPECT_EQ(matmul(kE2, kE2), kU);
    EXPECT_EQ(matmul(kJ, kE1), kE2);
    EXPECT_EQ(matmul(kE2, kE1), kJ);
    EXPECT_EQ(matmul(kJ, kE2), scaled(kE1, -1));
}

TEST(Algebra, CommutatorTable) {
    EXPECT_EQ(commutator(kJ, kE1), scaled(kE2, 2));
    EXPECT_EQ(commutator(kE1, kE2), scaled(kJ, -2));
    EXPECT_EQ(commutator(kJ, kE2), scaled(kE1, -2));
}

TEST(Algebra, FieldBracketsMatchMatrixCommutators) {
    // [T,X] as vector fields: D_T X - D_X T, with fields linear in x: X(x) = x E1.
    std::mt19937_64 rng(1);
    const auto p = PointAdS(v(oracle::random_point(rng)));
    const Vec4 x = p.coords();
    const Vec4 TX = rowmul(rowmul(x, kJ), kE1) - rowmul(rowmul(x, kE1), kJ);
    EXPECT_LT(max_abs_diff(TX, 2.0 * field_Y(x)), 1e-12);
}

TEST(PointAdS, RejectsOffManifold) {
    EXPECT_THROW(PointAdS({1.0, 0.0, 0.0, 0.1}), OffManifold);
    EXPECT_NO_THROW(PointAdS({1.0, 0.0, 0.0, 1e-6}, 1e-9));
    EXPECT_THROW(PointAdS({1.0, 0.0, 0.0, 1e-4}, 1e-9), OffManifold);
    try {
        PointAdS({2.0, 0.0, 0.0, 0.0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OffManifold);
    }
}

TEST(PointAdS, MinkowskiInnerSignature) {
    EXPECT_EQ(minkowski_inner({1, 0, 0, 0}, {1, 0, 0, 0}), -1.0);
    EXPECT_EQ(minkowski_inner({0, 1, 0, 0}, {0, 1, 0, 0}), -1.0);
    EXPECT_EQ(minkowski_inner({0, 0, 1, 0}, {0, 0, 1, 0}), 1.0);
    EXPECT_EQ(minkowski_inner({0, 0, 0, 1}, {0, 0, 0, 1}), 1.0);
}

TEST(GroupLaw, MatchesSu11Products) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
        const auto a = oracle::random_point(rng), b = oracle::random_point(rng);
        const auto pq = group_mul(PointAdS(v(a)), PointAdS(v(b)));
        const double scale = 1.0 + std::abs(pq[0]) + std::abs(pq[2]);
        EXPECT_LT(oracle::max_diff(o(pq.coords()), oracle::su11_mul(a, b)), 1e-13 * scale * scale);
    }
}

TEST(GroupLaw, IdentityInverseAssociativity) {
    std::mt19937_64 rng(3);
    const auto e = PointAdS::identity();
    for (int i = 0; i < 100; ++i) {
        const PointAdS a(v(oracle::random_point(rng, 1.0))), b(v(oracle::random_point(rng, 1.0))),
            c(v(oracle::random_point(rng, 1.0)));
        EXPECT_EQ(group_mul(e, a).coords(), a.coords());
        EXPECT_EQ(group_mul(a, e).coords(), a.coords());
        EXPECT_LT(max_abs_diff(group_mul(a, group_inverse(a)).coords(), e.coords()), 1e-12);
        EXPECT_LT(max_abs_diff(group_mul(group_mul(a, b), c).coords(), group_mul(a, group_mul(b, c)).coords()),
                  1e-10);
        EXPECT_LT(std::abs(manifold_residual(group_mul(a, b).coords())), 1e-11);
    }
}

TEST(GroupLaw, LeftTranslateTangentIsDifferential) {
    std::mt19937_64 rng(4);
    const PointAdS p(v(oracle::random_point(rng, 1.0)));
    const Vec4 w{0.0, 0.3, -0.2, 0.5};  // tangent at e: w1 = 0
    const auto curve = [&](double t) {
        // exp-free curve through e with velocity w: normalize (1, t w2, t w3, t w4)
        oracle::V4 q{1.0, t * w[1], t * w[2], t * w[3]};
        const double n = std::sqrt(-oracle::inner(q, q));
        for (auto& c : q) c /= n;
        return oracle::su11_mul(o(p.coords()), q);
    };
    const auto fd = oracle::ddt(curve, 0.0, 1e-4);
    EXPECT_LT(oracle::max_diff(o(left_translate_tangent(p, w)), fd), 1e-9);
}

TEST(Frame, AgreesWithSubgroupDerivatives) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const auto x = oracle::random_point(rng, 1.5);
        const Frame f = frame_at(PointAdS(v(x)));
        EXPECT_LT(oracle::max_diff(o(f.T), oracle::T(x)), 1e-7);
        EXPECT_LT(oracle::max_diff(o(f.X), oracle::X(x)), 1e-7);
        EXPECT_LT(oracle::max_diff(o(f.Y), oracle::Y(x)), 1e-7);
        EXPECT_EQ(f.N, v(x));
    }
}

TEST(Frame, GramMatrixProperty) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 1000; ++i) {
        const Frame f = frame_at(PointAdS(v(oracle::random_point(rng))));
        const std::array<Vec4, 4> e{f.N, f.T, f.X, f.Y};
        const double g[4] = {-1, -1, 1, 1};
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                ASSERT_NEAR(minkowski_inner(e[a], e[b]), a == b ? g[a] : 0.0, 1e-12);
    }
}

TEST(Frame, DecomposeReconstructRoundTrip) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int i = 0; i < 100; ++i) {
        const PointAdS p(v(oracle::random_point(rng)));
        const FrameCoeffs c{u(rng), u(rng), u(rng), u(rng)};
        const Vec4 w = reconstruct_from_frame(p, c);
        const FrameCoeffs d = decompose_in_frame(p, w);
        EXPECT_NEAR(d.alpha, c.alpha, 1e-10);
        EXPECT_NEAR(d.beta, c.beta, 1e-10);
        EXPECT_NEAR(d.gamma, c.gamma, 1e-10);
        EXPECT_NEAR(d.delta, c.delta, 1e-10);
        EXPECT_NEAR(minkowski_inner(w, field_T(p.coords())), c.alpha, 1e-10);
    }
}

TEST(Frame, IdentityFrameIsStandardBasis) {
    const Frame f = frame_at(PointAdS::identity());
    EXPECT_EQ(f.T, (Vec4{0, 1, 0, 0}));
    EXPECT_EQ(f.X, (Vec4{0, 0, 1, 0}));
    EXPECT_EQ(f.Y, (Vec4{0, 0, 0, 1}));
}
