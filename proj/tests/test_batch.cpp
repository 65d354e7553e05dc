#include <gtest/gtest.h>

#include <omp.h>

#include <limits>

#include "adsgeo/batch.hpp"

using namespace adsgeo;

namespace {

void expect_same(const Trajectory& a, const Trajectory& b) {
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a.params[i], b.params[i]);
        EXPECT_EQ(a.points[i].coords(), b.points[i].coords());
        EXPECT_EQ(a.velocities[i], b.velocities[i]);
    }
    EXPECT_EQ(a.diagnostics, b.diagnostics);
}

std::vector<PhaseState> inits(std::size_t n) {
    std::vector<PhaseState> out;
    const auto pts = sample_points(n, 11, 1.0);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back({pts[i].coords(), covector_from_pairings(pts[i], 1.0, 0.3 * double(i % 5), 0.1, 0.0)});
    return out;
}

}  // namespace

class Threads : public ::testing::TestWithParam<int> {
   protected:
    void SetUp() override { omp_set_num_threads(GetParam()); }
};

TEST_P(Threads, IntegrateBatchSerialEqualsParallel) {
    IntegratorConfig cfg;
    cfg.s1 = 2.0;
    cfg.step = 1e-2;
    const auto in = inits(9);
    const auto a = integrate_batch(in, Distribution::SpanTX, cfg, Exec::Serial);
    const auto b = integrate_batch(in, Distribution::SpanTX, cfg, Exec::Parallel);
    ASSERT_EQ(a.size(), in.size());
    for (std::size_t i = 0; i < a.size(); ++i) expect_same(a[i], b[i]);
}

TEST_P(Threads, GridAndGramSerialEqualsParallel) {
    const ConstGeodesicSpec spec{Distribution::SpanXY, ConstFamily::Unit, 0.4};
    std::vector<double> s;
    for (int i = 0; i < 1000; ++i) s.push_back(0.01 * i);
    const auto a = const_geodesic_grid(spec, s, Exec::Serial), b = const_geodesic_grid(spec, s, Exec::Parallel);
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(a[i].coords(), b[i].coords());
    const auto pts = sample_points(2000, 3);
    const double ea = frame_gram_max_error(pts, Exec::Serial), eb = frame_gram_max_error(pts, Exec::Parallel);
    EXPECT_EQ(ea, eb);
    EXPECT_LT(ea, 1e-10);
}

TEST_P(Threads, ConnectBatchKeepsErrorsPerPair) {
    std::vector<std::pair<GlobalChartPoint, GlobalChartPoint>> pairs{
        {{0.1, 0.8, 0.6}, {1.4, 1.1, 0.3}},
        {{0.0, 1.0, 0.0}, {1.0, 1.0, 0.5}},  // theta = 0
        {{0.2, 1.0, 0.4}, {1.1, 2.0, 0.5}},
    };
    const auto a = connect_tx_batch(pairs, 65, Exec::Serial), b = connect_tx_batch(pairs, 65, Exec::Parallel);
    ASSERT_EQ(a.size(), 3u);
    EXPECT_TRUE(a[0].curve.has_value());
    EXPECT_FALSE(a[1].curve.has_value());
    EXPECT_EQ(a[1].error, ErrorKind::DegenerateConfiguration);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(a[i].error, b[i].error);
        EXPECT_EQ(a[i].message, b[i].message);
        if (a[i].curve) expect_same(*a[i].curve, *b[i].curve);
    }
}

TEST_P(Threads, LowestFailingIndexIsRethrown) {
    auto in = inits(6);
    in[2].x = {2.0, 0.0, 0.0, 0.0};
    in[4].x = {1.0, 0.0, 0.0, 0.0};
    in[4].xi = {0.0, std::numeric_limits<double>::infinity(), 0.0, 0.0};
    IntegratorConfig cfg;
    for (Exec e : {Exec::Serial, Exec::Parallel}) {
        try {
            integrate_batch(in, Distribution::SpanXY, cfg, e);
            ADD_FAILURE() << "no exception";
        } catch (const OffManifold&) {
        } catch (const std::exception& err) {
            ADD_FAILURE() << "wrong failure rethrown: " << err.what();
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Omp, Threads, ::testing::Values(1, 4));

TEST(SamplePoints, DeterministicAndOnManifold) {
    const auto a = sample_points(50, 99), b = sample_points(50, 99), c = sample_points(50, 100);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].coords(), b[i].coords());
        const auto& x = a[i].coords();
        EXPECT_NEAR(-x[0] * x[0] - x[1] * x[1] + x[2] * x[2] + x[3] * x[3], -1.0, 1e-12);
    }
    EXPECT_NE(a[0].coords(), c[0].coords());
}
