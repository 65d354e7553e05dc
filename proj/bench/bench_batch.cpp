#include <benchmark/benchmark.h>

#include <random>

#include "adsgeo/batch.hpp"

using namespace adsgeo;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

std::vector<PhaseState> flows(std::size_t n) {
    const auto pts = sample_points(n, 7, 1.0);
    std::vector<PhaseState> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back({pts[i].coords(), covector_from_pairings(pts[i], 1.0, 0.3, 0.1 * double(i % 3), 0.0)});
    return out;
}

void BM_IntegrateBatch(benchmark::State& st) {
    const auto init = flows(64);
    IntegratorConfig cfg;
    cfg.s1 = 2.0;
    cfg.step = 1e-3;
    cfg.record_every = 100;
    for (auto _ : st) benchmark::DoNotOptimize(integrate_batch(init, Distribution::SpanTX, cfg, exec_of(st)));
}

void BM_FrameGram(benchmark::State& st) {
    const auto pts = sample_points(200000, 3);
    for (auto _ : st) benchmark::DoNotOptimize(frame_gram_max_error(pts, exec_of(st)));
}

void BM_ConstGeodesicGrid(benchmark::State& st) {
    const auto s = std::vector<double>(200000, 0.5);
    const ConstGeodesicSpec spec{Distribution::SpanTX, ConstFamily::Timelike, 0.7};
    for (auto _ : st) benchmark::DoNotOptimize(const_geodesic_grid(spec, s, exec_of(st)));
}

void BM_ConnectBatch(benchmark::State& st) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ang(-3.0, 3.0), th(0.1, 1.5), ps(0.2, 2.9);
    std::vector<std::pair<GlobalChartPoint, GlobalChartPoint>> pairs;
    for (int i = 0; i < 256; ++i)
        pairs.push_back({{ang(rng), ps(rng), th(rng)}, {ang(rng), ps(rng), th(rng)}});
    for (auto _ : st) benchmark::DoNotOptimize(connect_tx_batch(pairs, kDefaultSamples, exec_of(st)));
}

}  // namespace

BENCHMARK(BM_IntegrateBatch)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FrameGram)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConstGeodesicGrid)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConnectBatch)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
