#include "adsgeo/batch.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <random>

namespace adsgeo {

namespace {

// Runs body(i) for i in [0, n); exceptions are captured per index and the lowest one rethrown.
enum class Grain { Coarse, Fine };

template <class F>
void for_each_index(std::size_t n, Exec exec, F&& body, Grain grain = Grain::Coarse) {
    std::vector<std::exception_ptr> errs(n);
    const auto guarded = [&](std::size_t i) {
        try {
            body(i);
        } catch (...) {
            errs[i] = std::current_exception();
        }
    };
    const auto ni = static_cast<std::ptrdiff_t>(n);
    if (exec == Exec::Parallel && grain == Grain::Coarse) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < ni; ++i) guarded(static_cast<std::size_t>(i));
    } else if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < ni; ++i) guarded(static_cast<std::size_t>(i));
    } else {
        for (std::ptrdiff_t i = 0; i < ni; ++i) guarded(static_cast<std::size_t>(i));
    }
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

double gram_error(const PointAdS& p) {
    const Frame f = frame_at(p);
    const std::array<Vec4, 4> v{f.N, f.T, f.X, f.Y};
    constexpr double g[4] = {-1.0, -1.0, 1.0, 1.0};
    double err = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            err = std::max(err, std::abs(minkowski_inner(v[i], v[j]) - (i == j ? g[i] : 0.0)));
    return err;
}

}  // namespace

std::vector<PointAdS> sample_points(std::size_t count, std::uint64_t seed, double theta_max) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi), th(-theta_max, theta_max);
    std::vector<PointAdS> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double phi = ang(rng), psi = ang(rng), t = th(rng);
        out.push_back(chart_to_cartesian(GlobalChartPoint{phi, psi, t}));
    }
    return out;
}

std::vector<Trajectory> integrate_batch(const std::vector<PhaseState>& inits, Distribution d,
                                        const IntegratorConfig& cfg, Exec exec) {
    cfg.validate();
    std::vector<Trajectory> out(inits.size());
    for_each_index(inits.size(), exec, [&](std::size_t i) { out[i] = integrate(inits[i], d, cfg); });
    return out;
}

std::vector<PointAdS> const_geodesic_grid(const ConstGeodesicSpec& spec, const std::vector<double>& s, Exec exec) {
    std::vector<PointAdS> out(s.size(), PointAdS::identity());
    for_each_index(
        s.size(), exec, [&](std::size_t i) { out[i] = const_geodesic(spec, s[i]); }, Grain::Fine);
    return out;
}

double frame_gram_max_error(const std::vector<PointAdS>& pts, Exec exec) {
    std::vector<double> err(pts.size(), 0.0);
    for_each_index(
        pts.size(), exec, [&](std::size_t i) { err[i] = gram_error(pts[i]); }, Grain::Fine);
    double e = 0.0;
    for (double v : err) e = std::max(e, v);
    return e;
}

std::vector<ConnectResult> connect_tx_batch(const std::vector<std::pair<GlobalChartPoint, GlobalChartPoint>>& pairs,
                                            std::size_t n, Exec exec) {
    std::vector<ConnectResult> out(pairs.size());
    for_each_index(pairs.size(), exec, [&](std::size_t i) {
        try {
            out[i].curve = connect_tx(pairs[i].first, pairs[i].second, n);
        } catch (const Error& e) {
            out[i].error = e.kind();
            out[i].message = e.what();
        }
    });
    return out;
}

}  // namespace adsgeo
