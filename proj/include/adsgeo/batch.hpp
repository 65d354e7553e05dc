#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adsgeo/charts.hpp"
#include "adsgeo/connectivity.hpp"
#include "adsgeo/geodesics.hpp"
#include "adsgeo/hamiltonian.hpp"

namespace adsgeo {

/// Serial is the reference path; Parallel fans out with OpenMP.
enum class Exec { Serial, Parallel };

/// Random on-manifold points, global chart angles uniform and |theta| <= theta_max.
std::vector<PointAdS> sample_points(std::size_t count, std::uint64_t seed, double theta_max = 2.0);

/// One integration per initial state. The first failure (lowest index) is rethrown.
std::vector<Trajectory> integrate_batch(const std::vector<PhaseState>& inits, Distribution d,
                                        const IntegratorConfig& cfg, Exec exec);

std::vector<PointAdS> const_geodesic_grid(const ConstGeodesicSpec& spec, const std::vector<double>& s, Exec exec);

/// max |Gram(N,T,X,Y) - diag(-1,-1,1,1)| over the points.
double frame_gram_max_error(const std::vector<PointAdS>& pts, Exec exec);

struct ConnectResult {
    std::optional<Trajectory> curve;
    std::optional<ErrorKind> error;
    std::string message;
};

std::vector<ConnectResult> connect_tx_batch(const std::vector<std::pair<GlobalChartPoint, GlobalChartPoint>>& pairs,
                                            std::size_t n, Exec exec);

}  // namespace adsgeo
