#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "adsgeo/io.hpp"

namespace adsgeo::cli {

/// Bad flags or config; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// ADSGEO_DEFAULT_TOL if set and valid, else `fallback`.
double default_tol(double fallback = 1e-9);

const std::vector<std::string>& geodesic_families();

struct Output {
    std::string path;  ///< empty: stdout
    std::string format = "csv";
};

struct GeodesicParams {
    std::string dist = "tx";
    std::string family;
    double psi = 0.0;
    double s_min = 0.0, s_max = 6.283185307179586;
    std::size_t n = 1000;
    int alpha_sign = 1, beta_sign = 1;
    double A = 1.5, B = -0.5, C = 1.0, D = 1.0;
    std::string chart = "timelike";
    double phi_dot0 = 1.0, chi2_dot = 0.0, chi2_0 = 0.0;
    Output out;
};

struct IntegrateParams {
    std::string dist = "tx";
    std::vector<double> x{1.0, 0.0, 0.0, 0.0};
    std::vector<double> xi;                      ///< covector; else built from the momenta
    double tau = 0.0, varsigma = 0.0, kappa = 0.0, nu = 0.0;
    double s0 = 0.0, s1 = 1.0, step = 1e-3, rtol = 1e-10, atol = 1e-12;
    std::string method = "rk4";
    int record_every = 1;
    bool strict = false;
    double strict_bound = 1e-6;
    double tol = -1.0;  ///< on-manifold tolerance; negative means default_tol()
    Output out;
};

struct ConnectParams {
    std::string dist = "tx";
    std::string chart;  ///< "global" (phi,psi,theta) or "cartesian" (x1..x4); required
    std::vector<double> P, Q;
    std::size_t n = 257;
    bool const_psi = false, const_theta = false, piecewise = false;
    double tol = -1.0;
    Output out;
};

struct Result {
    io::Table table;
    io::Meta meta;
};

Result cmd_geodesic(const GeodesicParams& p);
Result cmd_integrate(const IntegrateParams& p);
Result cmd_connect(const ConnectParams& p);

/// Parameter records from JSON; unknown keys raise UsageError.
GeodesicParams geodesic_from_json(const nlohmann::json& j);
IntegrateParams integrate_from_json(const nlohmann::json& j);
ConnectParams connect_from_json(const nlohmann::json& j);

/// Writes to p.path (or stdout when empty).
void emit(const Result& r, const Output& o);

struct SweepOutcome {
    std::string out;
    int exit_code = 0;
    std::string message;
};

/// Config {"runs": [{"command": ..., "params": {...}}]}; every run needs params.out.
/// Runs fan out over OpenMP threads.
std::vector<SweepOutcome> cmd_sweep(const nlohmann::json& config);

/// Maps an in-flight exception to an exit code and a machine-readable error record.
int exit_code_for(const std::exception& e, nlohmann::json& record);

}  // namespace adsgeo::cli
