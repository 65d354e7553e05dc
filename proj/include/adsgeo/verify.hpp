#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace adsgeo {

struct SuiteResult {
    std::string name;
    bool pass = false;
    nlohmann::ordered_json measured;
};

struct VerifyOptions {
    /// Test-only: name of a suite whose inputs get perturbed (negative control).
    std::string inject_fault;
    std::uint64_t seed = 20240501;
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    bool all_pass() const;
    nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& verify_suite_names();

VerifyReport run_verify(const VerifyOptions& opt = {});

}  // namespace adsgeo
