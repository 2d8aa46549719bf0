#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace kronreal::cli {

struct Check {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool lower_bound = false;  // pass iff residual > tol

    bool pass() const;
};

struct SuiteReport {
    std::string operation;
    std::uint64_t seed = 0;
    nlohmann::json dims = nlohmann::json::object();
    std::vector<Check> checks;
    std::optional<std::string> error;  // error kind when a module signal aborted the seed
    std::optional<double> wall_time;

    bool pass() const;
    nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Runs one property suite for one seed. Module errors are captured into the
/// report rather than thrown. A non-empty tol_override replaces every upper
/// tolerance in the suite.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed, std::optional<double> tol_override = std::nullopt);

}  // namespace kronreal::cli
