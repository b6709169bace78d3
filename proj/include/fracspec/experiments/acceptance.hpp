#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fracspec::experiments {

struct CriterionResult {
    int id = 0;
    std::string suite;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    std::optional<std::string> suite;  ///< a suite name, or "all"
    /// Replaces the middle-thirds dimension in the Minkowski suite (fault injection).
    std::optional<double> inject_beta;
    unsigned jobs = 1;
};

/// Suite names in criterion order.
const std::vector<std::string>& suite_names();

/// Runs the selected criteria. Unknown suite names throw ConfigError.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options);

std::string acceptance_to_json(const std::vector<CriterionResult>& results);

}  // namespace fracspec::experiments
