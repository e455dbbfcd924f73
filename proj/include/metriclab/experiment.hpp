#pragma once

#include <string>
#include <utility>
#include <vector>

#include "metriclab/config.hpp"
#include "metriclab/report.hpp"

namespace metriclab {

struct ExperimentInfo {
  std::string name;
  std::string summary;
};

/// The named experiments, in run order.
const std::vector<ExperimentInfo>& list_experiments();

/// Closed-form reference values applicable to a named experiment at the
/// config's parameters. Throws for unknown experiment names.
std::vector<std::pair<std::string, double>> reference_values(
    const std::string& experiment, const ExperimentConfig& cfg);

/// Executes the named experiment's pipeline and returns its report.
/// Deterministic for a fixed config. Throws std::runtime_error for invalid
/// configs (including too-large grids).
ExperimentReport run_experiment(const ExperimentConfig& cfg);

}  // namespace metriclab
