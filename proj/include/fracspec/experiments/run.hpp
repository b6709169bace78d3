#pragma once

#include "fracspec/experiments/config.hpp"
#include "fracspec/experiments/report.hpp"

namespace fracspec::experiments {

/// Runs the named experiment and writes <out>/<id>/report.json plus CSVs.
/// Module errors are rethrown with the experiment id prefixed.
ReportRecord run(const ExperimentConfig& config);

}  // namespace fracspec::experiments
