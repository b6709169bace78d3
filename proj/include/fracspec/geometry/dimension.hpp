#pragma once

#include "fracspec/geometry/covering.hpp"
#include "fracspec/geometry/point_cloud.hpp"
#include "fracspec/geometry/scale_sweep.hpp"

#include <span>
#include <vector>

namespace fracspec::geometry {

struct DimensionFit {
    double slope = 0.0;      ///< clamped to [0, n]
    double raw_slope = 0.0;  ///< least-squares slope before clamping
    double intercept = 0.0;
    double residual = 0.0;   ///< RMS residual of the log-log fit
    double slope_stderr = 0.0;
    bool degenerate = false;  ///< counts constant over the sweep
    bool clamped = false;
    std::vector<SeriesPoint> per_scale;  ///< (eps, count)
};

/// Least-squares slope of log(count) against log(1/eps).
DimensionFit fit_log_log(std::span<const double> eps, std::span<const double> counts, int n);

/// Box-counting dimension from greedy covering numbers over the sweep.
DimensionFit box_dimension_estimate(const PointCloud& cloud, const ScaleSweep& sweep,
                                    CountMode mode = CountMode::greedy, unsigned jobs = 1);

}  // namespace fracspec::geometry
