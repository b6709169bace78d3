#pragma once

#include <vector>

namespace fracspec::geometry {

/// Geometric schedule eps_k = eps_max * ratio^k, k = 0..count-1.
struct ScaleSweep {
    double eps_max = 1.0;
    double ratio = 0.5;
    int count = 8;

    void validate() const;
    std::vector<double> scales() const;
};

/// One row of a scale series; bounds equal the value when it is exact.
struct SeriesPoint {
    double eps = 0.0;
    double value = 0.0;
    double bound_low = 0.0;
    double bound_high = 0.0;
};

}  // namespace fracspec::geometry
