#pragma once

#include "fracspec/geometry/measure.hpp"
#include "fracspec/geometry/point_cloud.hpp"
#include "fracspec/geometry/scale_sweep.hpp"

#include <span>
#include <vector>

namespace fracspec::geometry {

struct DensityEstimate {
    double sup_ratio = 0.0;  ///< max over the sweep of (2r)^-alpha nu(B_r(x))
    double inf_ratio = 0.0;
    std::vector<SeriesPoint> per_scale;
};

/// Sweep surrogate for the upper alpha-density at x: the true limsup is
/// replaced by the maximum over the declared radii.
DensityEstimate upper_density_estimate(const WeightedMeasure& measure, std::span<const double> x, double alpha,
                                       const ScaleSweep& sweep);

struct RegularityReport {
    double a_est = 0.0;  ///< min of nu(B_r(x)) / r^alpha over samples and radii
    double b_est = 0.0;  ///< max of the same
    bool certificate = false;  ///< a_est > 0 on the tested range; empirical evidence only
    double spread = 0.0;       ///< b_est / a_est
    double threshold = 10.0;
    bool regular_within_threshold = false;
};

/// Empirical Ahlfors-David check over sample points and radii in (0, 1].
RegularityReport ad_regularity_check(const WeightedMeasure& measure, double alpha, const PointCloud& samples,
                                     std::span<const double> radii, double threshold = 10.0);

}  // namespace fracspec::geometry
