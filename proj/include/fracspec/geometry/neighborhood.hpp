#pragma once

#include "fracspec/common/numeric.hpp"
#include "fracspec/geometry/interval_union.hpp"
#include "fracspec/geometry/point_cloud.hpp"
#include "fracspec/geometry/scale_sweep.hpp"

#include <string>
#include <vector>

namespace fracspec::geometry {

/// Lebesgue measure of an eps-neighborhood with a two-sided bound.
/// Exact methods report low == value == high (up to rounding).
struct VolumeEstimate {
    double value = 0.0;
    double low = 0.0;
    double high = 0.0;
    bool empty_set = false;  ///< warning: the input set was empty
    std::string method;
};

/// Exact |A(eps)| for an interval union and rational eps.
Rational eps_neighborhood_volume(const IntervalUnion& set, const Rational& eps);

VolumeEstimate eps_neighborhood_volume(const IntervalUnion& set, double eps);

/// n = 1: exact union of intervals; n = 2: exact union-of-disks area;
/// n >= 3: occupancy grid with cell side eps/8.
VolumeEstimate eps_neighborhood_volume(const PointCloud& cloud, double eps);

/// Occupancy-grid estimate in any dimension. A cell counts toward `value`
/// when its centre is within eps of a point, toward `low` when the whole
/// cell is, and toward `high` when any part of it may be.
VolumeEstimate occupancy_grid_volume(const PointCloud& cloud, double eps, double cell_fraction = 0.125);

/// Area of a union of equal-radius open disks, by boundary-arc integration.
double disk_union_area(const PointCloud& centers, double radius);

struct MinkowskiSweep {
    double alpha = 0.0;
    int n = 1;
    /// value = eps^(alpha - n) |S(eps)|; bounds carry the volume bounds.
    std::vector<SeriesPoint> series;
    std::vector<double> running_max;
    double max_ratio = 0.0;
    double min_ratio = 0.0;
    /// Max over the finer half of the schedule; bounded limsup evidence is
    /// tail_max not exceeding max_ratio.
    double tail_max = 0.0;
    bool empty_set = false;
};

MinkowskiSweep minkowski_ratio_sweep(const IntervalUnion& set, double alpha, const ScaleSweep& sweep);
MinkowskiSweep minkowski_ratio_sweep(const PointCloud& set, double alpha, const ScaleSweep& sweep);

/// Exact ratio eps^(alpha-1) |S(eps)| in one dimension, given eps^alpha as an
/// exact rational (e.g. (1/2)^m for eps = 3^-m on the middle-thirds set).
Rational minkowski_ratio_exact(const IntervalUnion& set, const Rational& eps, const Rational& eps_pow_alpha);

}  // namespace fracspec::geometry
