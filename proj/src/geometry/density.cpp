#include "fracspec/geometry/density.hpp"

#include "fracspec/common/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fracspec::geometry {

namespace {

void check_measure(const WeightedMeasure& measure, double alpha) {
    if (!(measure.total() > 0.0)) throw DomainError("measure has zero total mass");
    if (!(alpha >= 0.0 && alpha <= measure.dim())) throw DomainError("alpha must lie in [0, n]");
}

}  // namespace

DensityEstimate upper_density_estimate(const WeightedMeasure& measure, std::span<const double> x, double alpha,
                                       const ScaleSweep& sweep) {
    check_measure(measure, alpha);
    DensityEstimate out;
    out.inf_ratio = std::numeric_limits<double>::infinity();
    for (double r : sweep.scales()) {
        const double ratio = std::pow(2.0 * r, -alpha) * measure.mass_in_ball(x, r);
        out.per_scale.push_back({r, ratio, ratio, ratio});
        out.sup_ratio = std::max(out.sup_ratio, ratio);
        out.inf_ratio = std::min(out.inf_ratio, ratio);
    }
    return out;
}

RegularityReport ad_regularity_check(const WeightedMeasure& measure, double alpha, const PointCloud& samples,
                                     std::span<const double> radii, double threshold) {
    check_measure(measure, alpha);
    if (samples.empty()) throw DomainError("regularity check needs sample points");
    if (radii.empty()) throw DomainError("regularity check needs radii");
    if (samples.dim() != measure.dim()) throw DomainError("samples and measure differ in dimension");
    for (double r : radii)
        if (!(r > 0.0 && r <= 1.0)) throw DomainError("radii must lie in (0, 1]");
    RegularityReport out;
    out.threshold = threshold;
    out.a_est = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (double r : radii) {
            const double ratio = measure.mass_in_ball(samples.point(i), r) / std::pow(r, alpha);
            out.a_est = std::min(out.a_est, ratio);
            out.b_est = std::max(out.b_est, ratio);
        }
    }
    out.certificate = out.a_est > 0.0;
    out.spread = out.certificate ? out.b_est / out.a_est : std::numeric_limits<double>::infinity();
    out.regular_within_threshold = out.certificate && out.spread <= threshold;
    return out;
}

}  // namespace fracspec::geometry
