#include "fracspec/geometry/dimension.hpp"

#include "fracspec/common/errors.hpp"
#include "fracspec/common/numeric.hpp"
#include "fracspec/common/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace fracspec::geometry {

DimensionFit fit_log_log(std::span<const double> eps, std::span<const double> counts, int n) {
    if (eps.size() != counts.size()) throw DomainError("scale and count series differ in length");
    if (eps.size() < 4) throw DomainError("dimension fit needs at least 4 scales");
    DimensionFit fit;
    const std::size_t k = eps.size();
    std::vector<double> xs(k), ys(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (!(counts[i] > 0.0)) throw DomainError("counts must be positive");
        xs[i] = std::log(1.0 / eps[i]);
        ys[i] = std::log(counts[i]);
        fit.per_scale.push_back({eps[i], counts[i], counts[i], counts[i]});
    }
    if (std::all_of(counts.begin(), counts.end(), [&](double c) { return c == counts[0]; })) {
        fit.degenerate = true;
        fit.intercept = ys[0];
        return fit;
    }
    const double mx = pairwise_sum(xs) / static_cast<double>(k);
    const double my = pairwise_sum(ys) / static_cast<double>(k);
    std::vector<double> sxy(k), sxx(k);
    for (std::size_t i = 0; i < k; ++i) {
        sxy[i] = (xs[i] - mx) * (ys[i] - my);
        sxx[i] = (xs[i] - mx) * (xs[i] - mx);
    }
    const double denom = pairwise_sum(sxx);
    if (denom <= 0.0) throw DomainError("scales must be distinct");
    fit.raw_slope = pairwise_sum(sxy) / denom;
    fit.intercept = my - fit.raw_slope * mx;
    std::vector<double> sq(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double r = ys[i] - (fit.intercept + fit.raw_slope * xs[i]);
        sq[i] = r * r;
    }
    const double sse = pairwise_sum(sq);
    fit.residual = std::sqrt(sse / static_cast<double>(k));
    fit.slope_stderr = std::sqrt(sse / static_cast<double>(k - 2) / denom);
    fit.slope = std::clamp(fit.raw_slope, 0.0, static_cast<double>(n));
    fit.clamped = fit.slope != fit.raw_slope;
    return fit;
}

DimensionFit box_dimension_estimate(const PointCloud& cloud, const ScaleSweep& sweep, CountMode mode,
                                    unsigned jobs) {
    if (cloud.empty()) throw DomainError("box dimension of an empty cloud");
    const auto scales = sweep.scales();
    if (scales.size() < 4) throw DomainError("dimension fit needs at least 4 scales");
    std::vector<double> counts(scales.size());
    parallel_for(scales.size(), jobs, [&](std::size_t i) {
        counts[i] = static_cast<double>(covering_number(cloud, scales[i], mode));
    });
    return fit_log_log(scales, counts, cloud.dim());
}

}  // namespace fracspec::geometry
