#include "fracspec/geometry/point_cloud.hpp"

#include "fracspec/common/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fracspec::geometry {

PointCloud::PointCloud(int dim) : dim_(dim) {
    if (dim < 1) throw DomainError("point cloud dimension must be >= 1");
}

PointCloud::PointCloud(int dim, std::vector<double> flat_coords) : dim_(dim) {
    if (dim < 1) throw DomainError("point cloud dimension must be >= 1");
    const auto d = static_cast<std::size_t>(dim);
    if (flat_coords.size() % d != 0)
        throw DomainError("coordinate count is not a multiple of the dimension");
    for (double c : flat_coords)
        if (!std::isfinite(c)) throw DomainError("point coordinates must be finite");

    const std::size_t count = flat_coords.size() / d;
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    auto row = [&](std::size_t i) { return flat_coords.begin() + static_cast<std::ptrdiff_t>(i * d); };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(row(a), row(a) + dim, row(b), row(b) + dim);
    });
    coords_.reserve(flat_coords.size());
    for (std::size_t k = 0; k < count; ++k) {
        if (k > 0 && std::equal(row(order[k]), row(order[k]) + dim, row(order[k - 1]))) continue;
        coords_.insert(coords_.end(), row(order[k]), row(order[k]) + dim);
    }
}

PointCloud PointCloud::from_points(const std::vector<std::vector<double>>& points) {
    if (points.empty()) throw DomainError("cannot infer dimension of an empty point list");
    const std::size_t d = points.front().size();
    std::vector<double> flat;
    flat.reserve(points.size() * d);
    for (const auto& p : points) {
        if (p.size() != d) throw DomainError("points have mixed dimensions");
        flat.insert(flat.end(), p.begin(), p.end());
    }
    return PointCloud(static_cast<int>(d), std::move(flat));
}

PointCloud PointCloud::from_1d(const std::vector<double>& values) { return PointCloud(1, values); }

PointCloud PointCloud::subset(std::span<const std::size_t> indices) const {
    std::vector<double> flat;
    flat.reserve(indices.size() * static_cast<std::size_t>(dim_));
    for (std::size_t i : indices) {
        const auto p = point(i);
        flat.insert(flat.end(), p.begin(), p.end());
    }
    return PointCloud(dim_, std::move(flat));
}

double squared_distance(std::span<const double> a, std::span<const double> b) noexcept {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

double distance(std::span<const double> a, std::span<const double> b) noexcept {
    if (a.size() == 1) return std::abs(a[0] - b[0]);
    return std::sqrt(squared_distance(a, b));
}

}  // namespace fracspec::geometry
