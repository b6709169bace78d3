#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracspec::geometry {

/// Finite sample of a bounded set in R^n. Points are stored flat, sorted
/// lexicographically and deduplicated, so index order is the tie-break order
/// used by every greedy routine.
class PointCloud {
public:
    explicit PointCloud(int dim = 1);
    PointCloud(int dim, std::vector<double> flat_coords);

    static PointCloud from_points(const std::vector<std::vector<double>>& points);
    static PointCloud from_1d(const std::vector<double>& values);

    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return coords_.size() / static_cast<std::size_t>(dim_); }
    bool empty() const noexcept { return coords_.empty(); }

    std::span<const double> point(std::size_t i) const noexcept {
        return {coords_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
    }
    const std::vector<double>& coords() const noexcept { return coords_; }

    PointCloud subset(std::span<const std::size_t> indices) const;

private:
    int dim_;
    std::vector<double> coords_;
};

double distance(std::span<const double> a, std::span<const double> b) noexcept;
double squared_distance(std::span<const double> a, std::span<const double> b) noexcept;

}  // namespace fracspec::geometry
