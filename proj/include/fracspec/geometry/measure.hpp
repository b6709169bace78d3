#pragma once

#include "fracspec/geometry/point_cloud.hpp"

#include <span>
#include <vector>

namespace fracspec::geometry {

/// Finite atomic measure: a quadrature stand-in for the restricted
/// Hausdorff/packing measures and the Cantor measures.
class WeightedMeasure {
public:
    WeightedMeasure(int dim, std::vector<double> flat_atoms, std::vector<double> weights);

    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return weights_.size(); }
    std::span<const double> atom(std::size_t i) const noexcept {
        return {atoms_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
    }
    double weight(std::size_t i) const noexcept { return weights_[i]; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    const std::vector<double>& atoms() const noexcept { return atoms_; }
    double total() const noexcept { return total_; }

    /// nu(B_r(x)) for the open ball.
    double mass_in_ball(std::span<const double> x, double r) const;

    PointCloud support() const;

private:
    int dim_;
    std::vector<double> atoms_;
    std::vector<double> weights_;
    double total_ = 0.0;
};

}  // namespace fracspec::geometry
