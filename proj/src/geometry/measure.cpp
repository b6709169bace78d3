#include "fracspec/geometry/measure.hpp"

#include "fracspec/common/errors.hpp"
#include "fracspec/common/numeric.hpp"

#include <cmath>

namespace fracspec::geometry {

WeightedMeasure::WeightedMeasure(int dim, std::vector<double> flat_atoms, std::vector<double> weights)
    : dim_(dim), atoms_(std::move(flat_atoms)), weights_(std::move(weights)) {
    if (dim < 1) throw DomainError("measure dimension must be >= 1");
    if (atoms_.size() != weights_.size() * static_cast<std::size_t>(dim))
        throw DomainError("atom and weight counts disagree");
    for (double w : weights_)
        if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("atom weights must be positive");
    total_ = pairwise_sum(weights_);
}

double WeightedMeasure::mass_in_ball(std::span<const double> x, double r) const {
    if (static_cast<int>(x.size()) != dim_) throw DomainError("query point has wrong dimension");
    const double r2 = r * r;
    std::vector<double> inside;
    for (std::size_t i = 0; i < size(); ++i)
        if (squared_distance(atom(i), x) < r2) inside.push_back(weights_[i]);
    return pairwise_sum(inside);
}

PointCloud WeightedMeasure::support() const { return PointCloud(dim_, atoms_); }

}  // namespace fracspec::geometry
