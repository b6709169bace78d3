#pragma once

#include "fracspec/fractal/cantor.hpp"
#include "fracspec/geometry/measure.hpp"
#include "fracspec/geometry/point_cloud.hpp"

#include <cstdint>
#include <vector>

namespace fracspec::fractal {

inline constexpr std::uint64_t kMaxMaterialized = 10'000'000;

struct Cube {
    std::vector<double> corner;  ///< lower corner
    double side = 0.0;
};

/// Implicit n-fold product K_j x ... x K_j. Cubes are addressed by index, so
/// any number of independent cursors can stream them concurrently.
class ProductSet {
public:
    ProductSet(CantorLevel factor, int n);

    int dim() const noexcept { return n_; }
    std::uint64_t cube_count() const noexcept { return count_; }
    const Rational& side() const noexcept { return factor_.length; }
    const CantorLevel& factor() const noexcept { return factor_; }

    Cube cube(std::uint64_t index) const;

    /// One representative point per cube (`offset` in [0,1] of the side along
    /// each axis; 0.5 gives centres). Refuses more than kMaxMaterialized points.
    geometry::PointCloud sample(double offset = 0.5) const;

private:
    CantorLevel factor_;
    std::vector<double> starts_;
    int n_;
    std::uint64_t count_;
};

/// n-fold tensor power of a measure; weights multiply.
geometry::WeightedMeasure product_measure(const geometry::WeightedMeasure& factor, int n,
                                          std::uint64_t max_atoms = kMaxMaterialized);

}  // namespace fracspec::fractal
