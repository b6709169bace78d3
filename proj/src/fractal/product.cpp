#include "fracspec/fractal/product.hpp"

#include "fracspec/common/errors.hpp"

#include <cmath>

namespace fracspec::fractal {

namespace {

std::uint64_t checked_power(std::uint64_t base, int n, std::uint64_t limit) {
    std::uint64_t out = 1;
    for (int k = 0; k < n; ++k) {
        if (base != 0 && out > limit / base) throw SizeError("product exceeds the materialization budget");
        out *= base;
    }
    return out;
}

}  // namespace

ProductSet::ProductSet(CantorLevel factor, int n) : factor_(std::move(factor)), n_(n) {
    if (n < 1) throw DomainError("product fold count must be >= 1");
    count_ = checked_power(factor_.starts.size(), n, UINT64_MAX / 2);
    starts_.reserve(factor_.starts.size());
    for (const auto& s : factor_.starts) starts_.push_back(to_double(s));
}

Cube ProductSet::cube(std::uint64_t index) const {
    if (index >= count_) throw DomainError("cube index out of range");
    Cube c;
    c.side = to_double(factor_.length);
    c.corner.resize(static_cast<std::size_t>(n_));
    const std::uint64_t base = starts_.size();
    for (int d = n_ - 1; d >= 0; --d) {
        c.corner[static_cast<std::size_t>(d)] = starts_[index % base];
        index /= base;
    }
    return c;
}

geometry::PointCloud ProductSet::sample(double offset) const {
    if (count_ > kMaxMaterialized) throw SizeError("product set too large to materialize");
    std::vector<double> flat;
    flat.reserve(count_ * static_cast<std::uint64_t>(n_));
    const double shift = offset * to_double(factor_.length);
    for (std::uint64_t i = 0; i < count_; ++i) {
        const auto c = cube(i);
        for (double x : c.corner) flat.push_back(x + shift);
    }
    return geometry::PointCloud(n_, std::move(flat));
}

geometry::WeightedMeasure product_measure(const geometry::WeightedMeasure& factor, int n, std::uint64_t max_atoms) {
    if (n < 1) throw DomainError("product fold count must be >= 1");
    const std::uint64_t base = factor.size();
    const std::uint64_t count = checked_power(base, n, max_atoms);
    const int d = factor.dim();
    std::vector<double> atoms;
    std::vector<double> weights;
    atoms.reserve(count * static_cast<std::uint64_t>(n * d));
    weights.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t rest = i;
        double w = 1.0;
        std::vector<std::uint64_t> digits(static_cast<std::size_t>(n));
        for (int k = n - 1; k >= 0; --k) {
            digits[static_cast<std::size_t>(k)] = rest % base;
            rest /= base;
        }
        for (auto idx : digits) {
            const auto a = factor.atom(idx);
            atoms.insert(atoms.end(), a.begin(), a.end());
            w *= factor.weight(idx);
        }
        weights.push_back(w);
    }
    return geometry::WeightedMeasure(n * d, std::move(atoms), std::move(weights));
}

}  // namespace fracspec::fractal
