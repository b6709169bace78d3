#include "fracspec/geometry/covering.hpp"

#include "fracspec/common/errors.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

namespace fracspec::geometry {

namespace {

void check_eps(double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("eps must be positive and finite");
}

void check_cap(const PointCloud& cloud, std::size_t cap) {
    if (cap > kMaxBruteForceCap)
        throw SizeError("brute-force cap " + std::to_string(cap) + " exceeds the hard limit " +
                        std::to_string(kMaxBruteForceCap));
    if (cloud.size() > cap)
        throw SizeError("exact mode needs at most " + std::to_string(cap) + " points, got " +
                        std::to_string(cloud.size()));
}

// within[i] has bit k set when |x_i - x_k| < r.
std::vector<std::uint32_t> neighbor_masks(const PointCloud& cloud, double r) {
    const std::size_t n = cloud.size();
    std::vector<std::uint32_t> within(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (distance(cloud.point(i), cloud.point(k)) < r) within[i] |= (1u << k);
    return within;
}

std::size_t exact_cover(const PointCloud& cloud, double eps) {
    const std::size_t n = cloud.size();
    if (n == 0) return 0;
    const auto within = neighbor_masks(cloud, eps);
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
    std::vector<std::uint32_t> covered(std::size_t{1} << n, 0);
    int best = static_cast<int>(n);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int low = std::countr_zero(mask);
        covered[mask] = covered[mask & (mask - 1)] | within[static_cast<std::size_t>(low)];
        if (covered[mask] == full) best = std::min(best, std::popcount(mask));
        if (mask == full) break;
    }
    return static_cast<std::size_t>(best);
}

std::vector<std::size_t> exact_packing(const PointCloud& cloud, double eps) {
    const std::size_t n = cloud.size();
    if (n == 0) return {};
    const auto conflict = neighbor_masks(cloud, 2.0 * eps);
    const std::uint32_t full = (1u << n) - 1u;
    std::vector<std::uint8_t> independent(std::size_t{1} << n, 0);
    independent[0] = 1;
    std::uint32_t best_mask = 0;
    int best = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int low = std::countr_zero(mask);
        const std::uint32_t rest = mask & (mask - 1);
        const std::uint32_t others = conflict[static_cast<std::size_t>(low)] & ~(1u << low);
        independent[mask] = independent[rest] && (others & rest) == 0;
        if (independent[mask] && std::popcount(mask) > best) {
            best = std::popcount(mask);
            best_mask = mask;
        }
        if (mask == full) break;
    }
    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k < n; ++k)
        if (best_mask & (1u << k)) chosen.push_back(k);
    return chosen;
}

}  // namespace

std::string to_string(CountMode mode) { return mode == CountMode::exact ? "exact" : "greedy"; }

bool Packing::is_disjoint() const {
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t k = i + 1; k < centers.size(); ++k)
            if (distance(centers.point(i), centers.point(k)) < 2.0 * radius) return false;
    return true;
}

FarthestPointOrder farthest_point_order(const PointCloud& cloud, double stop_below) {
    FarthestPointOrder result;
    const std::size_t n = cloud.size();
    if (n == 0) return result;
    std::vector<double> gap(n, std::numeric_limits<double>::infinity());
    std::size_t next = 0;
    double next_gap = std::numeric_limits<double>::infinity();
    while (true) {
        result.order.push_back(next);
        result.insertion_distance.push_back(next_gap);
        gap[next] = -1.0;
        const auto p = cloud.point(next);
        next_gap = -1.0;
        std::size_t arg = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (gap[i] < 0.0) continue;
            gap[i] = std::min(gap[i], distance(cloud.point(i), p));
            // strict comparison keeps the lexicographically smallest on ties
            if (gap[i] > next_gap) {
                next_gap = gap[i];
                arg = i;
            }
        }
        if (arg == n || next_gap < stop_below) break;
        next = arg;
    }
    return result;
}

std::size_t covering_number(const PointCloud& cloud, double eps, CountMode mode, std::size_t cap) {
    check_eps(eps);
    if (mode == CountMode::exact) {
        check_cap(cloud, cap);
        return exact_cover(cloud, eps);
    }
    return farthest_point_order(cloud, eps).order.size();
}

Packing packing(const PointCloud& cloud, double eps, CountMode mode, std::size_t cap) {
    check_eps(eps);
    std::vector<std::size_t> chosen;
    if (mode == CountMode::exact) {
        check_cap(cloud, cap);
        chosen = exact_packing(cloud, eps);
    } else {
        auto fpo = farthest_point_order(cloud, 2.0 * eps);
        for (std::size_t k = 0; k < fpo.order.size(); ++k)
            if (fpo.insertion_distance[k] >= 2.0 * eps) chosen.push_back(fpo.order[k]);
    }
    return Packing{cloud.empty() ? PointCloud(cloud.dim()) : cloud.subset(chosen), eps};
}

std::size_t packing_number(const PointCloud& cloud, double eps, CountMode mode, std::size_t cap) {
    return packing(cloud, eps, mode, cap).size();
}

PremeasureBound packing_premeasure_lower(const PointCloud& cloud, double s, double eps,
                                         std::optional<CountMode> mode, std::size_t cap) {
    check_eps(eps);
    if (!(s >= 0.0)) throw DomainError("exponent s must be non-negative");
    const CountMode used = mode.value_or(cloud.size() <= cap ? CountMode::exact : CountMode::greedy);
    PremeasureBound out;
    out.packing_count = packing_number(cloud, eps / 2.0, used, cap);
    out.value = static_cast<double>(out.packing_count) * std::pow(eps, s);
    out.s = s;
    out.eps = eps;
    out.mode = used;
    return out;
}

}  // namespace fracspec::geometry
