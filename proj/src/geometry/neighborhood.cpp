#include "fracspec/geometry/neighborhood.hpp"

#include "fracspec/common/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>

namespace fracspec::geometry {

namespace {

void check_eps(double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("eps must be positive and finite");
}

double merged_length(std::vector<std::pair<double, double>> spans) {
    std::sort(spans.begin(), spans.end());
    std::vector<double> pieces;
    double lo = 0.0, hi = 0.0;
    bool open = false;
    for (const auto& [a, b] : spans) {
        if (open && a <= hi) {
            hi = std::max(hi, b);
            continue;
        }
        if (open) pieces.push_back(hi - lo);
        lo = a;
        hi = b;
        open = true;
    }
    if (open) pieces.push_back(hi - lo);
    return pairwise_sum(pieces);
}

struct CellKeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& key) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto v : key) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

MinkowskiSweep finish_sweep(MinkowskiSweep out) {
    double run = 0.0;
    out.min_ratio = std::numeric_limits<double>::infinity();
    for (const auto& p : out.series) {
        run = std::max(run, p.value);
        out.running_max.push_back(run);
        out.min_ratio = std::min(out.min_ratio, p.value);
    }
    out.max_ratio = run;
    const std::size_t half = out.series.size() / 2;
    for (std::size_t k = half; k < out.series.size(); ++k) out.tail_max = std::max(out.tail_max, out.series[k].value);
    if (out.series.empty()) out.min_ratio = 0.0;
    return out;
}

void check_alpha(double alpha, int n) {
    if (!(alpha >= 0.0 && alpha <= n)) throw DomainError("alpha must lie in [0, n]");
}

}  // namespace

Rational eps_neighborhood_volume(const IntervalUnion& set, const Rational& eps) {
    if (eps <= 0) throw DomainError("eps must be positive");
    if (set.empty()) return Rational(0);
    return set.fattened(eps).measure();
}

VolumeEstimate eps_neighborhood_volume(const IntervalUnion& set, double eps) {
    check_eps(eps);
    VolumeEstimate out;
    out.method = "interval-union";
    if (set.empty()) {
        out.empty_set = true;
        return out;
    }
    std::vector<std::pair<double, double>> spans;
    for (const auto& [a, b] : set.to_double()) spans.emplace_back(a - eps, b + eps);
    out.value = out.low = out.high = merged_length(std::move(spans));
    return out;
}

VolumeEstimate eps_neighborhood_volume(const PointCloud& cloud, double eps) {
    check_eps(eps);
    if (cloud.empty()) {
        VolumeEstimate out;
        out.empty_set = true;
        out.method = "empty";
        return out;
    }
    if (cloud.dim() == 1) {
        std::vector<std::pair<double, double>> spans;
        for (std::size_t i = 0; i < cloud.size(); ++i) spans.emplace_back(cloud.point(i)[0] - eps, cloud.point(i)[0] + eps);
        VolumeEstimate out;
        out.method = "interval-union";
        out.value = out.low = out.high = merged_length(std::move(spans));
        return out;
    }
    if (cloud.dim() == 2) {
        VolumeEstimate out;
        out.method = "disk-union";
        out.value = out.low = out.high = disk_union_area(cloud, eps);
        return out;
    }
    return occupancy_grid_volume(cloud, eps);
}

VolumeEstimate occupancy_grid_volume(const PointCloud& cloud, double eps, double cell_fraction) {
    check_eps(eps);
    if (!(cell_fraction > 0.0 && cell_fraction <= 1.0)) throw DomainError("cell fraction must lie in (0, 1]");
    VolumeEstimate out;
    out.method = "occupancy-grid";
    if (cloud.empty()) {
        out.empty_set = true;
        return out;
    }
    const int n = cloud.dim();
    const double h = eps * cell_fraction;
    const double half_diag = 0.5 * h * std::sqrt(static_cast<double>(n));
    const auto reach = static_cast<std::int64_t>(std::ceil((eps + half_diag) / h)) + 1;

    double box = 1.0;
    for (int d = 0; d < n; ++d) box *= static_cast<double>(2 * reach + 1);
    if (box * static_cast<double>(cloud.size()) > 2e8) throw SizeError("occupancy grid too large");

    std::unordered_map<std::vector<std::int64_t>, double, CellKeyHash> nearest;
    std::vector<std::int64_t> base(static_cast<std::size_t>(n)), key(static_cast<std::size_t>(n));
    std::vector<double> center(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto p = cloud.point(i);
        for (int d = 0; d < n; ++d) base[static_cast<std::size_t>(d)] = static_cast<std::int64_t>(std::floor(p[static_cast<std::size_t>(d)] / h));
        std::vector<std::int64_t> offset(static_cast<std::size_t>(n), -reach);
        while (true) {
            for (int d = 0; d < n; ++d) {
                const auto u = static_cast<std::size_t>(d);
                key[u] = base[u] + offset[u];
                center[u] = (static_cast<double>(key[u]) + 0.5) * h;
            }
            const double dist = distance(center, p);
            if (dist - half_diag < eps) {
                auto [it, inserted] = nearest.try_emplace(key, dist);
                if (!inserted) it->second = std::min(it->second, dist);
            }
            int d = 0;
            for (; d < n; ++d) {
                auto& o = offset[static_cast<std::size_t>(d)];
                if (++o <= reach) break;
                o = -reach;
            }
            if (d == n) break;
        }
    }
    const double cell_volume = std::pow(h, n);
    std::size_t inside = 0, centered = 0, touching = 0;
    for (const auto& [k, dist] : nearest) {
        ++touching;
        if (dist < eps) ++centered;
        if (dist + half_diag < eps) ++inside;
    }
    out.value = static_cast<double>(centered) * cell_volume;
    out.low = static_cast<double>(inside) * cell_volume;
    out.high = static_cast<double>(touching) * cell_volume;
    return out;
}

double disk_union_area(const PointCloud& centers, double radius) {
    check_eps(radius);
    if (centers.dim() != 2) throw DomainError("disk union needs planar points");
    const std::size_t n = centers.size();
    const double two_pi = 2.0 * kPi;
    std::vector<double> pieces;
    for (std::size_t i = 0; i < n; ++i) {
        const double cx = centers.point(i)[0], cy = centers.point(i)[1];
        std::vector<std::pair<double, double>> blocked;
        bool swallowed = false;
        for (std::size_t k = 0; k < n && !swallowed; ++k) {
            if (k == i) continue;
            const double dx = centers.point(k)[0] - cx, dy = centers.point(k)[1] - cy;
            const double d = std::hypot(dx, dy);
            if (d >= 2.0 * radius) continue;
            if (d == 0.0) {
                swallowed = k < i;
                continue;
            }
            const double mid = std::atan2(dy, dx);
            const double half = std::acos(d / (2.0 * radius));
            double a = mid - half, b = mid + half;
            a = std::fmod(a + 2.0 * two_pi, two_pi);
            b = a + 2.0 * half;
            if (b > two_pi) {
                blocked.emplace_back(a, two_pi);
                blocked.emplace_back(0.0, b - two_pi);
            } else {
                blocked.emplace_back(a, b);
            }
        }
        if (swallowed) continue;
        std::sort(blocked.begin(), blocked.end());
        auto arc = [&](double a, double b) {
            if (b <= a) return;
            pieces.push_back(0.5 * (radius * radius * (b - a) + radius * cx * (std::sin(b) - std::sin(a)) -
                                    radius * cy * (std::cos(b) - std::cos(a))));
        };
        double cursor = 0.0;
        for (const auto& [a, b] : blocked) {
            if (a > cursor) arc(cursor, a);
            cursor = std::max(cursor, b);
        }
        arc(cursor, two_pi);
    }
    return pairwise_sum(pieces);
}

MinkowskiSweep minkowski_ratio_sweep(const IntervalUnion& set, double alpha, const ScaleSweep& sweep) {
    check_alpha(alpha, 1);
    MinkowskiSweep out;
    out.alpha = alpha;
    out.n = 1;
    out.empty_set = set.empty();
    for (double eps : sweep.scales()) {
        const auto vol = eps_neighborhood_volume(set, eps);
        const double scale = std::pow(eps, alpha - 1.0);
        out.series.push_back({eps, scale * vol.value, scale * vol.low, scale * vol.high});
    }
    return finish_sweep(std::move(out));
}

MinkowskiSweep minkowski_ratio_sweep(const PointCloud& set, double alpha, const ScaleSweep& sweep) {
    check_alpha(alpha, set.dim());
    MinkowskiSweep out;
    out.alpha = alpha;
    out.n = set.dim();
    out.empty_set = set.empty();
    for (double eps : sweep.scales()) {
        const auto vol = eps_neighborhood_volume(set, eps);
        const double scale = std::pow(eps, alpha - set.dim());
        out.series.push_back({eps, scale * vol.value, scale * vol.low, scale * vol.high});
    }
    return finish_sweep(std::move(out));
}

Rational minkowski_ratio_exact(const IntervalUnion& set, const Rational& eps, const Rational& eps_pow_alpha) {
    if (eps_pow_alpha <= 0) throw DomainError("eps^alpha must be positive");
    return eps_pow_alpha * eps_neighborhood_volume(set, eps) / eps;
}

}  // namespace fracspec::geometry
