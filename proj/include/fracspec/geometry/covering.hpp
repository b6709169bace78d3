#pragma once

#include "fracspec/geometry/point_cloud.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fracspec::geometry {

/// exact: exhaustive subset search (small clouds only).
/// greedy: deterministic farthest-point traversal.
enum class CountMode { exact, greedy };

std::string to_string(CountMode mode);

inline constexpr std::size_t kDefaultBruteForceCap = 15;
/// Hard ceiling for exact mode; the search tables hold 2^cap entries.
inline constexpr std::size_t kMaxBruteForceCap = 24;

/// Disjoint open balls of a common radius, centred in the source cloud.
/// Open balls of radius r are disjoint iff their centres are >= 2r apart.
struct Packing {
    PointCloud centers;
    double radius = 0.0;

    std::size_t size() const noexcept { return centers.size(); }
    bool is_disjoint() const;
};

/// Covering number with ball centres restricted to the cloud (open balls).
/// Greedy mode returns an upper bound on the exact value.
///
/// Either way the result N~ satisfies N~(2 eps) <= P(eps) <= N~(eps / 2).
std::size_t covering_number(const PointCloud& cloud, double eps, CountMode mode,
                            std::size_t brute_force_cap = kDefaultBruteForceCap);

/// Maximum packing by open eps-balls centred in the cloud. Greedy mode
/// returns a maximal (not necessarily maximum) packing.
Packing packing(const PointCloud& cloud, double eps, CountMode mode,
                std::size_t brute_force_cap = kDefaultBruteForceCap);

std::size_t packing_number(const PointCloud& cloud, double eps, CountMode mode,
                           std::size_t brute_force_cap = kDefaultBruteForceCap);

struct PremeasureBound {
    double value = 0.0;       ///< P(cloud, eps/2) * eps^s
    std::size_t packing_count = 0;
    double s = 0.0;
    double eps = 0.0;
    CountMode mode = CountMode::greedy;
    bool is_lower_bound = true;  ///< never the supremum over variable-radius packings
};

/// Lower bound P(A, eps/2) eps^s on the packing pre-measure P^s_eps(A).
/// Uses exact packing when the cloud fits the cap, greedy otherwise; both
/// are lower bounds on P.
PremeasureBound packing_premeasure_lower(const PointCloud& cloud, double s, double eps,
                                         std::optional<CountMode> mode = std::nullopt,
                                         std::size_t brute_force_cap = kDefaultBruteForceCap);

/// Farthest-point traversal from the lexicographically smallest point.
/// `insertion_distance[k]` is the distance from the k-th chosen point to the
/// previously chosen ones (infinity for the first); it is non-increasing.
struct FarthestPointOrder {
    std::vector<std::size_t> order;
    std::vector<double> insertion_distance;
};

/// Runs the traversal until every remaining point is within `stop_below`
/// of the chosen set (or the cloud is exhausted).
FarthestPointOrder farthest_point_order(const PointCloud& cloud, double stop_below);

}  // namespace fracspec::geometry
