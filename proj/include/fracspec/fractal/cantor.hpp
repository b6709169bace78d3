#pragma once

#include "fracspec/common/numeric.hpp"
#include "fracspec/geometry/interval_union.hpp"
#include "fracspec/geometry/measure.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fracspec::fractal {

/// How the level ratios eta_j are chosen.
///   constant:   eta_j = eta
///   converging: eta_j = eta (1 - 1/(j+1)^2), increasing to eta
///   custom:     an explicit list, checked against the same two-sided bound
enum class EtaRule { constant, converging, custom };

std::string to_string(EtaRule rule);
EtaRule parse_eta_rule(const std::string& text);

/// Parameters of the N-point Cantor construction: N translates a_1 < ... < a_N
/// in [0, 1 - eta] more than eta apart, with N eta^beta = 1.
struct CantorParams {
    int N = 2;
    Rational eta{1, 3};
    std::optional<double> beta;  ///< declared dimension; derived when absent
    std::vector<Rational> points{Rational(0), Rational(2, 3)};
    EtaRule rule = EtaRule::constant;
    std::vector<Rational> custom_etas;
    std::uint64_t seed = 0;

    /// eta_j for j >= 1.
    Rational eta_at(int j) const;
    /// log N / log(1/eta).
    double dimension() const;

    static CantorParams middle_thirds();
};

struct ConstraintViolation {
    std::string constraint;
    std::string message;
};

struct ValidationReport {
    bool valid = true;
    double beta_computed = 0.0;
    std::vector<ConstraintViolation> violations;

    bool violates(const std::string& constraint) const;
};

ValidationReport validate_params(const CantorParams& params);

/// Throws DomainError listing every violated constraint.
void require_valid(const CantorParams& params);

/// Budget for exact level construction.
struct LevelBudget {
    int max_level = 20;
    std::size_t max_intervals = std::size_t{1} << 22;
};

/// Level j of the construction: N^j closed intervals of length eta_1 ... eta_j.
struct CantorLevel {
    int level = 0;
    Rational length{1};
    geometry::IntervalUnion intervals;
    /// Starts in construction order (digit expansion order), not sorted.
    std::vector<Rational> starts;
};

CantorLevel build_level(const CantorParams& params, int j, const LevelBudget& budget = {});

/// prod_{m <= j} eta_m, exactly.
Rational level_length(const CantorParams& params, int j);

/// Uniform rejection sampling of N translates satisfying every spacing
/// constraint. Draws are 32-bit grid points of [0, 1 - eta], so the result
/// is exact and bit-reproducible for a fixed seed.
std::vector<Rational> sample_salem_points(int N, const Rational& eta, std::uint64_t seed,
                                          std::size_t max_draws = 1'000'000);

/// Natural self-similar probability measure discretized at level J:
/// N^J atoms of weight N^-J at the interval midpoints.
struct CantorMeasure {
    CantorParams params;
    int level = 0;
    geometry::WeightedMeasure measure;
};

CantorMeasure natural_measure(const CantorParams& params, int J, const LevelBudget& budget = {});

/// Mass the measure assigns to each interval of `level` (construction order).
std::vector<double> interval_masses(const CantorMeasure& measure, const CantorLevel& level);

}  // namespace fracspec::fractal
