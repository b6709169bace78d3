#include "fracspec/fractal/cantor.hpp"

#include "fracspec/common/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace fracspec::fractal {

using fracspec::to_string;

std::string to_string(EtaRule rule) {
    switch (rule) {
        case EtaRule::constant: return "constant";
        case EtaRule::converging: return "converging";
        case EtaRule::custom: return "custom";
    }
    return "constant";
}

EtaRule parse_eta_rule(const std::string& text) {
    if (text == "constant") return EtaRule::constant;
    if (text == "converging") return EtaRule::converging;
    if (text == "custom") return EtaRule::custom;
    throw ConfigError("unknown eta rule '" + text + "'");
}

Rational CantorParams::eta_at(int j) const {
    if (j < 1) throw DomainError("level ratios are indexed from 1");
    switch (rule) {
        case EtaRule::constant: return eta;
        case EtaRule::converging: {
            const Rational k = j + 1;
            return eta * (1 - 1 / (k * k));
        }
        case EtaRule::custom:
            if (static_cast<std::size_t>(j) > custom_etas.size())
                throw DomainError("custom eta list has no entry for level " + std::to_string(j));
            return custom_etas[static_cast<std::size_t>(j - 1)];
    }
    return eta;
}

double CantorParams::dimension() const {
    return std::log(static_cast<double>(N)) / std::log(1.0 / to_double(eta));
}

CantorParams CantorParams::middle_thirds() { return CantorParams{}; }

bool ValidationReport::violates(const std::string& constraint) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const ConstraintViolation& v) { return v.constraint == constraint; });
}

ValidationReport validate_params(const CantorParams& p) {
    ValidationReport report;
    auto fail = [&](std::string constraint, std::string message) {
        report.valid = false;
        report.violations.push_back({std::move(constraint), std::move(message)});
    };
    if (p.N < 2) fail("N>=2", "N must be at least 2");
    if (p.eta <= 0) fail("eta>0", "eta must be positive");
    if (p.eta > 0 && p.N * p.eta >= 1) fail("N*eta<1", "N*eta = " + to_string(Rational(p.N * p.eta)) + " is not below 1");

    if (p.eta > 0 && p.eta < 1 && p.N >= 2) {
        report.beta_computed = p.dimension();
        if (!(report.beta_computed > 0.0 && report.beta_computed < 1.0))
            fail("0<beta<1", "beta = log N / log(1/eta) is outside (0, 1)");
        if (p.beta && std::abs(*p.beta - report.beta_computed) > 1e-12)
            fail("N*eta^beta=1", "declared beta disagrees with log N / log(1/eta)");
    } else {
        fail("0<beta<1", "beta is undefined for these N, eta");
    }

    if (static_cast<int>(p.points.size()) != p.N) {
        fail("point-count", "expected " + std::to_string(p.N) + " translates, got " + std::to_string(p.points.size()));
    } else if (!p.points.empty()) {
        if (p.points.front() < 0) fail("a_1>=0", "first translate is negative");
        if (p.points.back() > 1 - p.eta) fail("a_N<=1-eta", "last translate exceeds 1 - eta");
        for (std::size_t k = 0; k + 1 < p.points.size(); ++k) {
            if (p.points[k + 1] - p.points[k] <= p.eta) {
                fail("spacing>eta", "a_" + std::to_string(k + 2) + " - a_" + std::to_string(k + 1) +
                                        " is not larger than eta");
                break;
            }
        }
    }

    if (p.rule == EtaRule::custom) {
        if (p.custom_etas.empty()) fail("custom-etas", "custom rule needs a non-empty eta list");
        for (std::size_t k = 0; k < p.custom_etas.size(); ++k) {
            const Rational j1 = static_cast<long>(k) + 2;
            const Rational lower = p.eta * (1 - 1 / (j1 * j1));
            if (p.custom_etas[k] < lower || p.custom_etas[k] > p.eta) {
                fail("eta_j-bounds", "eta_" + std::to_string(k + 1) + " is outside [eta(1-1/(j+1)^2), eta]");
                break;
            }
            if (k > 0 && p.custom_etas[k] < p.custom_etas[k - 1]) {
                fail("eta_j-nondecreasing", "eta_j must be non-decreasing");
                break;
            }
        }
    }
    return report;
}

void require_valid(const CantorParams& params) {
    const auto report = validate_params(params);
    if (report.valid) return;
    std::ostringstream msg;
    msg << "invalid Cantor parameters:";
    for (const auto& v : report.violations) msg << " [" << v.constraint << "] " << v.message << ';';
    throw DomainError(msg.str());
}

Rational level_length(const CantorParams& params, int j) {
    Rational length = 1;
    for (int m = 1; m <= j; ++m) length *= params.eta_at(m);
    return length;
}

CantorLevel build_level(const CantorParams& params, int j, const LevelBudget& budget) {
    require_valid(params);
    if (j < 0) throw DomainError("level must be non-negative");
    if (j > budget.max_level)
        throw SizeError("level " + std::to_string(j) + " exceeds the precision budget of " +
                        std::to_string(budget.max_level));
    double count = std::pow(static_cast<double>(params.N), j);
    if (count > static_cast<double>(budget.max_intervals))
        throw SizeError("level " + std::to_string(j) + " would hold " + std::to_string(count) + " intervals");

    std::vector<Rational> starts{Rational(0)};
    Rational scale = 1;  // eta_1 ... eta_{m-1}
    for (int m = 1; m <= j; ++m) {
        std::vector<Rational> next;
        next.reserve(starts.size() * static_cast<std::size_t>(params.N));
        for (const auto& s : starts)
            for (const auto& a : params.points) next.push_back(s + a * scale);
        starts = std::move(next);
        scale *= params.eta_at(m);
    }
    CantorLevel level;
    level.level = j;
    level.length = scale;
    std::vector<geometry::Interval> members;
    members.reserve(starts.size());
    for (const auto& s : starts) members.push_back({s, scale});
    level.intervals = geometry::IntervalUnion(std::move(members));
    level.starts = std::move(starts);
    if (level.intervals.size() != level.starts.size())
        throw DomainError("level intervals overlap; spacing constraint violated");
    return level;
}

std::vector<Rational> sample_salem_points(int N, const Rational& eta, std::uint64_t seed, std::size_t max_draws) {
    if (N < 2) throw DomainError("need at least two translates");
    if (eta <= 0 || N * eta >= 1) throw DomainError("need 0 < eta and N*eta < 1");
    if ((N - 1) * eta >= 1 - eta)
        throw DomainError("no room for " + std::to_string(N) + " translates spaced more than eta = " + to_string(eta));
    std::mt19937_64 rng(seed);
    const Rational span = 1 - eta;
    const BigInt grid = BigInt(1) << 32;
    for (std::size_t draw = 0; draw < max_draws; ++draw) {
        std::vector<Rational> a;
        a.reserve(static_cast<std::size_t>(N));
        for (int k = 0; k < N; ++k) {
            const auto u = static_cast<std::uint64_t>(rng() >> 32);
            a.push_back(span * Rational(BigInt(u), grid));
        }
        std::sort(a.begin(), a.end());
        bool ok = true;
        for (int k = 0; k + 1 < N && ok; ++k) ok = a[static_cast<std::size_t>(k + 1)] - a[static_cast<std::size_t>(k)] > eta;
        if (ok) return a;
    }
    throw RetryError("rejection sampling exhausted " + std::to_string(max_draws) + " draws");
}

CantorMeasure natural_measure(const CantorParams& params, int J, const LevelBudget& budget) {
    if (J < 1) throw DomainError("measure level must be >= 1");
    const auto level = build_level(params, J, budget);
    const double half = 0.5 * to_double(level.length);
    std::vector<double> atoms;
    atoms.reserve(level.starts.size());
    for (const auto& s : level.starts) atoms.push_back(to_double(s) + half);
    std::sort(atoms.begin(), atoms.end());
    const double w = std::pow(static_cast<double>(params.N), -J);
    std::vector<double> weights(atoms.size(), w);
    return CantorMeasure{params, J, geometry::WeightedMeasure(1, std::move(atoms), std::move(weights))};
}

std::vector<double> interval_masses(const CantorMeasure& measure, const CantorLevel& level) {
    const auto& m = measure.measure;
    std::vector<double> masses;
    masses.reserve(level.starts.size());
    const double len = to_double(level.length);
    for (const auto& s : level.starts) {
        const double lo = to_double(s), hi = lo + len;
        std::vector<double> inside;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const double x = m.atom(i)[0];
            if (x >= lo && x <= hi) inside.push_back(m.weight(i));
        }
        masses.push_back(pairwise_sum(inside));
    }
    return masses;
}

}  // namespace fracspec::fractal
