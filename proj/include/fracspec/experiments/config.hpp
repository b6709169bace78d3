#pragma once

#include "fracspec/common/numeric.hpp"
#include "fracspec/fractal/cantor.hpp"
#include "fracspec/geometry/scale_sweep.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fracspec::experiments {

/// Flat key-value configuration with dotted section prefixes
/// (cantor.N, sweep.eps_max, mollify.p, ...). Rationals are written "p/q".
struct ExperimentConfig {
    std::string id;
    std::map<std::string, std::string> keys;
    std::optional<std::uint64_t> seed;
    std::filesystem::path out = "out";
    unsigned jobs = 1;

    bool has(const std::string& key) const { return keys.count(key) != 0; }
    std::string text(const std::string& key, const std::string& fallback) const;
    double number(const std::string& key, double fallback) const;
    int integer(const std::string& key, int fallback) const;
    Rational rational(const std::string& key, const Rational& fallback) const;
    std::vector<double> numbers(const std::string& key, const std::vector<double>& fallback) const;

    /// Cantor parameters under "cantor."; the run seed fills cantor.seed when absent.
    fractal::CantorParams cantor() const;
    /// sweep.eps_max, sweep.ratio, sweep.count.
    geometry::ScaleSweep sweep(const geometry::ScaleSweep& fallback) const;

    /// Sorted key = value lines plus the seed; input to the report digest.
    std::string canonical() const;
};

/// Reads `experiment`, `seed`, `jobs` and `out` as top-level keys, keeping the rest.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

const std::vector<std::string>& experiment_ids();

}  // namespace fracspec::experiments
