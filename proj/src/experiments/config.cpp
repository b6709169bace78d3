#include "fracspec/experiments/config.hpp"

#include "fracspec/common/errors.hpp"
#include "fracspec/fractal/params_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fracspec::experiments {

namespace {

template <typename T, typename Parse>
T parse_or_throw(const std::string& key, const std::string& value, Parse parse) {
    try {
        std::size_t used = 0;
        T out = parse(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return out;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse '" + value + "'");
    }
}

}  // namespace

std::string ExperimentConfig::text(const std::string& key, const std::string& fallback) const {
    auto it = keys.find(key);
    return it == keys.end() ? fallback : it->second;
}

double ExperimentConfig::number(const std::string& key, double fallback) const {
    auto it = keys.find(key);
    if (it == keys.end()) return fallback;
    if (it->second.find('/') != std::string::npos) return to_double(rational(key, 0));
    return parse_or_throw<double>(key, it->second, [](const std::string& s, std::size_t* n) { return std::stod(s, n); });
}

int ExperimentConfig::integer(const std::string& key, int fallback) const {
    auto it = keys.find(key);
    if (it == keys.end()) return fallback;
    return parse_or_throw<int>(key, it->second, [](const std::string& s, std::size_t* n) { return std::stoi(s, n); });
}

Rational ExperimentConfig::rational(const std::string& key, const Rational& fallback) const {
    auto it = keys.find(key);
    if (it == keys.end()) return fallback;
    try {
        return parse_rational(it->second);
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse '" + it->second + "' as a rational");
    }
}

std::vector<double> ExperimentConfig::numbers(const std::string& key, const std::vector<double>& fallback) const {
    auto it = keys.find(key);
    if (it == keys.end()) return fallback;
    std::vector<double> out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) continue;
        out.push_back(item.find('/') != std::string::npos
                          ? to_double(parse_rational(item))
                          : parse_or_throw<double>(key, item, [](const std::string& s, std::size_t* n) { return std::stod(s, n); }));
    }
    if (out.empty()) throw ConfigError("key '" + key + "': empty list");
    return out;
}

fractal::CantorParams ExperimentConfig::cantor() const {
    auto local = keys;
    if (!local.count("cantor.seed") && seed) local["cantor.seed"] = std::to_string(*seed);
    if (local.count("cantor.points") && local["cantor.points"] == "random" && !local.count("cantor.seed"))
        throw ConfigError("random Cantor points need a seed");
    auto params = fractal::params_from_keys(local, "cantor.");
    const auto report = fractal::validate_params(params);
    if (!report.valid) {
        std::string message = "invalid Cantor parameters:";
        for (const auto& v : report.violations) message += " [" + v.constraint + "] " + v.message + ";";
        throw ConfigError(message);
    }
    return params;
}

geometry::ScaleSweep ExperimentConfig::sweep(const geometry::ScaleSweep& fallback) const {
    geometry::ScaleSweep s;
    s.eps_max = number("sweep.eps_max", fallback.eps_max);
    s.ratio = number("sweep.ratio", fallback.ratio);
    s.count = integer("sweep.count", fallback.count);
    try {
        s.validate();
    } catch (const DomainError& e) {
        throw ConfigError(std::string("sweep: ") + e.what());
    }
    return s;
}

std::string ExperimentConfig::canonical() const {
    std::ostringstream out;
    out << "experiment = " << id << '\n';
    for (const auto& [k, v] : keys) out << k << " = " << v << '\n';
    out << "seed = " << (seed ? std::to_string(*seed) : "none") << '\n';
    return out.str();
}

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig config;
    config.keys = fractal::parse_key_values(in);
    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = config.keys.find(key);
        if (it == config.keys.end()) return std::nullopt;
        std::string value = it->second;
        config.keys.erase(it);
        return value;
    };
    if (auto v = take("experiment")) config.id = *v;
    if (auto v = take("seed")) config.seed = parse_or_throw<std::uint64_t>("seed", *v, [](const std::string& s, std::size_t* n) { return std::stoull(s, n); });
    if (auto v = take("jobs")) config.jobs = static_cast<unsigned>(parse_or_throw<int>("jobs", *v, [](const std::string& s, std::size_t* n) { return std::stoi(s, n); }));
    if (auto v = take("out")) config.out = *v;
    return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path.string());
    return parse_config(in);
}

const std::vector<std::string>& experiment_ids() {
    static const std::vector<std::string> ids{"construct", "dim", "minkowski", "fourier", "mollify", "tauberian"};
    return ids;
}

}  // namespace fracspec::experiments
