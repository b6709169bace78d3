#include "fracspec/fractal/params_io.hpp"

#include "fracspec/common/errors.hpp"

#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace fracspec::fractal {

using fracspec::to_string;

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_rational(item));
    }
    return out;
}

std::string join(const std::vector<Rational>& values) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out += ", ";
        out += to_string(values[k]);
    }
    return out;
}

}  // namespace

std::map<std::string, std::string> parse_key_values(std::istream& in) {
    std::map<std::string, std::string> keys;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(number) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        if (key.empty()) throw ConfigError("line " + std::to_string(number) + ": empty key");
        keys[key] = trim(line.substr(eq + 1));
    }
    return keys;
}

CantorParams params_from_keys(const std::map<std::string, std::string>& keys, const std::string& prefix) {
    auto get = [&](const std::string& name) -> const std::string* {
        auto it = keys.find(prefix + name);
        return it == keys.end() ? nullptr : &it->second;
    };
    CantorParams p;
    try {
        if (auto v = get("N")) p.N = std::stoi(*v);
        if (auto v = get("eta")) p.eta = parse_rational(*v);
        if (auto v = get("beta")) p.beta = std::stod(*v);
        if (auto v = get("seed")) p.seed = std::stoull(*v);
        if (auto v = get("rule")) p.rule = parse_eta_rule(*v);
        if (auto v = get("etas")) p.custom_etas = parse_list(*v);
        if (auto v = get("points")) {
            if (*v == "random") {
                p.points = sample_salem_points(p.N, p.eta, p.seed);
            } else {
                p.points = parse_list(*v);
            }
        } else if (get("N") || get("eta")) {
            throw ConfigError("parameter set needs '" + prefix + "points'");
        }
    } catch (const std::invalid_argument&) {
        throw ConfigError("malformed numeric value in Cantor parameters");
    } catch (const std::out_of_range&) {
        throw ConfigError("numeric value out of range in Cantor parameters");
    }
    return p;
}

CantorParams read_params(std::istream& in) { return params_from_keys(parse_key_values(in)); }

void write_params(std::ostream& out, const CantorParams& p) {
    out << "N = " << p.N << '\n';
    out << "eta = " << to_string(p.eta) << '\n';
    if (p.beta) out << "beta = " << std::setprecision(std::numeric_limits<double>::max_digits10) << *p.beta << '\n';
    out << "points = " << join(p.points) << '\n';
    out << "rule = " << to_string(p.rule) << '\n';
    if (p.rule == EtaRule::custom) out << "etas = " << join(p.custom_etas) << '\n';
    out << "seed = " << p.seed << '\n';
}

void write_level_csv(std::ostream& out, const CantorLevel& level) {
    out << "start_numerator,start_denominator,length_numerator,length_denominator\n";
    for (const auto& iv : level.intervals.intervals()) {
        out << boost::multiprecision::numerator(iv.start) << ',' << boost::multiprecision::denominator(iv.start) << ','
            << boost::multiprecision::numerator(iv.length) << ',' << boost::multiprecision::denominator(iv.length)
            << '\n';
    }
}

}  // namespace fracspec::fractal
