#include "fracspec/experiments/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace fracspec::experiments {

void ReportRecord::metric(std::string name, double value, std::string unit, std::string normalization) {
    metrics.push_back({std::move(name), value, std::move(unit), std::move(normalization)});
}

void ReportRecord::flag(std::string name, bool pass) { flags.push_back({std::move(name), pass}); }

void ReportRecord::note(std::string key, std::string value) { notes.emplace_back(std::move(key), std::move(value)); }

bool ReportRecord::all_pass() const {
    return std::all_of(flags.begin(), flags.end(), [](const Flag& f) { return f.pass; });
}

const Metric* ReportRecord::find(const std::string& name) const {
    for (const auto& m : metrics)
        if (m.name == name) return &m;
    return nullptr;
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex_digest(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

std::string report_to_json(const ReportRecord& record) {
    nlohmann::ordered_json j;
    j["experiment"] = record.id;
    j["digest"] = record.digest;
    auto metrics = nlohmann::ordered_json::array();
    for (const auto& m : record.metrics) {
        nlohmann::ordered_json row;
        row["name"] = m.name;
        // JSON has no infinity; non-finite values are written as strings
        if (std::isfinite(m.value))
            row["value"] = m.value;
        else
            row["value"] = std::isnan(m.value) ? "nan" : (m.value > 0 ? "inf" : "-inf");
        row["unit"] = m.unit;
        row["normalization"] = m.normalization;
        metrics.push_back(std::move(row));
    }
    j["metrics"] = std::move(metrics);
    auto flags = nlohmann::ordered_json::object();
    for (const auto& f : record.flags) flags[f.name] = f.pass;
    j["flags"] = std::move(flags);
    j["pass"] = record.all_pass();
    j["artifacts"] = record.artifacts;
    auto notes = nlohmann::ordered_json::object();
    for (const auto& [key, value] : record.notes) notes[key] = value;
    j["notes"] = std::move(notes);
    return j.dump(2) + "\n";
}

}  // namespace fracspec::experiments
