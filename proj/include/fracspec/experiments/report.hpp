#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fracspec::experiments {

struct Metric {
    std::string name;
    double value = 0.0;
    std::string unit;           ///< "count", "ratio", "1", ...
    std::string normalization;  ///< how the value is scaled
};

struct Flag {
    std::string name;
    bool pass = false;
};

struct ReportRecord {
    std::string id;
    std::string digest;  ///< FNV-1a 64 of the canonical config, hex
    std::vector<Metric> metrics;
    std::vector<Flag> flags;
    std::vector<std::string> artifacts;
    std::vector<std::pair<std::string, std::string>> notes;  ///< text metadata: modes, caps, sampling
    double wall_seconds = 0.0;  ///< kept out of report.json so records stay byte-identical

    void metric(std::string name, double value, std::string unit, std::string normalization = "none");
    void flag(std::string name, bool pass);
    void note(std::string key, std::string value);
    bool all_pass() const;
    const Metric* find(const std::string& name) const;
};

std::uint64_t fnv1a64(const std::string& text);
std::string hex_digest(std::uint64_t value);

std::string report_to_json(const ReportRecord& record);

}  // namespace fracspec::experiments
