#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "hfss/sim.hpp"

namespace hfss {

/// Flat `section.key = value` text configuration. Blank lines and lines
/// starting with '#' are ignored; keys are case-sensitive.
class ConfigMap {
public:
    static ConfigMap parse_file(const std::filesystem::path& path);
    static ConfigMap parse_string(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_number(const std::string& key) const;
    double get_number(const std::string& key, double fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    /// Sweep values: either "lo:hi:step" (inclusive) or a comma list.
    std::vector<double> get_sweep(const std::string& key) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

private:
    std::map<std::string, std::string> entries_;
    std::string origin_;
};

/// Parses "lo:hi:step" or "a,b,c" into a list of powers.
/// Throws config_error on reversed ranges or non-positive steps.
std::vector<double> parse_sweep(const std::string& text, const std::string& key);

/// Builds a scenario from a config map. Throws config_error naming the first
/// offending key.
ScenarioConfig scenario_from_config(const ConfigMap& cfg);

/// All schema and invariant violations, one message each; empty means valid.
std::vector<std::string> validate_scenario_config(const ConfigMap& cfg);

/// Canonical `key = value` echo of a parsed scenario (normalized units,
/// defaults filled in), one entry per line when joined.
std::map<std::string, std::string> normalized_config(const ScenarioConfig& cfg);

}  // namespace hfss
