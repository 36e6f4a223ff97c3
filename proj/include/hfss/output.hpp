#pragma once

#include <map>
#include <string>
#include <vector>

#include "hfss/sim.hpp"

namespace hfss {

enum class OutputFormat { csv, json };

/// 12-significant-digit decimal form; parses back to the same double in both
/// the CSV and JSON writers so the two formats carry identical values.
std::string format_sig12(double x);

/// Flattened sweep rows. Header:
///   scenario,seed,stage,p_c,gain_lo,gain_hi,gain_kind,confidence,
///   p_c_d,penalty_actual,penalty_predicted,penalty_unit,r_c,note
/// RFC-4180-style quoting; cells that do not apply stay empty.
std::string to_csv(const SweepResult& result);

/// One top-level object with `meta` (scenario, seed, version, config echo)
/// and `rows` mirroring the CSV rows (null for empty cells).
std::string to_json(const SweepResult& result,
                    const std::map<std::string, std::string>& config_echo);

/// PR adaptation curves, columns p_c,p_p,r_p.
std::string curve_to_csv(const std::vector<PolicyCurvePoint>& curve);
std::string curve_to_json(const std::vector<PolicyCurvePoint>& curve,
                          const std::map<std::string, std::string>& config_echo);

}  // namespace hfss
