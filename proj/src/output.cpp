#include "hfss/output.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>

#include <json.hpp>

namespace hfss {

namespace {

// shared column model so CSV and JSON stay in lockstep
enum class CellType { text, number, integer };

struct Column {
    const char* name;
    CellType type;
};

constexpr std::array<Column, 14> kColumns = {{
    {"scenario", CellType::text},
    {"seed", CellType::integer},
    {"stage", CellType::text},
    {"p_c", CellType::number},
    {"gain_lo", CellType::number},
    {"gain_hi", CellType::number},
    {"gain_kind", CellType::text},
    {"confidence", CellType::number},
    {"p_c_d", CellType::number},
    {"penalty_actual", CellType::number},
    {"penalty_predicted", CellType::number},
    {"penalty_unit", CellType::text},
    {"r_c", CellType::number},
    {"note", CellType::text},
}};

using Row = std::array<std::optional<std::string>, kColumns.size()>;

const char* kind_name(EstimateKind kind) {
    switch (kind) {
        case EstimateKind::exact: return "exact";
        case EstimateKind::granularity: return "granularity";
        case EstimateKind::noise: return "noise";
        case EstimateKind::variation: return "variation";
    }
    return "unknown";
}

const char* unit_name(PenaltyUnit unit) {
    return unit == PenaltyUnit::db ? "db" : "bits";
}

std::vector<Row> build_rows(const SweepResult& result) {
    std::vector<Row> rows;
    const std::string seed = std::to_string(result.seed);
    const std::string unit = unit_name(result.penalty_unit);

    auto base_row = [&]() {
        Row row;
        row[0] = result.scenario_id;
        row[1] = seed;
        return row;
    };

    for (const auto& point : result.learning) {
        Row row = base_row();
        row[2] = "learning";
        row[3] = format_sig12(point.probe_power);
        if (point.estimate) {
            row[4] = format_sig12(point.estimate->lower);
            row[5] = format_sig12(point.estimate->upper);
            row[6] = kind_name(point.estimate->kind);
            row[7] = format_sig12(point.estimate->confidence);
        }
        if (point.reprobe_advisory) row[13] = "re_probe";
        rows.push_back(row);
    }
    if (result.plan) {
        Row row = base_row();
        row[2] = "plan";
        row[8] = format_sig12(result.plan->data_power);
        row[10] = format_sig12(result.plan->predicted_penalty);
        row[11] = unit;
        row[12] = format_sig12(result.plan->cr_data_rate);
        rows.push_back(row);
    }
    for (const auto& point : result.transmission) {
        Row row = base_row();
        row[2] = "transmission";
        row[8] = format_sig12(point.data_power);
        if (point.penalty_actual) row[9] = format_sig12(*point.penalty_actual);
        if (point.penalty_predicted) row[10] = format_sig12(*point.penalty_predicted);
        row[11] = unit;
        row[12] = format_sig12(point.cr_data_rate);
        if (point.pr_outage) row[13] = "pr_outage";
        rows.push_back(row);
    }
    return rows;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        quoted += c;
        if (c == '"') quoted += '"';
    }
    quoted += '"';
    return quoted;
}

nlohmann::json cell_to_json(const Column& column, const std::optional<std::string>& cell) {
    if (!cell) return nullptr;
    switch (column.type) {
        case CellType::text: return *cell;
        case CellType::integer: return std::stoull(*cell);
        case CellType::number:
            if (*cell == "inf") return "inf";  // JSON has no infinity literal
            return std::strtod(cell->c_str(), nullptr);
    }
    return nullptr;
}

nlohmann::json meta_json(const std::string& scenario, std::uint64_t seed,
                         const std::string& version,
                         const std::map<std::string, std::string>& config_echo) {
    nlohmann::json meta;
    meta["scenario"] = scenario;
    meta["seed"] = seed;
    meta["version"] = version;
    meta["config"] = config_echo;
    return meta;
}

}  // namespace

std::string format_sig12(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", x);
    return buffer;
}

std::string to_csv(const SweepResult& result) {
    std::string out;
    for (std::size_t c = 0; c < kColumns.size(); ++c) {
        if (c) out += ',';
        out += kColumns[c].name;
    }
    out += '\n';
    for (const Row& row : build_rows(result)) {
        for (std::size_t c = 0; c < kColumns.size(); ++c) {
            if (c) out += ',';
            if (row[c]) out += csv_escape(*row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const SweepResult& result,
                    const std::map<std::string, std::string>& config_echo) {
    nlohmann::json doc;
    doc["meta"] = meta_json(result.scenario_id, result.seed, result.version, config_echo);
    nlohmann::json rows = nlohmann::json::array();
    for (const Row& row : build_rows(result)) {
        nlohmann::json obj;
        for (std::size_t c = 0; c < kColumns.size(); ++c) {
            obj[kColumns[c].name] = cell_to_json(kColumns[c], row[c]);
        }
        rows.push_back(obj);
    }
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

std::string curve_to_csv(const std::vector<PolicyCurvePoint>& curve) {
    std::string out = "p_c,p_p,r_p\n";
    for (const auto& point : curve) {
        out += format_sig12(point.cr_power);
        out += ',';
        out += format_sig12(point.pr_power);
        out += ',';
        out += format_sig12(point.pr_rate);
        out += '\n';
    }
    return out;
}

std::string curve_to_json(const std::vector<PolicyCurvePoint>& curve,
                          const std::map<std::string, std::string>& config_echo) {
    nlohmann::json doc;
    doc["meta"]["config"] = config_echo;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& point : curve) {
        nlohmann::json obj;
        obj["p_c"] = std::strtod(format_sig12(point.cr_power).c_str(), nullptr);
        obj["p_p"] = std::strtod(format_sig12(point.pr_power).c_str(), nullptr);
        obj["r_p"] = std::strtod(format_sig12(point.pr_rate).c_str(), nullptr);
        rows.push_back(obj);
    }
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

}  // namespace hfss
