#include "hfss/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "hfss/errors.hpp"
#include "hfss/output.hpp"

namespace hfss {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

bool parse_double(const std::string& text, double* out) {
    const std::string t = trim(text);
    if (t.empty()) return false;
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size()) return false;
    *out = v;
    return true;
}

bool parse_u64(const std::string& text, std::uint64_t* out) {
    const std::string t = trim(text);
    if (t.empty() || t[0] == '-') return false;
    char* end = nullptr;
    const std::uint64_t v = std::strtoull(t.c_str(), &end, 10);
    if (end != t.c_str() + t.size()) return false;
    *out = v;
    return true;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, sep)) parts.push_back(item);
    return parts;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

// every key the scenario schema understands
const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "scenario.id",          "scenario.seed",
        "channel.h_p",          "channel.h_c",
        "channel.h_cp",         "channel.h_pc",
        "channel.h_pc_tilde",   "channel.sigma_p2",
        "channel.sigma_c2",     "policy.type",
        "policy.q",             "policy.snr_target",
        "policy.gamma_threshold", "policy.mu",
        "policy.gap_in_policy", "rate.gamma_gap_db",
        "rate.bit_granularity", "cr.gamma_gap_db",
        "sensing.m_samples",    "sensing.p_max",
        "sensing.zeta",         "timing.tau_p",
        "timing.tau_pc",        "timing.tau_cp",
        "timing.tau_max",       "timing.t_p",
        "sweep.probe_powers",   "sweep.data_powers",
        "plan.probe_power",     "budget.type",
        "budget.max_bits",      "budget.max_db",
        "sim.trials",
    };
    return keys;
}

// Reads keys into a scenario, appending one message per problem. The
// scenario is only meaningful when no messages were added.
void collect(const ConfigMap& cfg, ScenarioConfig* out, std::vector<std::string>* issues) {
    auto complain = [&](const std::string& key, const std::string& what) {
        issues->push_back(key + ": " + what);
    };

    for (const auto& [key, value] : cfg.entries()) {
        (void)value;
        if (!known_keys().count(key)) complain(key, "unknown key");
    }

    auto number = [&](const std::string& key, double fallback, bool required,
                      const std::function<bool(double)>& ok,
                      const std::string& rule) -> double {
        if (!cfg.has(key)) {
            if (required) complain(key, "required key is missing");
            return fallback;
        }
        double v = fallback;
        if (!parse_double(cfg.get_string(key), &v)) {
            complain(key, "not a number: '" + cfg.get_string(key) + "'");
            return fallback;
        }
        if (!ok(v)) {
            complain(key, rule);
            return fallback;
        }
        return v;
    };
    auto non_negative = [](double v) { return v >= 0; };
    auto positive = [](double v) { return v > 0; };

    out->id = cfg.get_string("scenario.id", "scenario");
    if (cfg.has("scenario.seed")) {
        std::uint64_t seed = 0;
        if (!parse_u64(cfg.get_string("scenario.seed"), &seed)) {
            complain("scenario.seed", "not an unsigned integer");
        }
        out->seed = seed;
    }

    out->channel.h_p = number("channel.h_p", 1.0, true, non_negative, "must be >= 0");
    out->channel.h_c = number("channel.h_c", 1.0, true, non_negative, "must be >= 0");
    out->channel.h_cp = number("channel.h_cp", 0.5, true, non_negative, "must be >= 0");
    out->channel.h_pc = number("channel.h_pc", 0.5, true, non_negative, "must be >= 0");
    out->channel.h_pc_tilde =
        number("channel.h_pc_tilde", 1.0, true, non_negative, "must be >= 0");
    out->channel.sigma_p2 = number("channel.sigma_p2", 1.0, true, positive, "must be > 0");
    out->channel.sigma_c2 = number("channel.sigma_c2", 1.0, true, positive, "must be > 0");

    auto reject_foreign = [&](const std::string& type,
                              std::initializer_list<const char*> foreign) {
        for (const char* key : foreign) {
            if (cfg.has(key)) {
                complain(key, "not applicable to policy.type = " + type);
            }
        }
    };
    const std::string policy_type = cfg.get_string("policy.type", "");
    if (policy_type == "cp") {
        out->policy = CpPolicy{number("policy.q", 1.0, true, positive, "must be > 0")};
        reject_foreign("cp", {"policy.snr_target", "policy.gamma_threshold", "policy.mu"});
    } else if (policy_type == "tci") {
        TciPolicy tci;
        tci.snr_target = number("policy.snr_target", 1.0, true, positive, "must be > 0");
        tci.gamma_threshold =
            number("policy.gamma_threshold", 0.0, true, non_negative, "must be >= 0");
        out->policy = tci;
        reject_foreign("tci", {"policy.q", "policy.mu"});
    } else if (policy_type == "wf") {
        out->policy = WfPolicy{number("policy.mu", 1.0, true, positive, "must be > 0")};
        reject_foreign("wf", {"policy.q", "policy.snr_target", "policy.gamma_threshold"});
    } else {
        complain("policy.type", policy_type.empty() ? "required key is missing"
                                                    : "must be one of cp, tci, wf");
    }
    try {
        out->gap_in_policy = cfg.get_bool("policy.gap_in_policy", false);
    } catch (const config_error& e) {
        issues->push_back(e.what());
    }

    const double gap_db =
        number("rate.gamma_gap_db", 0.0, false, non_negative, "must be >= 0 dB");
    out->rate_fn.gamma_gap = db_to_linear(gap_db);
    out->rate_fn.bit_granularity =
        number("rate.bit_granularity", 0.0, false, non_negative, "must be >= 0");
    const double gap_c_db =
        number("cr.gamma_gap_db", 0.0, false, non_negative, "must be >= 0 dB");
    out->gamma_gap_c = db_to_linear(gap_c_db);

    const bool any_sensing =
        cfg.has("sensing.m_samples") || cfg.has("sensing.p_max") || cfg.has("sensing.zeta");
    if (any_sensing) {
        SensingConfig sensing;
        const double m = number("sensing.m_samples", 1.0, true,
                                [](double v) { return v >= 1 && v == std::floor(v); },
                                "must be an integer >= 1");
        sensing.m_samples = static_cast<int>(m);
        sensing.sigma_c2 = out->channel.sigma_c2;
        sensing.p_max = number("sensing.p_max", 0.0, true, positive, "must be > 0");
        sensing.zeta = number("sensing.zeta", 0.0, true, positive, "must be > 0");
        out->sensing = sensing;
    }

    const bool any_timing = cfg.has("timing.tau_p") || cfg.has("timing.tau_pc") ||
                            cfg.has("timing.tau_cp") || cfg.has("timing.tau_max") ||
                            cfg.has("timing.t_p");
    if (any_timing) {
        TimingConfig timing;
        timing.tau_p = number("timing.tau_p", 0.0, true, non_negative, "must be >= 0");
        timing.tau_pc = number("timing.tau_pc", 0.0, true, non_negative, "must be >= 0");
        timing.tau_cp = number("timing.tau_cp", 0.0, true, non_negative, "must be >= 0");
        timing.tau_max = number("timing.tau_max", 0.0, true, non_negative, "must be >= 0");
        timing.t_p = number("timing.t_p", 0.0, true, positive, "must be > 0");
        if (timing.tau_p > timing.tau_pc + timing.tau_cp) {
            complain("timing.tau_p", "must satisfy tau_p <= tau_pc + tau_cp");
        }
        if (timing.tau_p > timing.tau_max || timing.tau_pc > timing.tau_max ||
            timing.tau_cp > timing.tau_max) {
            complain("timing.tau_max", "every delay must be bounded by tau_max");
        }
        out->timing = timing;
    }

    if (cfg.has("sweep.probe_powers")) {
        try {
            out->probe_powers = cfg.get_sweep("sweep.probe_powers");
            for (double p : out->probe_powers) {
                if (!(p > 0)) {
                    complain("sweep.probe_powers", "probe powers must be > 0");
                    break;
                }
            }
        } catch (const config_error& e) {
            issues->push_back(e.what());
        }
    } else {
        complain("sweep.probe_powers", "required key is missing");
    }
    if (cfg.has("sweep.data_powers")) {
        try {
            out->data_powers = cfg.get_sweep("sweep.data_powers");
            for (double p : out->data_powers) {
                if (p < 0) {
                    complain("sweep.data_powers", "data powers must be >= 0");
                    break;
                }
            }
        } catch (const config_error& e) {
            issues->push_back(e.what());
        }
    }

    if (cfg.has("plan.probe_power")) {
        const double p =
            number("plan.probe_power", 0.0, false, positive, "must be > 0");
        out->plan_probe_power = p;
        if (std::find(out->probe_powers.begin(), out->probe_powers.end(), p) ==
            out->probe_powers.end()) {
            complain("plan.probe_power", "must be one of sweep.probe_powers");
        }
    }

    const std::string budget_type = cfg.get_string("budget.type", "");
    if (!budget_type.empty()) {
        if (budget_type == "rate_loss") {
            out->budget = RateLossBudget{
                number("budget.max_bits", 0.0, true, non_negative, "must be >= 0")};
            if (cfg.has("budget.max_db")) {
                complain("budget.max_db", "not applicable to budget.type = rate_loss");
            }
            if (policy_type == "tci") {
                complain("budget.type",
                         "rate_loss budget requires a cp or wf policy (tci holds its rate; "
                         "use power_penalty)");
            }
        } else if (budget_type == "power_penalty") {
            out->budget = PowerPenaltyBudget{
                number("budget.max_db", 0.0, true, non_negative, "must be >= 0")};
            if (cfg.has("budget.max_bits")) {
                complain("budget.max_bits", "not applicable to budget.type = power_penalty");
            }
            if (policy_type == "cp" || policy_type == "wf") {
                complain("budget.type",
                         "power_penalty budget requires a tci policy (cp/wf vary their rate; "
                         "use rate_loss)");
            }
        } else {
            complain("budget.type", "must be one of rate_loss, power_penalty");
        }
    } else if (cfg.has("budget.max_bits") || cfg.has("budget.max_db")) {
        complain("budget.type", "required key is missing");
    }
    if (out->data_powers.empty() && !out->budget) {
        complain("sweep.data_powers", "may only be empty when a budget is configured");
    }

    const double trials = number("sim.trials", 1000.0, false,
                                 [](double v) { return v >= 1 && v == std::floor(v); },
                                 "must be an integer >= 1");
    out->trials = static_cast<int>(trials);
}

}  // namespace

ConfigMap ConfigMap::parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open config file: " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_string(buffer.str(), path.string());
}

ConfigMap ConfigMap::parse_string(const std::string& text, const std::string& origin) {
    ConfigMap cfg;
    cfg.origin_ = origin;
    std::stringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw config_error(origin + ":" + std::to_string(line_no) +
                               ": expected 'key = value', got '" + stripped + "'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) {
            throw config_error(origin + ":" + std::to_string(line_no) + ": empty key");
        }
        if (cfg.entries_.count(key)) {
            throw config_error(origin + ":" + std::to_string(line_no) + ": duplicate key '" +
                               key + "'");
        }
        cfg.entries_[key] = value;
    }
    return cfg;
}

bool ConfigMap::has(const std::string& key) const { return entries_.count(key) > 0; }

std::string ConfigMap::get_string(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) throw config_error(key + ": required key is missing");
    return it->second;
}

std::string ConfigMap::get_string(const std::string& key, const std::string& fallback) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? fallback : it->second;
}

double ConfigMap::get_number(const std::string& key) const {
    double v = 0;
    if (!parse_double(get_string(key), &v)) {
        throw config_error(key + ": not a number: '" + get_string(key) + "'");
    }
    return v;
}

double ConfigMap::get_number(const std::string& key, double fallback) const {
    return has(key) ? get_number(key) : fallback;
}

std::uint64_t ConfigMap::get_u64(const std::string& key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    std::uint64_t v = 0;
    if (!parse_u64(get_string(key), &v)) {
        throw config_error(key + ": not an unsigned integer: '" + get_string(key) + "'");
    }
    return v;
}

bool ConfigMap::get_bool(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string v = get_string(key);
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw config_error(key + ": not a boolean: '" + v + "'");
}

std::vector<double> ConfigMap::get_sweep(const std::string& key) const {
    return parse_sweep(get_string(key), key);
}

std::vector<double> parse_sweep(const std::string& text, const std::string& key) {
    std::vector<double> values;
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        double lo = 0, hi = 0, step = 0;
        if (parts.size() != 3 || !parse_double(parts[0], &lo) || !parse_double(parts[1], &hi) ||
            !parse_double(parts[2], &step)) {
            throw config_error(key + ": range must be 'lo:hi:step', got '" + text + "'");
        }
        if (!(step > 0)) throw config_error(key + ": range step must be > 0");
        if (hi < lo) throw config_error(key + ": reversed range (hi < lo)");
        const double count = std::floor((hi - lo) / step + 1e-9) + 1;
        if (count > 1e7) throw config_error(key + ": range produces too many points");
        for (int i = 0; i < static_cast<int>(count); ++i) values.push_back(lo + i * step);
        return values;
    }
    for (const std::string& part : split(text, ',')) {
        double v = 0;
        if (!parse_double(part, &v)) {
            throw config_error(key + ": not a number: '" + trim(part) + "'");
        }
        values.push_back(v);
    }
    if (values.empty()) throw config_error(key + ": empty sweep");
    return values;
}

ScenarioConfig scenario_from_config(const ConfigMap& cfg) {
    ScenarioConfig out;
    std::vector<std::string> issues;
    collect(cfg, &out, &issues);
    if (!issues.empty()) {
        std::string message;
        for (const auto& issue : issues) {
            if (!message.empty()) message += "\n";
            message += issue;
        }
        throw config_error(message);
    }
    return out;
}

std::vector<std::string> validate_scenario_config(const ConfigMap& cfg) {
    ScenarioConfig out;
    std::vector<std::string> issues;
    collect(cfg, &out, &issues);
    return issues;
}

std::map<std::string, std::string> normalized_config(const ScenarioConfig& cfg) {
    std::map<std::string, std::string> echo;
    auto put = [&](const std::string& key, double v) { echo[key] = format_sig12(v); };
    auto put_list = [&](const std::string& key, const std::vector<double>& vs) {
        std::string joined;
        for (double v : vs) {
            if (!joined.empty()) joined += ",";
            joined += format_sig12(v);
        }
        echo[key] = joined;
    };

    echo["scenario.id"] = cfg.id;
    echo["scenario.seed"] = std::to_string(cfg.seed);
    put("channel.h_p", cfg.channel.h_p);
    put("channel.h_c", cfg.channel.h_c);
    put("channel.h_cp", cfg.channel.h_cp);
    put("channel.h_pc", cfg.channel.h_pc);
    put("channel.h_pc_tilde", cfg.channel.h_pc_tilde);
    put("channel.sigma_p2", cfg.channel.sigma_p2);
    put("channel.sigma_c2", cfg.channel.sigma_c2);
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, CpPolicy>) {
                echo["policy.type"] = "cp";
                put("policy.q", p.q);
            } else if constexpr (std::is_same_v<T, TciPolicy>) {
                echo["policy.type"] = "tci";
                put("policy.snr_target", p.snr_target);
                put("policy.gamma_threshold", p.gamma_threshold);
            } else {
                echo["policy.type"] = "wf";
                put("policy.mu", p.mu);
            }
        },
        cfg.policy);
    echo["policy.gap_in_policy"] = cfg.gap_in_policy ? "true" : "false";
    put("rate.gamma_gap_db", linear_to_db(cfg.rate_fn.gamma_gap));
    put("rate.bit_granularity", cfg.rate_fn.bit_granularity);
    put("cr.gamma_gap_db", linear_to_db(cfg.gamma_gap_c));
    if (cfg.sensing) {
        echo["sensing.m_samples"] = std::to_string(cfg.sensing->m_samples);
        put("sensing.p_max", cfg.sensing->p_max);
        put("sensing.zeta", cfg.sensing->zeta);
    }
    if (cfg.timing) {
        put("timing.tau_p", cfg.timing->tau_p);
        put("timing.tau_pc", cfg.timing->tau_pc);
        put("timing.tau_cp", cfg.timing->tau_cp);
        put("timing.tau_max", cfg.timing->tau_max);
        put("timing.t_p", cfg.timing->t_p);
    }
    put_list("sweep.probe_powers", cfg.probe_powers);
    if (!cfg.data_powers.empty()) put_list("sweep.data_powers", cfg.data_powers);
    if (cfg.plan_probe_power) put("plan.probe_power", *cfg.plan_probe_power);
    if (cfg.budget) {
        std::visit(
            [&](const auto& b) {
                using T = std::decay_t<decltype(b)>;
                if constexpr (std::is_same_v<T, RateLossBudget>) {
                    echo["budget.type"] = "rate_loss";
                    put("budget.max_bits", b.max_bits);
                } else {
                    echo["budget.type"] = "power_penalty";
                    put("budget.max_db", b.max_db);
                }
            },
            *cfg.budget);
    }
    echo["sim.trials"] = std::to_string(cfg.trials);
    return echo;
}

}  // namespace hfss
