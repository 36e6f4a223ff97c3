// hfss: hidden-feedback spectrum sharing simulator.
//
// Subcommands:
//   run <config>       full learning + transmission sweep, CSV/JSON out
//   policies           PR power/rate adaptation curves vs CR power
//   validate <config>  schema and invariant check, prints the normalized config
//
// Exit codes: 0 success, 1 configuration or usage error, 2 runtime error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hfss/config.hpp"
#include "hfss/errors.hpp"
#include "hfss/output.hpp"
#include "hfss/sim.hpp"
#include "hfss/version.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

struct CommonOutput {
    std::string out_path;  // empty: stdout
    std::string format = "csv";
};

void add_output_flags(CLI::App* cmd, CommonOutput* out) {
    cmd->add_option("--out", out->out_path, "Output file (default: stdout)");
    cmd->add_option("--format", out->format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

void write_output(const CommonOutput& out, const std::string& payload) {
    if (out.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(out.out_path, std::ios::binary);
    if (!file) {
        throw hfss::error("cannot open output file: " + out.out_path);
    }
    file << payload;
}

// Seed priority: --seed flag, then scenario.seed, then HFSS_SEED, then a
// fixed default so unseeded runs still reproduce.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed,
                           const hfss::ConfigMap& cfg) {
    if (flag_seed) return *flag_seed;
    if (cfg.has("scenario.seed")) return cfg.get_u64("scenario.seed", kDefaultSeed);
    if (const char* env = std::getenv("HFSS_SEED")) {
        char* end = nullptr;
        const std::uint64_t v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') {
            throw hfss::config_error(std::string("HFSS_SEED: not an unsigned integer: '") + env +
                                     "'");
        }
        return v;
    }
    return kDefaultSeed;
}

int cmd_run(const std::string& config_path, const std::optional<std::uint64_t>& flag_seed,
            const CommonOutput& out) {
    hfss::ScenarioConfig scenario;
    std::map<std::string, std::string> echo;
    try {
        const hfss::ConfigMap cfg = hfss::ConfigMap::parse_file(config_path);
        scenario = hfss::scenario_from_config(cfg);
        scenario.seed = resolve_seed(flag_seed, cfg);
        echo = hfss::normalized_config(scenario);
    } catch (const hfss::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }
    try {
        const hfss::SweepResult result = hfss::run_full(scenario);
        write_output(out, out.format == "json" ? hfss::to_json(result, echo)
                                               : hfss::to_csv(result));
    } catch (const hfss::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

int cmd_policies(const std::string& policy_name, double q, double snr_target,
                 double gamma_threshold, double mu, const std::string& sweep,
                 const hfss::ChannelState& channel, double gamma_gap_db, double bit_granularity,
                 bool gap_in_policy, const CommonOutput& out) {
    hfss::PowerPolicy policy;
    std::vector<double> powers;
    hfss::RateFunction rate_fn;
    try {
        if (policy_name == "cp") {
            policy = hfss::CpPolicy{q};
        } else if (policy_name == "tci") {
            policy = hfss::TciPolicy{snr_target, gamma_threshold};
        } else {
            policy = hfss::WfPolicy{mu};
        }
        rate_fn.gamma_gap = std::pow(10.0, gamma_gap_db / 10.0);
        rate_fn.bit_granularity = bit_granularity;
        powers = hfss::parse_sweep(sweep, "--sweep");
        for (double p : powers) {
            if (p < 0) throw hfss::config_error("--sweep: powers must be >= 0");
        }
        hfss::validate(policy);
        hfss::validate(rate_fn);
        hfss::validate(channel);
    } catch (const hfss::error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }
    try {
        const auto curve = hfss::policy_curve(channel, policy, rate_fn, powers, gap_in_policy);
        std::map<std::string, std::string> echo;
        echo["policy.type"] = policy_name;
        echo["sweep"] = sweep;
        write_output(out, out.format == "json" ? hfss::curve_to_json(curve, echo)
                                               : hfss::curve_to_csv(curve));
    } catch (const hfss::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

int cmd_validate(const std::string& config_path) {
    try {
        const hfss::ConfigMap cfg = hfss::ConfigMap::parse_file(config_path);
        const auto issues = hfss::validate_scenario_config(cfg);
        if (!issues.empty()) {
            for (const auto& issue : issues) std::cerr << "invalid: " << issue << "\n";
            return 1;
        }
        const hfss::ScenarioConfig scenario = hfss::scenario_from_config(cfg);
        for (const auto& [key, value] : hfss::normalized_config(scenario)) {
            std::cout << key << " = " << value << "\n";
        }
    } catch (const hfss::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hidden-feedback spectrum sharing simulator"};
    app.set_version_flag("--version", std::string(hfss::kVersion));
    app.require_subcommand(1);

    // run
    std::string run_config;
    std::optional<std::uint64_t> run_seed;
    CommonOutput run_out;
    CLI::App* run = app.add_subcommand("run", "Run a scenario config end to end");
    run->add_option("config", run_config, "Scenario config file")->required();
    run->add_option("--seed", run_seed, "Override the scenario seed");
    add_output_flags(run, &run_out);

    // policies
    std::string policy_name;
    double q = 100.0, snr_target = 10.0, gamma_threshold = 0.1, mu = 4.0;
    std::string sweep = "0:20:0.5";
    hfss::ChannelState channel;
    channel.h_cp = 0.5;
    channel.h_pc = 0.5;
    double gamma_gap_db = 0.0, bit_granularity = 0.0;
    bool gap_in_policy = false;
    CommonOutput pol_out;
    CLI::App* policies = app.add_subcommand("policies", "Emit PR adaptation curves (p_c,p_p,r_p)");
    policies->add_option("--policy", policy_name, "PR power control policy")
        ->check(CLI::IsMember({"cp", "tci", "wf"}))
        ->required();
    policies->add_option("--Q", q, "CP transmit power")->capture_default_str();
    policies->add_option("--snr-target", snr_target, "TCI receiver SNR target")
        ->capture_default_str();
    policies->add_option("--gamma-threshold", gamma_threshold, "TCI outage threshold")
        ->capture_default_str();
    policies->add_option("--mu", mu, "WF water level")->capture_default_str();
    policies->add_option("--sweep", sweep, "CR power sweep lo:hi:step or comma list")
        ->capture_default_str();
    policies->add_option("--h-p", channel.h_p, "PR direct gain")->capture_default_str();
    policies->add_option("--h-cp", channel.h_cp, "CR-Tx to PR-Rx gain")->capture_default_str();
    policies->add_option("--h-pc-tilde", channel.h_pc_tilde, "PR-Tx to CR-Tx gain")
        ->capture_default_str();
    policies->add_option("--sigma-p2", channel.sigma_p2, "PR-Rx noise variance")
        ->capture_default_str();
    policies->add_option("--gamma-gap-db", gamma_gap_db, "PR SNR gap in dB")
        ->capture_default_str();
    policies->add_option("--bit-granularity", bit_granularity, "PR rate granularity, bps/Hz")
        ->capture_default_str();
    policies->add_flag("--gap-in-policy", gap_in_policy,
                       "Apply the SNR gap inside the power policy decision");
    add_output_flags(policies, &pol_out);

    // validate
    std::string validate_config;
    CLI::App* validate = app.add_subcommand("validate", "Check a scenario config");
    validate->add_option("config", validate_config, "Scenario config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (run->parsed()) return cmd_run(run_config, run_seed, run_out);
    if (policies->parsed()) {
        return cmd_policies(policy_name, q, snr_target, gamma_threshold, mu, sweep, channel,
                            gamma_gap_db, bit_granularity, gap_in_policy, pol_out);
    }
    return cmd_validate(validate_config);
}
