#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hfss/channel.hpp"
#include "hfss/estimator.hpp"
#include "hfss/pr_link.hpp"
#include "hfss/protocol.hpp"
#include "hfss/sensing.hpp"
#include "hfss/supervised.hpp"

namespace hfss {

/// Everything needed to reproduce one scenario run.
struct ScenarioConfig {
    std::string id = "scenario";
    ChannelState channel;
    PowerPolicy policy = CpPolicy{1.0};
    RateFunction rate_fn;
    bool gap_in_policy = false;  ///< apply the SNR gap inside the power policy
    double gamma_gap_c = 1.0;    ///< CR-side SNR gap, linear
    std::optional<SensingConfig> sensing;  ///< absent: powers observed exactly
    std::optional<TimingConfig> timing;
    std::vector<double> probe_powers;
    std::vector<double> data_powers;
    std::optional<PenaltyBudget> budget;
    std::optional<double> plan_probe_power;  ///< probe whose estimate feeds the
                                             ///< planner; default: last probe
    int trials = 1000;  ///< noisy-sensing repetitions averaged per probe point
    std::uint64_t seed = 0;
};

void validate(const ScenarioConfig& cfg);

struct LearningPoint {
    double probe_power = 0.0;
    ProbeRecord record;  ///< first-trial observations
    std::optional<GainEstimate> estimate;
    bool reprobe_advisory = false;  ///< probe silenced the PR; retry smaller
};

struct TransmissionPoint {
    double data_power = 0.0;
    std::optional<double> penalty_actual;     ///< from the forward model
    std::optional<double> penalty_predicted;  ///< planner, from the gain upper bound
    double cr_data_rate = 0.0;
    bool pr_outage = false;
};

enum class PenaltyUnit { bits, db };

struct SweepResult {
    std::string scenario_id;
    std::uint64_t seed = 0;
    std::string version;
    PenaltyUnit penalty_unit = PenaltyUnit::bits;
    std::vector<LearningPoint> learning;
    std::vector<TransmissionPoint> transmission;
    std::optional<TxPlan> plan;
};

/// Sensing -> probing -> re-sensing against the PR forward model at each
/// probe power, recording the estimate matching the configuration: exact for
/// noiseless continuous rates, granularity for discretized rates, noise for
/// sampled powers (averaged over cfg.trials), their intersection when both
/// effects are on.
SweepResult run_learning_sweep(const ScenarioConfig& cfg);

/// Actual penalty, predicted penalty (from the estimate's upper bound), and
/// CR achievable rate at each data power.
SweepResult run_transmission_sweep(const ScenarioConfig& cfg, const GainEstimate& estimate);

/// Learning sweep, budget planning on the selected probe's estimate, then the
/// transmission sweep. Throws outage_error if the planned power would silence
/// the PR under a power-penalty budget.
SweepResult run_full(const ScenarioConfig& cfg);

/// One point of a PR adaptation curve (the hidden feedback seen by the CR).
struct PolicyCurvePoint {
    double cr_power = 0.0;
    double pr_power = 0.0;
    double pr_rate = 0.0;
};

std::vector<PolicyCurvePoint> policy_curve(const ChannelState& ch, const PowerPolicy& policy,
                                           const RateFunction& rate_fn,
                                           const std::vector<double>& cr_powers,
                                           bool gap_in_policy = false);

}  // namespace hfss
