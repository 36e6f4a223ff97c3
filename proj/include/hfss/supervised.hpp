#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>

#include "hfss/channel.hpp"
#include "hfss/pr_link.hpp"

namespace hfss {

/// Tolerable PR rate loss in bps/Hz (variable-rate PRs: CP, WF).
struct RateLossBudget {
    double max_bits = 0.0;
};

/// Tolerable extra PR transmit power in dB (constant-rate PRs: TCI).
struct PowerPenaltyBudget {
    double max_db = 0.0;
};

using PenaltyBudget = std::variant<RateLossBudget, PowerPenaltyBudget>;

void validate(const PenaltyBudget& budget);

/// Planned CR data transmission.
struct TxPlan {
    double data_power = 0.0;
    double predicted_penalty = 0.0;  ///< in budget units
    double cr_data_rate = 0.0;       ///< bps/Hz
};

/// Upper bound on the CP rate penalty: log2(1 + gain * data_power).
/// Independent of the PR power and SNR gap.
double rate_penalty_cp_bound(double gain, double data_power);

/// Exact WF rate penalty: log2(1 + gain * data_power) until the PR is pushed
/// silent at data_power = (2^rate_before - 1) / gain, then rate_before.
double rate_penalty_wf(double gain, double data_power, double rate_before);

/// Exact TCI power penalty in dB: 10 log10(1 + gain * data_power). If the
/// outage power threshold is known and reached, throws outage_error (the
/// penalty is undefined once the PR stops transmitting).
double power_penalty_tci(double gain, double data_power,
                         std::optional<double> outage_power = std::nullopt);

/// Largest CR data power whose predicted penalty stays within the budget;
/// inverse of the two penalty maps. +inf sentinel when gain is 0.
double max_power_for_budget(double gain_upper, const PenaltyBudget& budget);

/// CR achievable rate under single-user detection, with the PR feedback
/// interference h_pc * p_p(d) coupled to data_power through the PR policy.
double cr_rate(const ChannelState& ch, const PowerPolicy& policy, const RateFunction& pr_rate_fn,
               double gamma_gap_c, double data_power, bool gap_in_policy = false);

/// data_power / (sigma_c2 + h_pc * P_p(gamma(data_power))): the CR rate grows
/// with data_power exactly where this ratio grows.
double feedback_interference_ratio(const ChannelState& ch, const PowerPolicy& policy,
                                   double data_power, double gamma_gap = 1.0);

static constexpr std::size_t kNoViolation = static_cast<std::size_t>(-1);

struct MonotonicityReport {
    bool monotone = true;
    std::size_t first_rate_violation = kNoViolation;   ///< index i with r_c(grid[i+1]) <= r_c(grid[i])
    std::size_t first_ratio_violation = kNoViolation;  ///< same for the interference ratio
};

/// Checks that cr_rate and feedback_interference_ratio are strictly
/// increasing across a strictly increasing grid of data powers.
MonotonicityReport check_monotonicity(const ChannelState& ch, const PowerPolicy& policy,
                                      const RateFunction& pr_rate_fn, double gamma_gap_c,
                                      std::span<const double> grid, bool gap_in_policy = false);

}  // namespace hfss
