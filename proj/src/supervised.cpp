#include "hfss/supervised.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hfss/errors.hpp"

namespace hfss {

namespace {

void require_non_negative(double v, const char* what) {
    if (v < 0) throw precondition_error(std::string(what) + " must be non-negative");
}

}  // namespace

void validate(const PenaltyBudget& budget) {
    std::visit(
        [](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, RateLossBudget>) {
                if (b.max_bits < 0) throw precondition_error("rate-loss budget must be >= 0");
            } else {
                if (b.max_db < 0) throw precondition_error("power-penalty budget must be >= 0");
            }
        },
        budget);
}

double rate_penalty_cp_bound(double gain, double data_power) {
    require_non_negative(gain, "gain");
    require_non_negative(data_power, "data_power");
    return std::log2(1.0 + gain * data_power);
}

double rate_penalty_wf(double gain, double data_power, double rate_before) {
    require_non_negative(gain, "gain");
    require_non_negative(data_power, "data_power");
    if (!(rate_before > 0)) throw precondition_error("rate_before must be positive");
    const double saturation_power = (std::exp2(rate_before) - 1.0) / gain;  // inf when gain = 0
    return data_power <= saturation_power ? std::log2(1.0 + gain * data_power) : rate_before;
}

double power_penalty_tci(double gain, double data_power, std::optional<double> outage_power) {
    require_non_negative(gain, "gain");
    require_non_negative(data_power, "data_power");
    if (outage_power && data_power >= *outage_power) {
        throw outage_error("data power " + std::to_string(data_power) +
                           " reaches the PR outage threshold " + std::to_string(*outage_power) +
                           "; the power penalty is undefined there, use rate-loss semantics");
    }
    return 10.0 * std::log10(1.0 + gain * data_power);
}

double max_power_for_budget(double gain_upper, const PenaltyBudget& budget) {
    require_non_negative(gain_upper, "gain_upper");
    validate(budget);
    if (gain_upper == 0) return std::numeric_limits<double>::infinity();
    return std::visit(
        [&](const auto& b) -> double {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, RateLossBudget>) {
                return (std::exp2(b.max_bits) - 1.0) / gain_upper;
            } else {
                return (std::pow(10.0, b.max_db / 10.0) - 1.0) / gain_upper;
            }
        },
        budget);
}

double cr_rate(const ChannelState& ch, const PowerPolicy& policy, const RateFunction& pr_rate_fn,
               double gamma_gap_c, double data_power, bool gap_in_policy) {
    require_non_negative(data_power, "data_power");
    if (!(gamma_gap_c >= 1.0)) throw precondition_error("gamma_gap_c must be >= 1 (linear)");
    const double pr_data_power = pr_power(policy, effective_gain(ch, data_power),
                                          gap_in_policy ? pr_rate_fn.gamma_gap : 1.0);
    return std::log2(1.0 + ch.h_c * data_power /
                               (gamma_gap_c * (ch.sigma_c2 + ch.h_pc * pr_data_power)));
}

double feedback_interference_ratio(const ChannelState& ch, const PowerPolicy& policy,
                                   double data_power, double gamma_gap) {
    require_non_negative(data_power, "data_power");
    const double pr_data_power = pr_power(policy, effective_gain(ch, data_power), gamma_gap);
    return data_power / (ch.sigma_c2 + ch.h_pc * pr_data_power);
}

MonotonicityReport check_monotonicity(const ChannelState& ch, const PowerPolicy& policy,
                                      const RateFunction& pr_rate_fn, double gamma_gap_c,
                                      std::span<const double> grid, bool gap_in_policy) {
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw precondition_error("grid must be strictly increasing");
        }
    }
    MonotonicityReport report;
    if (grid.size() < 2) return report;

    const double gap = gap_in_policy ? pr_rate_fn.gamma_gap : 1.0;
    double prev_rate = cr_rate(ch, policy, pr_rate_fn, gamma_gap_c, grid[0], gap_in_policy);
    double prev_ratio = feedback_interference_ratio(ch, policy, grid[0], gap);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double rate = cr_rate(ch, policy, pr_rate_fn, gamma_gap_c, grid[i], gap_in_policy);
        const double ratio = feedback_interference_ratio(ch, policy, grid[i], gap);
        if (!(rate > prev_rate) && report.first_rate_violation == kNoViolation) {
            report.first_rate_violation = i - 1;
        }
        if (!(ratio > prev_ratio) && report.first_ratio_violation == kNoViolation) {
            report.first_ratio_violation = i - 1;
        }
        prev_rate = rate;
        prev_ratio = ratio;
    }
    report.monotone = report.first_rate_violation == kNoViolation &&
                      report.first_ratio_violation == kNoViolation;
    return report;
}

}  // namespace hfss
