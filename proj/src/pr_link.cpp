#include "hfss/pr_link.hpp"

#include <cmath>
#include <limits>

#include "hfss/errors.hpp"

namespace hfss {

void validate(const PowerPolicy& policy) {
    std::visit(
        [](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, CpPolicy>) {
                if (!(p.q > 0)) throw precondition_error("cp power Q must be positive");
            } else if constexpr (std::is_same_v<T, TciPolicy>) {
                if (!(p.snr_target > 0)) throw precondition_error("tci snr_target must be positive");
                if (p.gamma_threshold < 0)
                    throw precondition_error("tci gamma_threshold must be non-negative");
            } else {
                if (!(p.mu > 0)) throw precondition_error("wf water level mu must be positive");
            }
        },
        policy);
}

void validate(const RateFunction& fn) {
    if (!(fn.gamma_gap >= 1.0)) throw precondition_error("gamma_gap must be >= 1 (linear)");
    if (fn.bit_granularity < 0) throw precondition_error("bit_granularity must be non-negative");
}

double RateFunction::rate(double snr) const {
    if (snr < 0) throw precondition_error("snr must be non-negative");
    const double continuous = std::log2(1.0 + snr / gamma_gap);
    if (bit_granularity <= 0) return continuous;
    return std::floor(continuous / bit_granularity) * bit_granularity;
}

double RateFunction::inverse(double r) const {
    if (r < 0) throw precondition_error("rate must be non-negative");
    return gamma_gap * (std::exp2(r) - 1.0);
}

double pr_power(const PowerPolicy& policy, EffectiveGain gain, double gamma_gap) {
    validate(policy);
    if (gain.value < 0) throw precondition_error("effective gain must be non-negative");
    if (!(gamma_gap >= 1.0)) throw precondition_error("gamma_gap must be >= 1 (linear)");
    const double g = gain.value / gamma_gap;  // gap-adjusted decision variable
    return std::visit(
        [&](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, CpPolicy>) {
                return p.q;
            } else if constexpr (std::is_same_v<T, TciPolicy>) {
                return g > p.gamma_threshold ? p.snr_target / g : 0.0;
            } else {
                return g > 1.0 / p.mu ? p.mu - 1.0 / g : 0.0;
            }
        },
        policy);
}

double pr_rate(const PowerPolicy& policy, const RateFunction& rate_fn, EffectiveGain gain,
               bool gap_in_policy) {
    validate(rate_fn);
    const double power = pr_power(policy, gain, gap_in_policy ? rate_fn.gamma_gap : 1.0);
    if (power <= 0) return 0.0;
    return rate_fn.rate(gain.value * power);
}

PrState pr_respond(const PowerPolicy& policy, const RateFunction& rate_fn, const ChannelState& ch,
                   double cr_power, bool gap_in_policy) {
    const EffectiveGain gain = effective_gain(ch, cr_power);
    const double power = pr_power(policy, gain, gap_in_policy ? rate_fn.gamma_gap : 1.0);
    const double rate = power > 0 ? rate_fn.rate(gain.value * power) : 0.0;
    return {power, rate};
}

double pr_outage_power(const PowerPolicy& policy, const ChannelState& ch, double gamma_gap) {
    validate(policy);
    validate(ch);
    constexpr double inf = std::numeric_limits<double>::infinity();
    return std::visit(
        [&](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, CpPolicy>) {
                return inf;
            } else if constexpr (std::is_same_v<T, TciPolicy>) {
                if (p.gamma_threshold == 0) return inf;
                if (ch.h_cp == 0) {
                    // interference-free: either always on or never on
                    return ch.h_p / gamma_gap / ch.sigma_p2 > p.gamma_threshold ? inf : 0.0;
                }
                return (ch.h_p / (gamma_gap * p.gamma_threshold) - ch.sigma_p2) / ch.h_cp;
            } else {
                if (ch.h_cp == 0) {
                    return ch.h_p / gamma_gap / ch.sigma_p2 > 1.0 / p.mu ? inf : 0.0;
                }
                return (p.mu * ch.h_p / gamma_gap - ch.sigma_p2) / ch.h_cp;
            }
        },
        policy);
}

}  // namespace hfss
