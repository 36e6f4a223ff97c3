#pragma once

#include <variant>

#include "hfss/channel.hpp"

namespace hfss {

/// Fixed transmit power regardless of channel quality.
struct CpPolicy {
    double q = 0.0;
};

/// Truncated channel inversion: hold the receiver SNR at snr_target while the
/// effective gain stays above gamma_threshold, otherwise take a transmit
/// outage.
struct TciPolicy {
    double snr_target = 0.0;
    double gamma_threshold = 0.0;
};

/// Water-filling: spend power on good channels up to the water level mu.
struct WfPolicy {
    double mu = 0.0;
};

using PowerPolicy = std::variant<CpPolicy, TciPolicy, WfPolicy>;

void validate(const PowerPolicy& policy);

/// Rate map r(snr) = log2(1 + snr / gamma_gap), optionally floored to integer
/// multiples of bit_granularity (0 keeps the map continuous).
struct RateFunction {
    double gamma_gap = 1.0;        ///< SNR gap, linear, >= 1
    double bit_granularity = 0.0;  ///< bps/Hz per rate step; 0 = continuous

    double rate(double snr) const;
    /// Received SNR producing a given continuous rate: gamma_gap * (2^r - 1).
    double inverse(double rate) const;
};

void validate(const RateFunction& fn);

struct PrState {
    double power = 0.0;  ///< p_p
    double rate = 0.0;   ///< r_p, bps/Hz
};

/// PR transmit power chosen for an effective gain. gamma_gap > 1 rescales the
/// policy decision to gain/gamma_gap (used by the data-stage analysis); 1
/// evaluates the policies verbatim.
double pr_power(const PowerPolicy& policy, EffectiveGain gain, double gamma_gap = 1.0);

/// PR transmit rate: rate_fn applied to gain * pr_power, 0 in outage. The
/// policy decision uses rate_fn.gamma_gap when gap_in_policy is set.
double pr_rate(const PowerPolicy& policy, const RateFunction& rate_fn, EffectiveGain gain,
               bool gap_in_policy = false);

/// Forward model of the PR's reaction to a CR transmit power: the hidden
/// power/rate feedback the CR observes.
PrState pr_respond(const PowerPolicy& policy, const RateFunction& rate_fn, const ChannelState& ch,
                   double cr_power, bool gap_in_policy = false);

/// CR power at and beyond which the PR goes silent. +inf for CP (and for TCI
/// with a zero threshold); may be <= 0 if the PR is in outage even without
/// interference.
double pr_outage_power(const PowerPolicy& policy, const ChannelState& ch, double gamma_gap = 1.0);

}  // namespace hfss
