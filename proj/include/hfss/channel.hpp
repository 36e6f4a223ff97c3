#pragma once

namespace hfss {

/// Linear power gains and noise variances of the two-link system. Immutable
/// per fading block; freely shareable across threads.
struct ChannelState {
    double h_p = 1.0;         ///< PR-Tx -> PR-Rx
    double h_c = 1.0;         ///< CR-Tx -> CR-Rx
    double h_cp = 0.0;        ///< CR-Tx -> PR-Rx (the gain the CR wants to learn)
    double h_pc = 0.0;        ///< PR-Tx -> CR-Rx (feedback interference path)
    double h_pc_tilde = 1.0;  ///< PR-Tx -> CR-Tx (sensing path)
    double sigma_p2 = 1.0;    ///< noise variance at PR-Rx
    double sigma_c2 = 1.0;    ///< noise variance at CR-Rx and CR-Tx
};

/// Effective channel power gain at PR-Rx: direct gain over
/// noise-plus-interference power, h_p / (sigma_p2 + h_cp * p_c).
struct EffectiveGain {
    double value = 0.0;
};

/// Throws precondition_error unless all gains are >= 0 and both noise
/// variances are > 0.
void validate(const ChannelState& ch);

/// Effective gain seen by the PR receiver while the CR transmits cr_power.
/// Strictly decreasing in cr_power when h_cp > 0.
EffectiveGain effective_gain(const ChannelState& ch, double cr_power);

}  // namespace hfss
