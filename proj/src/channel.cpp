#include "hfss/channel.hpp"

#include "hfss/errors.hpp"

namespace hfss {

void validate(const ChannelState& ch) {
    if (ch.h_p < 0 || ch.h_c < 0 || ch.h_cp < 0 || ch.h_pc < 0 || ch.h_pc_tilde < 0) {
        throw precondition_error("channel gains must be non-negative");
    }
    if (!(ch.sigma_p2 > 0) || !(ch.sigma_c2 > 0)) {
        throw precondition_error("noise variances must be positive");
    }
}

EffectiveGain effective_gain(const ChannelState& ch, double cr_power) {
    validate(ch);
    if (cr_power < 0) {
        throw precondition_error("cr_power must be non-negative");
    }
    return {ch.h_p / (ch.sigma_p2 + ch.h_cp * cr_power)};
}

}  // namespace hfss
