#include "hfss/protocol.hpp"

#include "hfss/errors.hpp"

namespace hfss {

void validate(const TimingConfig& cfg) {
    if (cfg.tau_p < 0 || cfg.tau_pc < 0 || cfg.tau_cp < 0) {
        throw precondition_error("propagation delays must be non-negative");
    }
    if (cfg.tau_p > cfg.tau_max || cfg.tau_pc > cfg.tau_max || cfg.tau_cp > cfg.tau_max) {
        throw precondition_error("every delay must be bounded by tau_max");
    }
    if (cfg.tau_p > cfg.tau_pc + cfg.tau_cp) {
        throw precondition_error("delays must satisfy tau_p <= tau_pc + tau_cp");
    }
    if (!(cfg.t_p > 0)) {
        throw precondition_error("training duration t_p must be positive");
    }
}

double probe_lead(const TimingConfig& cfg) {
    validate(cfg);
    return 2.0 * cfg.tau_max;
}

double probe_duration(const TimingConfig& cfg) {
    validate(cfg);
    return cfg.t_p + 2.0 * cfg.tau_max;
}

bool verify_coverage(const TimingConfig& cfg, double lead, double duration) {
    validate(cfg);
    // Arrival times at PR-Rx, clock zero at the PR block origin. The CR hears
    // the block start tau_pc late and transmits `lead` ahead of it.
    const double probe_start = cfg.tau_pc + cfg.tau_cp - lead;
    const double probe_end = probe_start + duration;
    const double training_start = cfg.tau_p;
    const double training_end = cfg.tau_p + cfg.t_p;
    return probe_start <= training_start && probe_end >= training_end;
}

bool verify_coverage(const TimingConfig& cfg) {
    return verify_coverage(cfg, probe_lead(cfg), probe_duration(cfg));
}

BlockSchedule make_schedule(const TimingConfig& cfg, double block_length) {
    const double lead = probe_lead(cfg);
    const double duration = probe_duration(cfg);
    if (!(block_length > lead)) {
        throw precondition_error("block_length must exceed the probe lead");
    }
    if (!(block_length > cfg.t_p)) {
        throw precondition_error("block_length must exceed the training duration");
    }
    BlockSchedule s;
    s.lead = lead;
    s.duration = duration;
    s.sense_begin = 0.0;
    s.sense_end = block_length - lead;
    s.probe_begin = s.sense_end;
    s.probe_end = s.probe_begin + duration;  // = block_length + t_p
    s.resense_begin = s.probe_end;
    // the PR adapts from the next block boundary (2*block_length); keep
    // listening through the adapted block's training
    s.resense_end = 2.0 * block_length + cfg.t_p;
    s.data_begin = s.resense_end;
    s.data_end = 3.0 * block_length;
    return s;
}

}  // namespace hfss
