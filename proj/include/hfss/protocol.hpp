#pragma once

namespace hfss {

/// Propagation delays and PR training length, all in seconds.
struct TimingConfig {
    double tau_p = 0.0;    ///< PR-Tx -> PR-Rx
    double tau_pc = 0.0;   ///< PR-Tx -> CR-Tx
    double tau_cp = 0.0;   ///< CR-Tx -> PR-Rx
    double tau_max = 0.0;  ///< known upper bound on any PR/CR delay
    double t_p = 0.0;      ///< PR training duration
};

/// Throws precondition_error unless every delay lies in [0, tau_max],
/// tau_p <= tau_pc + tau_cp, and t_p > 0.
void validate(const TimingConfig& cfg);

/// How far ahead of the heard PR block start the probe must begin: 2*tau_max.
double probe_lead(const TimingConfig& cfg);

/// Probe length that blankets the PR training signal: t_p + 2*tau_max.
double probe_duration(const TimingConfig& cfg);

/// True iff a probe sent `lead` seconds ahead of the heard block start and
/// lasting `duration` seconds overlaps the entire PR training signal at
/// PR-Rx.
bool verify_coverage(const TimingConfig& cfg, double lead, double duration);

/// Coverage with the two rules above; holds for every delay triple within
/// tau_max that satisfies the triangle condition.
bool verify_coverage(const TimingConfig& cfg);

/// The CR's four contiguous stages on its own clock, with time zero at the
/// heard start of the PR block preceding the probe.
struct BlockSchedule {
    double sense_begin = 0.0;
    double sense_end = 0.0;  ///< == probe_begin
    double probe_begin = 0.0;
    double probe_end = 0.0;  ///< == resense_begin
    double resense_begin = 0.0;
    double resense_end = 0.0;  ///< == data_begin; first PR block boundary after
                               ///< the probed training, plus one training time
    double data_begin = 0.0;
    double data_end = 0.0;
    double lead = 0.0;      ///< Delta
    double duration = 0.0;  ///< T_c
};

/// Lays out the four stages for a PR block of block_length seconds. The PR
/// adapts from the block boundary following the probed training; re-sensing
/// extends past that boundary far enough to hear the adapted block.
BlockSchedule make_schedule(const TimingConfig& cfg, double block_length);

}  // namespace hfss
