#pragma once

#include "hfss/pr_link.hpp"
#include "hfss/sensing.hpp"

namespace hfss {

enum class EstimateKind { exact, granularity, noise, variation };

/// Point or interval estimate of the CR-to-PR channel gain normalized to the
/// noise power at PR-Rx (h_cp / sigma_p2).
struct GainEstimate {
    double lower = 0.0;
    double upper = 0.0;  ///< +inf when the probe silenced the PR
    EstimateKind kind = EstimateKind::exact;
    double confidence = 1.0;           ///< probability the interval covers the gain
    double per_side_confidence = 1.0;  ///< each one-sided bound, 1 - Q(zeta) for noise

    /// Point value; valid for exact estimates only.
    double value() const;
    double width() const { return upper - lower; }
    bool contains(double gain) const { return lower <= gain && gain <= upper; }
};

/// Observations taken immediately before and after one probe transmission.
struct ProbeRecord {
    PrObservation before;  ///< q0, r0
    PrObservation after;   ///< q1, r1
    double probe_power = 0.0;
};

/// Point estimate from perfectly observed powers and continuous rates:
///   ( R^-1(r0) * q1 / (R^-1(r1) * q0) - 1 ) / p_c.
/// Works for any power/rate adaptation that keeps the PR transmitting.
/// Throws precondition_error on non-positive observations or a discretized
/// rate map, inconsistency_error if the formula comes out negative.
GainEstimate estimate_exact(const ProbeRecord& rec, const RateFunction& rate_fn);

/// Constant-power specialization: uses the rates only (the received power
/// does not change under CP).
GainEstimate estimate_cp(const ProbeRecord& rec, const RateFunction& rate_fn);

/// Channel-inversion specialization: uses the powers only (the rate does not
/// change while TCI stays out of outage).
GainEstimate estimate_tci(const ProbeRecord& rec);

/// Half-open received-SNR range [lower, upper) consistent with one
/// discretized rate observation.
struct SnrBracket {
    double lower = 0.0;
    double upper = 0.0;
};

SnrBracket snr_bracket(const RateFunction& rate_fn, double rate);

/// Interval estimate under finite rate granularity, brackets derived from
/// rate_fn (bit_granularity > 0 required). Lower bound clamped at 0; an
/// after-probe outage (r1 = 0) yields an unbounded upper sentinel.
GainEstimate estimate_granularity_interval(const ProbeRecord& rec, const RateFunction& rate_fn);

/// Same, with explicitly supplied brackets.
GainEstimate estimate_granularity_interval(const ProbeRecord& rec, SnrBracket before,
                                           SnrBracket after);

/// Interval estimate when the record's powers are noisy sample estimates.
/// Each side holds with probability at least 1 - Q(zeta); the stored
/// confidence is the two-sided union bound 1 - 2 Q(zeta). Requires both
/// power estimates to clear the zeta * sqrt(c_hat) margin, otherwise throws
/// insufficient_snr_error.
GainEstimate estimate_noise_interval(const ProbeRecord& rec, const RateFunction& rate_fn,
                                     const SensingConfig& cfg);

/// Known range for the sensing-gain ratio h~pc(before) / h~pc(after).
struct RatioBounds {
    double lower = 1.0;
    double upper = 1.0;
};

/// Interval estimate when the PR-Tx -> CR-Tx gain may have drifted between
/// the two sensing stages; evaluates the exact rule at both ratio endpoints.
GainEstimate estimate_variation_interval(const ProbeRecord& rec, const RateFunction& rate_fn,
                                         RatioBounds ratio);

/// Overlap of two estimates of the same gain. Combining granularity and
/// noise effects this way is an extension beyond the derivations above; see
/// README. Throws inconsistency_error when the intervals are disjoint.
GainEstimate intersect(const GainEstimate& a, const GainEstimate& b);

}  // namespace hfss
