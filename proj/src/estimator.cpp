#include "hfss/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hfss/errors.hpp"

namespace hfss {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double v, const char* what) {
    if (!(v > 0)) {
        throw precondition_error(std::string(what) + " must be strictly positive");
    }
}

void require_continuous(const RateFunction& fn) {
    if (fn.bit_granularity > 0) {
        throw precondition_error("a continuous rate map (bit_granularity = 0) is required");
    }
}

// Discretized rates are integer multiples of the granularity.
void require_on_grid(double rate, double granularity) {
    const double steps = rate / granularity;
    if (std::abs(steps - std::round(steps)) > 1e-6) {
        throw precondition_error("observed rate is not a multiple of the bit granularity");
    }
}

GainEstimate point_estimate(double ratio, double probe_power, EstimateKind kind) {
    const double value = (ratio - 1.0) / probe_power;
    if (value < 0) {
        throw inconsistency_error("observations imply a negative gain");
    }
    return {value, value, kind, 1.0, 1.0};
}

}  // namespace

double GainEstimate::value() const {
    if (kind != EstimateKind::exact) {
        throw precondition_error("value() is only defined for exact estimates");
    }
    return lower;
}

GainEstimate estimate_exact(const ProbeRecord& rec, const RateFunction& rate_fn) {
    require_continuous(rate_fn);
    require_positive(rec.before.power, "q0");
    require_positive(rec.before.rate, "r0");
    require_positive(rec.after.power, "q1");
    require_positive(rec.after.rate, "r1");
    require_positive(rec.probe_power, "probe power");
    const double snr0 = rate_fn.inverse(rec.before.rate);
    const double snr1 = rate_fn.inverse(rec.after.rate);
    return point_estimate(snr0 * rec.after.power / (snr1 * rec.before.power), rec.probe_power,
                          EstimateKind::exact);
}

GainEstimate estimate_cp(const ProbeRecord& rec, const RateFunction& rate_fn) {
    require_continuous(rate_fn);
    require_positive(rec.before.rate, "r0");
    require_positive(rec.after.rate, "r1");
    require_positive(rec.probe_power, "probe power");
    return point_estimate(rate_fn.inverse(rec.before.rate) / rate_fn.inverse(rec.after.rate),
                          rec.probe_power, EstimateKind::exact);
}

GainEstimate estimate_tci(const ProbeRecord& rec) {
    require_positive(rec.before.power, "q0");
    require_positive(rec.after.power, "q1");
    require_positive(rec.probe_power, "probe power");
    return point_estimate(rec.after.power / rec.before.power, rec.probe_power,
                          EstimateKind::exact);
}

SnrBracket snr_bracket(const RateFunction& rate_fn, double rate) {
    validate(rate_fn);
    if (!(rate_fn.bit_granularity > 0)) {
        throw precondition_error("snr_bracket needs a discretized rate map");
    }
    if (rate < 0) throw precondition_error("rate must be non-negative");
    require_on_grid(rate, rate_fn.bit_granularity);
    return {rate_fn.gamma_gap * (std::exp2(rate) - 1.0),
            rate_fn.gamma_gap * (std::exp2(rate + rate_fn.bit_granularity) - 1.0)};
}

GainEstimate estimate_granularity_interval(const ProbeRecord& rec, const RateFunction& rate_fn) {
    if (!(rate_fn.bit_granularity > 0)) {
        throw precondition_error("granularity interval needs a discretized rate map");
    }
    require_positive(rec.before.rate, "r0");
    return estimate_granularity_interval(rec, snr_bracket(rate_fn, rec.before.rate),
                                         snr_bracket(rate_fn, rec.after.rate));
}

GainEstimate estimate_granularity_interval(const ProbeRecord& rec, SnrBracket before,
                                           SnrBracket after) {
    require_positive(rec.before.power, "q0");
    require_positive(rec.after.power, "q1");
    require_positive(rec.probe_power, "probe power");
    require_positive(before.lower, "pre-probe SNR bracket");
    const double power_ratio = rec.after.power / rec.before.power;
    const double lower = std::max(
        0.0, (before.lower * power_ratio / after.upper - 1.0) / rec.probe_power);
    // after.lower = 0 means the probe silenced the PR: no finite upper bound
    const double upper = after.lower > 0
                             ? (before.upper * power_ratio / after.lower - 1.0) / rec.probe_power
                             : kInf;
    if (upper < lower) {
        throw inconsistency_error("granularity brackets and powers are inconsistent");
    }
    return {lower, upper, EstimateKind::granularity, 1.0, 1.0};
}

GainEstimate estimate_noise_interval(const ProbeRecord& rec, const RateFunction& rate_fn,
                                     const SensingConfig& cfg) {
    validate(cfg);
    require_positive(rec.before.rate, "r0");
    require_positive(rec.after.rate, "r1");
    require_positive(rec.probe_power, "probe power");
    const double margin = cfg.zeta * std::sqrt(c_hat(cfg));
    if (!(rec.before.power > margin) || !(rec.after.power > margin)) {
        throw insufficient_snr_error(
            "power estimates do not clear the confidence margin zeta*sqrt(c_hat); "
            "increase m_samples or reduce zeta");
    }
    const double snr_ratio = rate_fn.inverse(rec.before.rate) / rate_fn.inverse(rec.after.rate);
    const double upper =
        (snr_ratio * (rec.after.power + margin) / (rec.before.power - margin) - 1.0) /
        rec.probe_power;
    const double lower = std::max(
        0.0, (snr_ratio * (rec.after.power - margin) / (rec.before.power + margin) - 1.0) /
                 rec.probe_power);
    if (upper < 0) {
        throw inconsistency_error("noisy observations imply a negative gain upper bound");
    }
    const double per_side = 1.0 - q_function(cfg.zeta);
    const double two_sided = std::max(0.0, 1.0 - 2.0 * q_function(cfg.zeta));
    return {lower, upper, EstimateKind::noise, two_sided, per_side};
}

GainEstimate estimate_variation_interval(const ProbeRecord& rec, const RateFunction& rate_fn,
                                         RatioBounds ratio) {
    if (!(ratio.lower > 0) || !(ratio.upper >= ratio.lower)) {
        throw precondition_error("ratio bounds must satisfy 0 < lower <= upper");
    }
    require_continuous(rate_fn);
    require_positive(rec.before.power, "q0");
    require_positive(rec.before.rate, "r0");
    require_positive(rec.after.power, "q1");
    require_positive(rec.after.rate, "r1");
    require_positive(rec.probe_power, "probe power");
    const double base = rate_fn.inverse(rec.before.rate) * rec.after.power /
                        (rate_fn.inverse(rec.after.rate) * rec.before.power);
    const double upper = (base * ratio.upper - 1.0) / rec.probe_power;
    if (upper < 0) {
        throw inconsistency_error("observations imply a negative gain for the whole ratio range");
    }
    const double lower = std::max(0.0, (base * ratio.lower - 1.0) / rec.probe_power);
    return {lower, upper, EstimateKind::variation, 1.0, 1.0};
}

GainEstimate intersect(const GainEstimate& a, const GainEstimate& b) {
    GainEstimate out;
    out.lower = std::max(a.lower, b.lower);
    out.upper = std::min(a.upper, b.upper);
    if (out.upper < out.lower) {
        throw inconsistency_error("gain estimates do not overlap");
    }
    out.kind = (a.kind == EstimateKind::noise || b.kind == EstimateKind::noise)
                   ? EstimateKind::noise
                   : a.kind;
    // Frechet bound for the joint coverage
    out.confidence = std::max(0.0, a.confidence + b.confidence - 1.0);
    out.per_side_confidence =
        std::max(0.0, a.per_side_confidence + b.per_side_confidence - 1.0);
    return out;
}

}  // namespace hfss
