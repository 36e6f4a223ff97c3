#include "hfss/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hfss/errors.hpp"
#include "hfss/rng.hpp"
#include "hfss/version.hpp"

namespace hfss {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_tci(const PowerPolicy& policy) { return std::holds_alternative<TciPolicy>(policy); }

double observe_power(const ScenarioConfig& cfg, double true_power, std::uint64_t seed) {
    if (!cfg.sensing) return true_power;
    const auto samples = simulate_samples(true_power, *cfg.sensing, seed);
    return estimate_power(samples, cfg.sensing->sigma_c2);
}

GainEstimate estimate_record(const ScenarioConfig& cfg, const ProbeRecord& rec) {
    const bool discrete = cfg.rate_fn.bit_granularity > 0;
    if (cfg.sensing && discrete) {
        // both effects present: overlap of the two intervals (extension). A
        // rate floored all the way to zero leaves only the granularity side.
        const GainEstimate coarse = estimate_granularity_interval(rec, cfg.rate_fn);
        if (rec.after.rate <= 0) return coarse;
        return intersect(coarse, estimate_noise_interval(rec, cfg.rate_fn, *cfg.sensing));
    }
    if (cfg.sensing) return estimate_noise_interval(rec, cfg.rate_fn, *cfg.sensing);
    if (discrete) return estimate_granularity_interval(rec, cfg.rate_fn);
    return estimate_exact(rec, cfg.rate_fn);
}

SweepResult make_result(const ScenarioConfig& cfg) {
    SweepResult result;
    result.scenario_id = cfg.id;
    result.seed = cfg.seed;
    result.version = std::string(kVersion);
    result.penalty_unit = is_tci(cfg.policy) ? PenaltyUnit::db : PenaltyUnit::bits;
    return result;
}

double budget_value(const PenaltyBudget& budget) {
    return std::visit(
        [](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, RateLossBudget>) {
                return b.max_bits;
            } else {
                return b.max_db;
            }
        },
        budget);
}

}  // namespace

void validate(const ScenarioConfig& cfg) {
    validate(cfg.channel);
    validate(cfg.policy);
    validate(cfg.rate_fn);
    if (!(cfg.gamma_gap_c >= 1.0)) {
        throw precondition_error("gamma_gap_c must be >= 1 (linear)");
    }
    if (cfg.sensing) validate(*cfg.sensing);
    if (cfg.timing) validate(*cfg.timing);
    if (cfg.probe_powers.empty()) {
        throw precondition_error("probe power sweep must not be empty");
    }
    for (double p : cfg.probe_powers) {
        if (!(p > 0)) throw precondition_error("probe powers must be strictly positive");
    }
    for (double p : cfg.data_powers) {
        if (p < 0) throw precondition_error("data powers must be non-negative");
    }
    if (cfg.data_powers.empty() && !cfg.budget) {
        throw precondition_error("data power sweep is empty and no penalty budget is set");
    }
    if (cfg.budget) {
        validate(*cfg.budget);
        const bool rate_loss = std::holds_alternative<RateLossBudget>(*cfg.budget);
        if (rate_loss == is_tci(cfg.policy)) {
            throw precondition_error(
                "budget type must match the policy family: rate loss for cp/wf, "
                "power penalty for tci");
        }
    }
    if (cfg.plan_probe_power &&
        std::find(cfg.probe_powers.begin(), cfg.probe_powers.end(), *cfg.plan_probe_power) ==
            cfg.probe_powers.end()) {
        throw precondition_error("plan probe power must be one of the swept probe powers");
    }
    if (cfg.trials < 1) throw precondition_error("trials must be >= 1");
}

SweepResult run_learning_sweep(const ScenarioConfig& cfg) {
    validate(cfg);
    SweepResult result = make_result(cfg);

    const PrState idle = pr_respond(cfg.policy, cfg.rate_fn, cfg.channel, 0.0, cfg.gap_in_policy);
    if (!(idle.power > 0)) {
        throw outage_error(
            "the PR does not transmit without interference; gain estimation is unnecessary");
    }
    const double q0_true = cfg.channel.h_pc_tilde * idle.power;

    const int trials = cfg.sensing ? cfg.trials : 1;
    for (std::size_t i = 0; i < cfg.probe_powers.size(); ++i) {
        const double probe = cfg.probe_powers[i];
        const PrState probed =
            pr_respond(cfg.policy, cfg.rate_fn, cfg.channel, probe, cfg.gap_in_policy);
        const double q1_true = cfg.channel.h_pc_tilde * probed.power;

        LearningPoint point;
        point.probe_power = probe;

        if (!(probed.power > 0)) {
            point.record = {{observe_power(cfg, q0_true, Rng::derive(cfg.seed, i, 0)), idle.rate},
                            {observe_power(cfg, q1_true, Rng::derive(cfg.seed, i, 1)), 0.0},
                            probe};
            point.reprobe_advisory = true;
            result.learning.push_back(point);
            continue;
        }

        double lower_sum = 0.0;
        double upper_sum = 0.0;
        GainEstimate first{};
        for (int t = 0; t < trials; ++t) {
            const ProbeRecord rec{
                {observe_power(cfg, q0_true, Rng::derive(cfg.seed, i, 2 * t)), idle.rate},
                {observe_power(cfg, q1_true, Rng::derive(cfg.seed, i, 2 * t + 1)), probed.rate},
                probe};
            const GainEstimate est = estimate_record(cfg, rec);
            if (t == 0) {
                point.record = rec;
                first = est;
            }
            lower_sum += est.lower;
            upper_sum += est.upper;
        }
        first.lower = lower_sum / trials;
        first.upper = upper_sum / trials;
        point.estimate = first;
        result.learning.push_back(point);
    }
    return result;
}

SweepResult run_transmission_sweep(const ScenarioConfig& cfg, const GainEstimate& estimate) {
    validate(cfg);
    SweepResult result = make_result(cfg);

    const PrState idle = pr_respond(cfg.policy, cfg.rate_fn, cfg.channel, 0.0, cfg.gap_in_policy);
    const bool tci = is_tci(cfg.policy);
    for (double data_power : cfg.data_powers) {
        const PrState adapted =
            pr_respond(cfg.policy, cfg.rate_fn, cfg.channel, data_power, cfg.gap_in_policy);

        TransmissionPoint point;
        point.data_power = data_power;
        point.pr_outage = !(adapted.power > 0);
        if (tci) {
            if (!point.pr_outage && idle.power > 0) {
                point.penalty_actual = 10.0 * std::log10(adapted.power / idle.power);
            }
            point.penalty_predicted = power_penalty_tci(estimate.upper, data_power);
        } else {
            point.penalty_actual = idle.rate - adapted.rate;
            point.penalty_predicted =
                std::holds_alternative<WfPolicy>(cfg.policy)
                    ? rate_penalty_wf(estimate.upper, data_power, idle.rate)
                    : rate_penalty_cp_bound(estimate.upper, data_power);
        }
        point.cr_data_rate =
            cr_rate(cfg.channel, cfg.policy, cfg.rate_fn, cfg.gamma_gap_c, data_power,
                    cfg.gap_in_policy);
        result.transmission.push_back(point);
    }
    return result;
}

SweepResult run_full(const ScenarioConfig& cfg) {
    SweepResult result = run_learning_sweep(cfg);

    const double selected_probe =
        cfg.plan_probe_power ? *cfg.plan_probe_power : cfg.probe_powers.back();
    const auto selected =
        std::find_if(result.learning.begin(), result.learning.end(),
                     [&](const LearningPoint& p) { return p.probe_power == selected_probe; });
    if (selected == result.learning.end() || !selected->estimate) {
        throw outage_error("the selected probe power " + std::to_string(selected_probe) +
                           " silenced the PR; re-probe with a smaller power");
    }
    const GainEstimate estimate = *selected->estimate;

    if (cfg.budget) {
        const double planned = max_power_for_budget(estimate.upper, *cfg.budget);
        if (is_tci(cfg.policy)) {
            const double gap = cfg.gap_in_policy ? cfg.rate_fn.gamma_gap : 1.0;
            const double outage = pr_outage_power(cfg.policy, cfg.channel, gap);
            if (planned >= outage) {
                throw outage_error("planned data power " + std::to_string(planned) +
                                   " reaches the PR outage threshold " + std::to_string(outage) +
                                   "; reduce the power-penalty budget");
            }
        }
        TxPlan plan;
        plan.data_power = planned;
        plan.predicted_penalty = budget_value(*cfg.budget);
        plan.cr_data_rate =
            std::isfinite(planned)
                ? cr_rate(cfg.channel, cfg.policy, cfg.rate_fn, cfg.gamma_gap_c, planned,
                          cfg.gap_in_policy)
                : kInf;
        result.plan = plan;
    }

    if (!cfg.data_powers.empty()) {
        SweepResult transmission = run_transmission_sweep(cfg, estimate);
        result.transmission = std::move(transmission.transmission);
    }
    return result;
}

std::vector<PolicyCurvePoint> policy_curve(const ChannelState& ch, const PowerPolicy& policy,
                                           const RateFunction& rate_fn,
                                           const std::vector<double>& cr_powers,
                                           bool gap_in_policy) {
    std::vector<PolicyCurvePoint> curve;
    curve.reserve(cr_powers.size());
    for (double p : cr_powers) {
        const PrState state = pr_respond(policy, rate_fn, ch, p, gap_in_policy);
        curve.push_back({p, state.power, state.rate});
    }
    return curve;
}

}  // namespace hfss
