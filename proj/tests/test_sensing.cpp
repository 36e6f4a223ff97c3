#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hfss/errors.hpp"
#include "hfss/rng.hpp"
#include "hfss/sensing.hpp"

using namespace hfss;

namespace {

// Independent oracle for the Gaussian tail: composite Simpson over the
// density, truncated 40 sigma out (truncation error < 1e-300).
double gaussian_tail_quadrature(double x) {
    const double lo = x;
    const double hi = x + 40.0;
    const int n = 400000;  // even
    const double h = (hi - lo) / n;
    auto density = [](double t) {
        return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi);
    };
    double sum = density(lo) + density(hi);
    for (int i = 1; i < n; ++i) {
        sum += density(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

}  // namespace

TEST_CASE("q_function agrees with quadrature to 1e-10") {
    for (double x : {-8.0, -2.0, -1.0, 0.0, 0.5, 1.0, 2.0, 2.3, 3.0, 5.0}) {
        CHECK(std::abs(q_function(x) - gaussian_tail_quadrature(x)) < 1e-10);
    }
    CHECK(q_function(0.0) == 0.5);
    CHECK(q_function(2.3) == doctest::Approx(0.0107).epsilon(1e-2));
    CHECK(q_function(-8.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("c_hat matches the closed form") {
    CHECK(c_hat({500, 1.0, 100.0, 2.3}) == doctest::Approx(0.804).epsilon(1e-12));
    CHECK(c_hat({500, 0.0, 100.0, 2.3}) == 0.0);
    // inverse scaling in the sample count
    CHECK(c_hat({1000, 1.0, 100.0, 2.3}) == doctest::Approx(0.402).epsilon(1e-12));
    CHECK(c_hat({2000, 1.0, 100.0, 2.3}) == doctest::Approx(0.201).epsilon(1e-12));
}

TEST_CASE("estimate_power on degenerate inputs") {
    const std::vector<std::complex<double>> zeros(8, {0.0, 0.0});
    CHECK(estimate_power(zeros, 1.0) == -1.0);

    // clean constant-power samples, known floor subtracted
    SensingConfig clean{16, 0.0, 10.0, 0.0};
    const auto samples = simulate_samples(4.0, clean, 7);
    CHECK(estimate_power(samples, 1.0) == doctest::Approx(3.0).epsilon(1e-12));

    CHECK_THROWS_AS(estimate_power({}, 1.0), precondition_error);
}

TEST_CASE("simulate_samples basics") {
    SensingConfig cfg{1, 1.0, 100.0, 2.3};
    CHECK(simulate_samples(5.0, cfg, 3).size() == 1);

    // identical seeds reproduce, different seeds do not
    cfg.m_samples = 32;
    const auto a = simulate_samples(5.0, cfg, 11);
    const auto b = simulate_samples(5.0, cfg, 11);
    const auto c = simulate_samples(5.0, cfg, 12);
    CHECK(a == b);
    CHECK(a != c);

    // pure noise: mean power approaches the noise variance
    SensingConfig wide{200000, 1.0, 100.0, 2.3};
    const auto noise = simulate_samples(0.0, wide, 5);
    CHECK(estimate_power(noise, 0.0) == doctest::Approx(1.0).epsilon(0.02));

    CHECK_THROWS_AS(simulate_samples(-1.0, cfg, 0), precondition_error);
    CHECK_THROWS_AS(simulate_samples(1.0, SensingConfig{0, 1.0, 1.0, 1.0}, 0),
                    precondition_error);
}

TEST_CASE("power estimator statistics across seeds") {
    const SensingConfig cfg{500, 1.0, 100.0, 2.3};
    const double true_q = 100.0;
    const int n_seeds = 10000;

    double sum = 0.0;
    double sum_sq = 0.0;
    int within_3_sqrt_chat = 0;
    for (int s = 0; s < n_seeds; ++s) {
        const auto samples = simulate_samples(true_q, cfg, Rng::derive(99, s));
        const double q_hat = estimate_power(samples, cfg.sigma_c2);
        sum += q_hat;
        sum_sq += q_hat * q_hat;
        // raw sample-mean power clusters around true_q + sigma_c2
        if (std::abs((q_hat + cfg.sigma_c2) - (true_q + cfg.sigma_c2)) <=
            3.0 * std::sqrt(c_hat(cfg))) {
            ++within_3_sqrt_chat;
        }
    }
    const double mean = sum / n_seeds;
    const double variance = sum_sq / n_seeds - mean * mean;

    // unbiased: |mean - q| within 3 standard errors of the true variance
    const double true_var = cfg.sigma_c2 * (cfg.sigma_c2 + 2.0 * true_q) / cfg.m_samples;
    CHECK(std::abs(mean - true_q) <= 3.0 * std::sqrt(true_var / n_seeds));

    // the published bound dominates the realized variance
    CHECK(variance <= c_hat(cfg));
    // and the realized variance matches its closed form (loose MC band)
    CHECK(variance == doctest::Approx(true_var).epsilon(0.1));

    CHECK(within_3_sqrt_chat >= static_cast<int>(0.99 * n_seeds));
}

TEST_CASE("tail frequencies are bounded by Q(zeta) with the c_hat margin") {
    const SensingConfig cfg{500, 1.0, 100.0, 2.3};
    const double true_q = 100.0;
    const int n_seeds = 5000;
    const double margin = cfg.zeta * std::sqrt(c_hat(cfg));

    int below = 0;
    int above = 0;
    for (int s = 0; s < n_seeds; ++s) {
        const auto samples = simulate_samples(true_q, cfg, Rng::derive(1234, s));
        const double q_hat = estimate_power(samples, cfg.sigma_c2);
        if (q_hat <= true_q - margin) ++below;
        if (q_hat >= true_q + margin) ++above;
    }
    const double q_zeta = q_function(cfg.zeta);
    const double tolerance = 3.0 * std::sqrt(q_zeta * (1.0 - q_zeta) / n_seeds);
    CHECK(static_cast<double>(below) / n_seeds <= q_zeta + tolerance);
    CHECK(static_cast<double>(above) / n_seeds <= q_zeta + tolerance);
}

TEST_CASE("tail calibration against the exact variance") {
    // with the margin built from the true per-point variance the tail
    // frequency should sit near Q(zeta) itself, pinning the sample model
    const SensingConfig cfg{500, 1.0, 100.0, 1.0};
    const double true_q = 100.0;
    const int n_seeds = 20000;
    const double true_var = cfg.sigma_c2 * (cfg.sigma_c2 + 2.0 * true_q) / cfg.m_samples;
    const double margin = cfg.zeta * std::sqrt(true_var);

    int below = 0;
    for (int s = 0; s < n_seeds; ++s) {
        const auto samples = simulate_samples(true_q, cfg, Rng::derive(777, s));
        if (estimate_power(samples, cfg.sigma_c2) <= true_q - margin) ++below;
    }
    const double expected = q_function(cfg.zeta);  // 0.1587
    const double se = std::sqrt(expected * (1.0 - expected) / n_seeds);
    CHECK(std::abs(static_cast<double>(below) / n_seeds - expected) <= 4.0 * se);
}
