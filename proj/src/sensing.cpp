#include "hfss/sensing.hpp"

#include <cmath>
#include <numbers>

#include "hfss/errors.hpp"
#include "hfss/rng.hpp"

namespace hfss {

void validate(const SensingConfig& cfg) {
    if (cfg.m_samples < 1) throw precondition_error("m_samples must be >= 1");
    if (cfg.sigma_c2 < 0) throw precondition_error("sigma_c2 must be non-negative");
    if (cfg.p_max < 0) throw precondition_error("p_max must be non-negative");
    if (cfg.zeta < 0) throw precondition_error("zeta must be non-negative");
}

std::vector<std::complex<double>> simulate_samples(double true_power, const SensingConfig& cfg,
                                                   std::uint64_t seed) {
    validate(cfg);
    if (true_power < 0) throw precondition_error("true_power must be non-negative");
    Rng rng(seed);
    const double amplitude = std::sqrt(true_power);
    std::vector<std::complex<double>> samples;
    samples.reserve(static_cast<std::size_t>(cfg.m_samples));
    for (int m = 0; m < cfg.m_samples; ++m) {
        const double phase = 2.0 * std::numbers::pi * rng.uniform01();
        const std::complex<double> signal{amplitude * std::cos(phase),
                                          amplitude * std::sin(phase)};
        samples.push_back(signal + rng.cs_gaussian(cfg.sigma_c2));
    }
    return samples;
}

double estimate_power(std::span<const std::complex<double>> samples, double sigma_c2) {
    if (samples.empty()) throw precondition_error("estimate_power needs at least one sample");
    double sum = 0.0;
    for (const auto& s : samples) sum += std::norm(s);
    return sum / static_cast<double>(samples.size()) - sigma_c2;
}

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double c_hat(const SensingConfig& cfg) {
    validate(cfg);
    return 2.0 * cfg.sigma_c2 * (cfg.sigma_c2 + 2.0 * cfg.p_max) /
           static_cast<double>(cfg.m_samples);
}

}  // namespace hfss
