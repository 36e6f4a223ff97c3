#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace hfss {

/// Parameters of the CR power-measurement stage.
struct SensingConfig {
    int m_samples = 1;      ///< samples per sensing stage, M >= 1
    double sigma_c2 = 1.0;  ///< sensor noise variance at CR-Tx
    double p_max = 0.0;     ///< known cap on the PR transmit power
    double zeta = 0.0;      ///< confidence parameter (0 degenerates to exact)
};

void validate(const SensingConfig& cfg);

/// One (received power, observed rate) pair from a sensing stage. The power
/// may be exact or a noisy estimate; noisy estimates can dip below zero after
/// the noise floor is subtracted.
struct PrObservation {
    double power = 0.0;  ///< q
    double rate = 0.0;   ///< r, bps/Hz (delivered exactly by the simulator)
};

/// M complex baseband samples of the PR signal as received at CR-Tx:
/// a constant-envelope signal of per-sample power true_power with i.i.d.
/// uniform phase, plus circularly symmetric Gaussian noise of variance
/// sigma_c2. Deterministic in seed.
std::vector<std::complex<double>> simulate_samples(double true_power, const SensingConfig& cfg,
                                                   std::uint64_t seed);

/// Sample-mean power with the known noise floor subtracted. May be negative;
/// callers guard via their own preconditions.
double estimate_power(std::span<const std::complex<double>> samples, double sigma_c2);

/// Standard Gaussian tail probability P(N(0,1) > x).
double q_function(double x);

/// Upper bound on the variance of estimate_power under the power cap:
/// 2 * sigma_c2 * (sigma_c2 + 2 * p_max) / M.
double c_hat(const SensingConfig& cfg);

}  // namespace hfss
