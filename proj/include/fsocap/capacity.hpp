#pragma once

#include <stdexcept>

#include "fsocap/channel.hpp"

namespace fsocap::capacity {

enum class Detection { HD, IMDD };

// Unified detection parameterisation: k = 1 for heterodyne detection (two
// signalling degrees of freedom), k = 2 for shot-noise-limited IM-DD.
struct DetectionScheme {
    Detection kind = Detection::HD;
    int k = 1;
    double noise_density = 1.0;  // N_k; capacities take snr = P_avg / N_k

    static DetectionScheme hd(double noise_density = 1.0) {
        return {Detection::HD, 1, noise_density};
    }
    static DetectionScheme imdd(double noise_density = 1.0) {
        return {Detection::IMDD, 2, noise_density};
    }
};

enum class Method { Exact, Oracle, AsymptoticLow, AsymptoticHigh, MonteCarlo };

struct CapacityPoint {
    double snr = 0.0;            // linear transmit SNR
    double threshold = 0.0;      // waterfilling cutoff mu_k
    double capacity_nats = 0.0;  // per symbol
    Method method = Method::Exact;
    DetectionScheme scheme;
};

struct CapacityOptions {
    // The shot-noise-limited IM-DD signal model is a capacity statement only
    // at high optical power; refuse below this transmit SNR unless overridden.
    double imdd_snr_floor_db = 10.0;
    bool allow_imdd_below_floor = false;
};

// The IM-DD model was asked for outside its validity region.
class ValidityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// E[(1/mu - 1/lambda)^+] - snr; strictly decreasing in mu. Closed Meijer-G
// forms for the pointing-error channel, quadrature for GG-only (and as the
// fallback when a closed-form evaluation fails).
double power_constraint_residual(double mu, const channel::ChannelModel& model,
                                 double snr);

// Unique root of the power constraint, bracket seeded from the two threshold
// asymptotes.
double solve_threshold(const channel::ChannelModel& model, double snr);

CapacityPoint capacity_exact(const channel::ChannelModel& model,
                             const DetectionScheme& scheme, double snr,
                             const CapacityOptions& opts = {});

// Direct adaptive quadrature of the capacity integral; the internal oracle
// every closed form is checked against.
CapacityPoint capacity_oracle(const channel::ChannelModel& model,
                              const DetectionScheme& scheme, double snr,
                              const CapacityOptions& opts = {});

// Low-SNR expansion (HD only; the IM-DD model is not valid there).
CapacityPoint capacity_asymptotic_low(const channel::ChannelModel& model,
                                      const DetectionScheme& scheme, double snr);

CapacityPoint capacity_asymptotic_high(const channel::ChannelModel& model,
                                       const DetectionScheme& scheme, double snr);

// Constant offset of the high-SNR asymptote relative to log SNR, in raw nats
// (the 1/k factor is left to the caller).
double penalty_high_snr(const channel::ChannelModel& model);

// High-SNR capacity loss from raising the jitter ratio xi_old -> xi_new.
double jitter_loss(double xi_old, double xi_new, const DetectionScheme& scheme);

// Coefficient of snr * log^2(1/snr) in the low-SNR capacity.
double low_snr_scaling_factor(const channel::ChannelModel& model);

enum class SnrRegime { Low, High };

double threshold_asymptote(const channel::ChannelModel& model, double snr,
                           SnrRegime regime);

}  // namespace fsocap::capacity
