#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace fsocap::channel {

// Composite irradiance distribution: Gamma-Gamma scintillation alone, or
// Gamma-Gamma times the Rayleigh-jitter pointing fluctuation.
class ChannelModel {
public:
    enum class Kind { GGOnly, GGPointing };

    // gain_scale applies a deterministic received-power scale to the
    // no-pointing-error channel (lambda = gain * I_a), so geometric loss can
    // be accounted for without the jitter model.
    static ChannelModel gg_only(double a, double b, double gain_scale = 1.0);
    static ChannelModel gg_pointing(double a, double b, double xi, double A0);

    Kind kind() const { return kind_; }
    bool has_pointing() const { return kind_ == Kind::GGPointing; }
    double a() const { return a_; }
    double b() const { return b_; }
    double xi() const { return xi_; }    // +inf for GGOnly
    double xi2() const { return xi_ * xi_; }
    double A0() const { return A0_; }    // 1 unless pointing or gain scale
    double gain() const { return gain_; }

    double mean_irradiance() const;      // E[lambda]

private:
    ChannelModel() = default;
    Kind kind_ = Kind::GGOnly;
    double a_ = 0.0, b_ = 0.0;
    double xi_ = 0.0, A0_ = 1.0;
    double gain_ = 1.0;
};

// Gamma-Gamma density, i > 0.
double pdf_gg(double i, double a, double b);

// Pointing-error density (xi^2/A0^xi^2) i^(xi^2-1) on (0, A0]; 0 outside.
double pdf_pointing(double i, double xi, double A0);

// Density of the composite model (closed Meijer-G form for GGPointing).
double pdf_composite(double i, const ChannelModel& model);

// P(lambda > mu).
double tail_probability(double mu, const ChannelModel& model);

// E[lambda^{-1}; lambda > mu] — the other ingredient of the waterfilling
// power constraint.
double inverse_moment_tail(double mu, const ChannelModel& model);

// Seed-deterministic i.i.d. draws of the composite irradiance.
std::vector<double> sample_irradiance(const ChannelModel& model,
                                      std::uint64_t seed, std::size_t count);

// Deterministic RNG used by the sampler; the raw mt19937_64 stream is fixed
// by the standard and the transforms below are hand-rolled, so sequences are
// reproducible across platforms. Exposed so the Monte-Carlo CLI and tests can
// draw from the same streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform();             // (0, 1)
    double normal();              // standard normal, Marsaglia polar
    double gamma(double shape);   // Gamma(shape, scale 1), Marsaglia-Tsang

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace fsocap::channel
