#include "fsocap/capacity.hpp"

#include <algorithm>
#include <cmath>

#include "fsocap/numerics.hpp"
#include "fsocap/special.hpp"

namespace fsocap::capacity {

namespace {

void check_snr(double snr) {
    if (!(snr > 0.0) || !std::isfinite(snr))
        throw std::domain_error("capacity: requires finite snr > 0");
}

void check_imdd_floor(const DetectionScheme& scheme, double snr,
                      const CapacityOptions& opts) {
    if (scheme.kind != Detection::IMDD || opts.allow_imdd_below_floor) return;
    double floor = std::pow(10.0, opts.imdd_snr_floor_db / 10.0);
    if (snr < floor)
        throw ValidityError(
            "IM-DD capacity model is valid only at high transmit power; "
            "override to evaluate below the configured floor");
}

double residual_by_quadrature(double mu, const channel::ChannelModel& model,
                              double snr) {
    auto r = numerics::integrate_semi_infinite(
        [&](double l) {
            return (1.0 / mu - 1.0 / l) * channel::pdf_composite(l, model);
        },
        mu, {1e-11, 1e-300, 2'000'000});
    return r.value - snr;
}

}  // namespace

double power_constraint_residual(double mu, const channel::ChannelModel& model,
                                 double snr) {
    if (!(mu > 0.0))
        throw std::domain_error("power_constraint_residual: requires mu > 0");
    check_snr(snr);
    try {
        return channel::tail_probability(mu, model) / mu -
               channel::inverse_moment_tail(mu, model) - snr;
    } catch (const special::SpecialFunctionError&) {
        return residual_by_quadrature(mu, model, snr);
    }
}

double threshold_asymptote(const channel::ChannelModel& model, double snr,
                           SnrRegime regime) {
    check_snr(snr);
    if (regime == SnrRegime::High) return 1.0 / snr;
    double lg = std::log(1.0 / snr);
    return low_snr_scaling_factor(model) * lg * lg;
}

double solve_threshold(const channel::ChannelModel& model, double snr) {
    check_snr(snr);
    double seed_high = threshold_asymptote(model, snr, SnrRegime::High);
    double seed_low =
        std::max(threshold_asymptote(model, snr, SnrRegime::Low), 1e-300);
    double lo = std::min(seed_high, seed_low) / 100.0;
    double hi = std::max(seed_high, seed_low) * 100.0;

    auto g = [&](double mu) {
        return power_constraint_residual(mu, model, snr) / snr;
    };
    double glo = g(lo), ghi = g(hi);
    int expand = 0;
    while (glo < 0.0 && expand++ < 60) {  // residual decreasing: need glo > 0
        lo /= 10.0;
        glo = g(lo);
    }
    expand = 0;
    while (ghi > 0.0 && expand++ < 60) {
        hi *= 10.0;
        ghi = g(hi);
    }
    if (glo < 0.0 || ghi > 0.0)
        throw numerics::BracketError(
            "solve_threshold: failed to bracket the power-constraint root");
    return numerics::find_root_monotone(g, lo, hi, {1e-13, 1e-12, 1'000'000});
}

namespace {

double exact_nats(const channel::ChannelModel& model, double mu) {
    double a = model.a(), b = model.b();
    double lgg = special::ln_gamma(a) + special::ln_gamma(b);
    double psi_sum = special::digamma(a) + special::digamma(b);
    double c;
    if (model.has_pointing()) {
        double x2 = model.xi2(), A0 = model.A0();
        double g = special::meijer_g(
            special::MeijerGSpec::capacity_pointing(a, b, x2), a * b * mu / A0);
        c = std::log(A0 / (a * b)) + psi_sum - 1.0 / x2 - std::log(mu) +
            x2 * std::exp(-lgg) * g;
    } else {
        double meff = mu / model.gain();
        double g = special::meijer_g(special::MeijerGSpec::capacity_gg(a, b),
                                     a * b * meff);
        c = -std::log(a * b) + psi_sum - std::log(meff) + std::exp(-lgg) * g;
    }
    if (c < 0.0 && c > -1e-9) c = 0.0;  // roundoff at the crossover
    return c;
}

}  // namespace

CapacityPoint capacity_exact(const channel::ChannelModel& model,
                             const DetectionScheme& scheme, double snr,
                             const CapacityOptions& opts) {
    check_snr(snr);
    check_imdd_floor(scheme, snr, opts);
    CapacityPoint pt;
    pt.snr = snr;
    pt.scheme = scheme;
    pt.method = Method::Exact;
    pt.threshold = solve_threshold(model, snr);
    pt.capacity_nats = exact_nats(model, pt.threshold) / scheme.k;
    return pt;
}

CapacityPoint capacity_oracle(const channel::ChannelModel& model,
                              const DetectionScheme& scheme, double snr,
                              const CapacityOptions& opts) {
    check_snr(snr);
    check_imdd_floor(scheme, snr, opts);
    CapacityPoint pt;
    pt.snr = snr;
    pt.scheme = scheme;
    pt.method = Method::Oracle;
    double mu = solve_threshold(model, snr);
    pt.threshold = mu;
    auto r = numerics::integrate_semi_infinite(
        [&](double l) {
            return std::log(l / mu) * channel::pdf_composite(l, model);
        },
        mu, {1e-10, 1e-300, 2'000'000});
    pt.capacity_nats = std::max(r.value, 0.0) / scheme.k;
    return pt;
}

CapacityPoint capacity_asymptotic_low(const channel::ChannelModel& model,
                                      const DetectionScheme& scheme,
                                      double snr) {
    check_snr(snr);
    if (scheme.kind == Detection::IMDD)
        throw ValidityError(
            "low-SNR asymptote applies to the HD scheme only; the IM-DD model "
            "is not valid at low power");
    if (!(snr < 1.0))
        throw std::domain_error("capacity_asymptotic_low: requires snr < 1");
    CapacityPoint pt;
    pt.snr = snr;
    pt.scheme = scheme;
    pt.method = Method::AsymptoticLow;
    double lg = std::log(1.0 / snr);
    pt.threshold = low_snr_scaling_factor(model) * lg * lg;
    pt.capacity_nats = low_snr_scaling_factor(model) * snr * lg * lg / scheme.k;
    return pt;
}

CapacityPoint capacity_asymptotic_high(const channel::ChannelModel& model,
                                       const DetectionScheme& scheme,
                                       double snr) {
    check_snr(snr);
    if (!(snr > 1.0))
        throw std::domain_error("capacity_asymptotic_high: requires snr > 1");
    CapacityPoint pt;
    pt.snr = snr;
    pt.scheme = scheme;
    pt.method = Method::AsymptoticHigh;
    pt.threshold = 1.0 / snr;
    pt.capacity_nats = (std::log(snr) + penalty_high_snr(model)) / scheme.k;
    return pt;
}

double penalty_high_snr(const channel::ChannelModel& model) {
    double a = model.a(), b = model.b();
    double psi_sum = special::digamma(a) + special::digamma(b);
    if (model.has_pointing())
        return std::log(model.A0() / (a * b)) + psi_sum - 1.0 / model.xi2();
    return psi_sum - std::log(a * b) + std::log(model.gain());
}

double jitter_loss(double xi_old, double xi_new, const DetectionScheme& scheme) {
    if (!(xi_old > 0.0) || !(xi_new > 0.0))
        throw std::domain_error("jitter_loss: xi values must be positive");
    return (1.0 / (xi_new * xi_new) - 1.0 / (xi_old * xi_old)) / scheme.k;
}

double low_snr_scaling_factor(const channel::ChannelModel& model) {
    double scale = model.has_pointing() ? model.A0() : model.gain();
    return scale / (4.0 * model.a() * model.b());
}

}  // namespace fsocap::capacity
