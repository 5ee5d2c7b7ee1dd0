#include "fsocap/linkmodel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "fsocap/special.hpp"

namespace fsocap::link {

namespace {

constexpr double kPi = std::numbers::pi;

void check_geometry(const LinkGeometry& g) {
    if (!(g.wavelength > 0.0) || !(g.beam_waist > 0.0) ||
        !(g.path_length > 0.0) || !(g.aperture_radius > 0.0))
        throw std::domain_error("LinkGeometry: lengths must be positive");
    if (g.jitter_sigma < 0.0)
        throw std::domain_error("LinkGeometry: jitter_sigma must be >= 0");
}

double wave_number(const LinkGeometry& g) { return 2.0 * kPi / g.wavelength; }

double rytov_coefficient(const LinkGeometry& g) {
    return 1.23 * std::pow(wave_number(g), 7.0 / 6.0) *
           std::pow(g.path_length, 11.0 / 6.0);
}

}  // namespace

std::pair<double, double> gg_params_from_rytov(double rytov_variance) {
    if (!(rytov_variance > 0.0))
        throw std::domain_error("gg_params_from_rytov: requires rytov_variance > 0");
    double s = rytov_variance;
    double s125 = std::pow(s, 12.0 / 5.0 / 2.0);  // sigma_R^{12/5} = (sigma_R^2)^{6/5}
    double a = 1.0 / std::expm1(0.49 * s / std::pow(1.0 + 1.11 * s125, 7.0 / 6.0));
    double b = 1.0 / std::expm1(0.51 * s / std::pow(1.0 + 0.69 * s125, 5.0 / 6.0));
    return {a, b};
}

double rytov_from_cn2(double cn2, const LinkGeometry& geom) {
    check_geometry(geom);
    if (!(cn2 > 0.0)) throw std::domain_error("rytov_from_cn2: requires cn2 > 0");
    return rytov_coefficient(geom) * cn2;
}

double cn2_from_rytov(double rytov_variance, const LinkGeometry& geom) {
    check_geometry(geom);
    if (!(rytov_variance > 0.0))
        throw std::domain_error("cn2_from_rytov: requires rytov_variance > 0");
    return rytov_variance / rytov_coefficient(geom);
}

TurbulenceState turbulence_from_rytov(double rytov_variance,
                                      const LinkGeometry& geom) {
    TurbulenceState t;
    t.rytov_variance = rytov_variance;
    t.cn2 = cn2_from_rytov(rytov_variance, geom);
    std::tie(t.a, t.b) = gg_params_from_rytov(rytov_variance);
    return t;
}

PointingState derive_pointing_state(const LinkGeometry& geom, double cn2) {
    check_geometry(geom);
    if (!(cn2 > 0.0))
        throw std::domain_error("derive_pointing_state: requires cn2 > 0");

    PointingState p;
    double kw = wave_number(geom);
    p.rho0 = std::pow(1.46 * cn2 * kw * kw * geom.path_length, -3.0 / 5.0);
    p.epsilon = 1.0 + 2.0 * geom.beam_waist * geom.beam_waist / (p.rho0 * p.rho0);
    // Collimated-beam spread; the Fresnel ratio enters squared.
    double fresnel = geom.wavelength * geom.path_length /
                     (kPi * geom.beam_waist * geom.beam_waist);
    p.w_L = geom.beam_waist * std::sqrt(1.0 + p.epsilon * fresnel * fresnel);
    p.v = std::sqrt(kPi) * geom.aperture_radius / (std::sqrt(2.0) * p.w_L);
    double erf_v = special::erf(p.v);
    p.A0 = erf_v * erf_v;
    p.w_Leq = p.w_L * std::sqrt(std::sqrt(kPi) * erf_v /
                                (2.0 * p.v * std::exp(-p.v * p.v)));
    p.xi = geom.jitter_sigma == 0.0
               ? std::numeric_limits<double>::infinity()
               : p.w_Leq / (2.0 * geom.jitter_sigma);
    p.beam_ratio_ok = p.w_L / geom.aperture_radius > 5.0;
    return p;
}

}  // namespace fsocap::link
