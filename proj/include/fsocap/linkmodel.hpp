#pragma once

#include <stdexcept>

namespace fsocap::link {

// Physical Tx/Rx/path parameters, SI units (meters).
struct LinkGeometry {
    double wavelength = 1550e-9;     // optical wavelength
    double beam_waist = 0.012;       // w0 at the Tx exit aperture
    double path_length = 1800.0;     // L
    double aperture_radius = 0.015;  // r_A at the Rx
    double jitter_sigma = 0.1;       // pointing-jitter std dev (0 = no jitter)
};

struct TurbulenceState {
    double rytov_variance = 0.0;
    double cn2 = 0.0;  // refractive-index structure parameter, m^(-2/3)
    double a = 0.0;    // Gamma-Gamma shape parameters
    double b = 0.0;
};

struct PointingState {
    double rho0 = 0.0;     // plane-wave coherence length
    double epsilon = 0.0;  // global coherence parameter
    double w_L = 0.0;      // beam radius at the receiver
    double v = 0.0;
    double A0 = 0.0;       // collected power fraction at zero displacement
    double w_Leq = 0.0;    // equivalent beam width
    double xi = 0.0;       // w_Leq / (2 sigma_e); +inf when jitter_sigma == 0
    // Eq.-style pointing statistics assume w_L/r_A >> 1; false flags a
    // geometry where that ratio is <= 5.
    bool beam_ratio_ok = true;

    double xi2() const { return xi * xi; }
};

// Gamma-Gamma (a, b) from the plane-wave Rytov variance.
std::pair<double, double> gg_params_from_rytov(double rytov_variance);

double rytov_from_cn2(double cn2, const LinkGeometry& geom);
double cn2_from_rytov(double rytov_variance, const LinkGeometry& geom);

TurbulenceState turbulence_from_rytov(double rytov_variance,
                                      const LinkGeometry& geom);

// Beam-spread chain: cn2 -> rho0 -> epsilon -> w_L -> (v, A0, w_Leq, xi).
PointingState derive_pointing_state(const LinkGeometry& geom, double cn2);

}  // namespace fsocap::link
