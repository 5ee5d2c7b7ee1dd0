#pragma once

#include <cstdint>

#include "fsocap/channel.hpp"

// Independent reference computations the implementation is checked against.
// Each deliberately takes a different route than the library code it tests.
namespace fsocap::test_oracles {

// log Gamma by Stirling's series with a large recurrence shift; no library
// gamma calls involved.
double stirling_ln_gamma(double x);

// erf by its Maclaurin series, summed to machine precision (|x| <= 3).
double maclaurin_erf(double x);

// K_nu(x) from the integral representation int_0^inf e^{-x cosh t} cosh(nu t) dt.
double bessel_k_integral(double nu, double x);

// Composite irradiance density from the conditioning integral
// (pointing-conditional density integrated against the Gamma-Gamma density).
double pdf_composite_conditioning(double i, double a, double b, double xi,
                                  double A0);

// Waterfilling threshold by brute-force bisection on a 10^6-point log grid,
// with the power constraint evaluated purely by quadrature.
double threshold_grid_bisection(const channel::ChannelModel& model, double snr);

// Histogram density estimate of the product of two scaled Gamma variates at
// a point, using the standard-library gamma sampler (not the project Rng).
double gg_density_histogram(double at, double a, double b, std::uint64_t seed,
                            std::size_t samples, double bin_width);

}  // namespace fsocap::test_oracles
