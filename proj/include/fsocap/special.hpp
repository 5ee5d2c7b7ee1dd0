#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace fsocap::special {

// Thrown when parameters leave the domain where an evaluation is defined
// (e.g. pole-coincident Meijer-G parameters with no separating contour).
class SpecialFunctionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// log Gamma(x) for x > 0.
double ln_gamma(double x);

// log |Gamma(x)| together with the sign of Gamma(x); valid for any x that is
// not a pole (0, -1, -2, ...).
struct SignedLogGamma {
    double log_abs;
    int sign;  // +1 or -1
};
SignedLogGamma ln_gamma_signed(double x);

// log Gamma(z) on the complex plane (principal branch), poles excluded.
std::complex<double> ln_gamma(std::complex<double> z);

// Digamma psi(x) for x > 0.
double digamma(double x);

// Error function. Thin wrapper so all special-function entry points live here.
double erf(double x);

// Modified Bessel function of the second kind K_nu(x), fractional order,
// |nu| <= 20, x > 0. Relative accuracy ~1e-12 for x in (0, 100].
double bessel_k(double nu, double x);

// Meijer-G parameter block. p = a.size(), q = b.size(); the first m entries
// of b and the first n entries of a are the "pole" groups of the defining
// Mellin-Barnes integrand.
struct MeijerGSpec {
    int m = 0;
    int n = 0;
    std::vector<double> a;
    std::vector<double> b;

    int p() const { return static_cast<int>(a.size()); }
    int q() const { return static_cast<int>(b.size()); }

    // The instances used by the irradiance / capacity closed forms.
    static MeijerGSpec bessel_pair(double nu);                                // G^{2,0}_{0,2}
    static MeijerGSpec irradiance_pdf(double a, double b, double xi2);        // G^{3,0}_{1,3}
    static MeijerGSpec irradiance_cdf(double a, double b, double xi2);        // G^{3,1}_{2,4}
    static MeijerGSpec inverse_moment(double a, double b, double xi2);        // G^{3,1}_{2,4}, shifted
    static MeijerGSpec capacity_gg(double a, double b);                       // G^{2,2}_{2,4}
    static MeijerGSpec capacity_pointing(double a, double b, double xi2);     // G^{3,2}_{3,5}
};

// Meijer-G function of real argument x > 0 for the supported (m,n,p,q)
// shapes {(2,0,0,2), (3,0,1,3), (3,1,2,4), (2,2,2,4), (3,2,3,5)}.
// Dispatches between the residue (Slater) series and the Mellin-Barnes
// contour; pole-coincident parameter sets are evaluated by averaging two
// delta-perturbed calls, with the contour as arbiter when that is unstable.
double meijer_g(const MeijerGSpec& spec, double x);

// Direct Mellin-Barnes contour quadrature along a vertical line chosen
// inside the pole-separating strip. Independent of the series path; used as
// the oracle in tests and as the runtime fallback.
double meijer_g_contour(const MeijerGSpec& spec, double x);

// Mellin-Barnes line integral of the standard G integrand along Re(s) = c.
// With c inside the separating strip this equals meijer_g; with c placed
// left of the a-group poles it yields G minus the residues crossed, which is
// how the tail/inverse-moment complements are evaluated at large argument.
double meijer_g_line(const MeijerGSpec& spec, double x, double c);

}  // namespace fsocap::special
