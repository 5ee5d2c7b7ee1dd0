#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>

namespace fsocap::numerics {

struct ToleranceSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    std::size_t max_evaluations = 1'000'000;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
};

// Non-convergence still carries the best estimate reached.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, QuadratureResult best)
        : std::runtime_error(what), best_estimate(best) {}
    QuadratureResult best_estimate;
};

class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RootConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using RealFunction = std::function<double(double)>;

// Integral of f over [lower, inf). A sqrt substitution x = lower + t^2
// restores exponential decay for integrands with Bessel-K type
// exp(-c*sqrt(x)) tails, then an exp-sinh double-exponential rule is applied.
// Handles integrable endpoint singularities at `lower`.
QuadratureResult integrate_semi_infinite(const RealFunction& f, double lower,
                                         const ToleranceSpec& tol = {});

// Integral of f over the finite interval [a, b] by tanh-sinh quadrature.
QuadratureResult integrate_finite(const RealFunction& f, double a, double b,
                                  const ToleranceSpec& tol = {});

// Root of a continuous, strictly monotone g with a sign change over
// [bracket_lo, bracket_hi]; Brent's bracketing secant/bisection hybrid.
// `iterations`, when given, receives the number of refinement steps taken.
double find_root_monotone(const RealFunction& g, double bracket_lo,
                          double bracket_hi, const ToleranceSpec& tol = {},
                          std::size_t* iterations = nullptr);

}  // namespace fsocap::numerics
