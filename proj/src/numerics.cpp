#include "fsocap/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace fsocap::numerics {

namespace {

constexpr double kPiHalf = std::numbers::pi / 2.0;

void validate(const ToleranceSpec& tol) {
    if (!(tol.rel_tol > 0.0) || !(tol.abs_tol > 0.0))
        throw std::invalid_argument("ToleranceSpec: tolerances must be positive");
    if (tol.max_evaluations == 0)
        throw std::invalid_argument("ToleranceSpec: max_evaluations must be >= 1");
}

// Shared trapezoid-with-level-refinement driver over the transformed axis.
// `node` maps u to (x, weight); integrand contributions are weight * f(x).
template <typename NodeFn>
QuadratureResult de_quadrature(const RealFunction& f, const NodeFn& node,
                               double u_max, const ToleranceSpec& tol) {
    validate(tol);
    QuadratureResult out;
    auto eval = [&](double u) -> double {
        auto [x, w] = node(u);
        if (w == 0.0) return 0.0;
        double fx = f(x);
        ++out.evaluations;
        double contrib = w * fx;
        if (!std::isfinite(contrib)) {
            out.value = std::numeric_limits<double>::quiet_NaN();
            throw QuadratureError("quadrature: integrand returned non-finite value",
                                  out);
        }
        return contrib;
    };

    double h = 0.5;
    double sum = eval(0.0);
    for (double u = h; u <= u_max; u += h) sum += eval(u) + eval(-u);
    double prev = sum * h;
    out.value = prev;
    out.abs_error_estimate = std::abs(prev);

    for (int level = 1; level <= 10; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double u = h; u <= u_max; u += 2.0 * h) add += eval(u) + eval(-u);
        double cur = prev * 0.5 + add * h;
        double err = std::abs(cur - prev);
        out.value = cur;
        out.abs_error_estimate = err;
        prev = cur;
        if (level >= 2 &&
            err <= std::max(tol.rel_tol * std::abs(cur), tol.abs_tol))
            return out;
        if (out.evaluations > tol.max_evaluations)
            throw QuadratureError("quadrature: evaluation budget exhausted", out);
    }
    throw QuadratureError("quadrature: failed to converge", out);
}

}  // namespace

QuadratureResult integrate_semi_infinite(const RealFunction& f, double lower,
                                         const ToleranceSpec& tol) {
    if (!(lower >= 0.0) || !std::isfinite(lower))
        throw std::invalid_argument("integrate_semi_infinite: lower must be finite and >= 0");
    // x = lower + t^2, then t = exp((pi/2) sinh u).
    auto node = [lower](double u) -> std::pair<double, double> {
        double s = kPiHalf * std::sinh(u);
        if (s > 690.0) return {lower, 0.0};  // weight underflows anyway
        double t = std::exp(s);
        double x = lower + t * t;
        if (!(x > lower)) return {lower, 0.0};  // t^2 underflow; skip node
        double w = 2.0 * t * t * kPiHalf * std::cosh(u);
        if (!std::isfinite(w)) return {lower, 0.0};
        return {x, w};
    };
    return de_quadrature(f, node, 6.0, tol);
}

QuadratureResult integrate_finite(const RealFunction& f, double a, double b,
                                  const ToleranceSpec& tol) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(b > a))
        throw std::invalid_argument("integrate_finite: requires finite a < b");
    double mid = 0.5 * (a + b), r = 0.5 * (b - a);
    auto node = [=](double u) -> std::pair<double, double> {
        double s = kPiHalf * std::sinh(u);
        // One-sided distances avoid cancellation at the endpoints:
        // 1 -+ tanh(s) = 2 e^{-2|s|} / (1 + e^{-2|s|}).
        double em = std::exp(-2.0 * std::abs(s));
        double dist = 2.0 * r * em / (1.0 + em);
        double x = s >= 0.0 ? b - dist : a + dist;
        if (x <= a || x >= b) return {mid, 0.0};  // clipped by rounding
        double sech = 2.0 * std::exp(-std::abs(s)) / (1.0 + em);
        double w = r * kPiHalf * std::cosh(u) * sech * sech;
        if (!std::isfinite(w)) return {mid, 0.0};
        return {x, w};
    };
    return de_quadrature(f, node, 6.0, tol);
}

double find_root_monotone(const RealFunction& g, double bracket_lo,
                          double bracket_hi, const ToleranceSpec& tol,
                          std::size_t* iterations) {
    validate(tol);
    if (iterations) *iterations = 0;
    if (!(bracket_hi > bracket_lo))
        throw BracketError("find_root_monotone: invalid bracket");
    double a = bracket_lo, b = bracket_hi;
    double fa = g(a), fb = g(b);
    if (!std::isfinite(fa) || !std::isfinite(fb))
        throw BracketError("find_root_monotone: non-finite endpoint value");
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw BracketError("find_root_monotone: no sign change over bracket");

    // Brent's method (inverse quadratic / secant with bisection safeguard).
    double c = a, fc = fa;
    double d = b - a, e = d;
    constexpr int kMaxIter = 200;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        if (iterations) *iterations = iter;
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        double tol1 =
            2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
            0.5 * tol.rel_tol * std::max(std::abs(b), 1e-300);
        double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0 || std::abs(fb) <= tol.abs_tol)
            return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double s = fb / fa, p, q2;
            if (a == c) {
                p = 2.0 * xm * s;
                q2 = 1.0 - s;
            } else {
                double q = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q2 = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q2 = -q2;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q2 - std::abs(tol1 * q2),
                                   std::abs(e * q2))) {
                e = d;
                d = p / q2;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = g(b);
        if (!std::isfinite(fb))
            throw RootConvergenceError("find_root_monotone: non-finite value");
    }
    throw RootConvergenceError("find_root_monotone: iteration limit exceeded");
}

}  // namespace fsocap::numerics
