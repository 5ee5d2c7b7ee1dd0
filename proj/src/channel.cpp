#include "fsocap/channel.hpp"

#include <cmath>
#include <limits>

#include "fsocap/numerics.hpp"
#include "fsocap/special.hpp"

namespace fsocap::channel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_gg(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("ChannelModel: shape parameters must be positive");
}

// Argument threshold above which the tail/inverse-moment complements switch
// from the residue series to the shifted Mellin-Barnes line.
constexpr double kComplementSwitch = 30.0;

// Half-integer line left of every pole family, near the integrand saddle.
double complement_abscissa(double x, double min_b) {
    double c = -(std::floor(std::sqrt(x)) + 0.5);
    double cap = std::floor(min_b) - 0.5;  // strictly left of the b-group
    return std::min(c, cap);
}

}  // namespace

ChannelModel ChannelModel::gg_only(double a, double b, double gain_scale) {
    check_gg(a, b);
    if (!(gain_scale > 0.0) || gain_scale > 1.0 + 1e-12)
        throw std::domain_error("ChannelModel: gain_scale must be in (0, 1]");
    ChannelModel m;
    m.kind_ = Kind::GGOnly;
    m.a_ = a;
    m.b_ = b;
    m.xi_ = kInf;
    m.A0_ = 1.0;
    m.gain_ = gain_scale;
    return m;
}

ChannelModel ChannelModel::gg_pointing(double a, double b, double xi, double A0) {
    check_gg(a, b);
    if (!(xi > 0.0)) throw std::domain_error("ChannelModel: xi must be positive");
    if (!(A0 > 0.0) || A0 > 1.0 + 1e-12)
        throw std::domain_error("ChannelModel: A0 must be in (0, 1]");
    ChannelModel m;
    m.kind_ = Kind::GGPointing;
    m.a_ = a;
    m.b_ = b;
    m.xi_ = xi;
    m.A0_ = A0;
    m.gain_ = 1.0;
    return m;
}

double ChannelModel::mean_irradiance() const {
    if (kind_ == Kind::GGOnly) return gain_;  // E[I_a] = 1
    double x2 = xi_ * xi_;
    return A0_ * x2 / (1.0 + x2);
}

namespace {

// log K_nu(z) for z << 1 where K itself overflows double range.
double log_bessel_k_small(double nu, double z) {
    nu = std::abs(nu);
    if (nu < 1e-4)
        return std::log(std::max(-std::log(0.5 * z) - 0.5772156649015329,
                                 1e-300));
    double lead = special::ln_gamma(nu) - std::log(2.0) +
                  nu * std::log(2.0 / z);
    if (std::abs(nu - std::round(nu)) < 1e-6) return lead;
    auto gn = special::ln_gamma_signed(-nu);
    double corr_log =
        gn.log_abs - special::ln_gamma(nu) + 2.0 * nu * std::log(0.5 * z);
    if (corr_log > -1e-12) return lead;  // correction not small; keep leading
    return lead + std::log1p(gn.sign * std::exp(corr_log));
}

}  // namespace

double pdf_gg(double i, double a, double b) {
    check_gg(a, b);
    if (!(i > 0.0)) throw std::domain_error("pdf_gg: requires i > 0");
    double lg = std::log(2.0) + 0.5 * (a + b) * std::log(a * b) -
                special::ln_gamma(a) - special::ln_gamma(b) +
                (0.5 * (a + b) - 1.0) * std::log(i);
    double karg = 2.0 * std::sqrt(a * b * i);
    double logk;
    if (karg < 1e-6) {
        logk = log_bessel_k_small(a - b, karg);
    } else {
        double k = special::bessel_k(a - b, karg);
        if (k == 0.0) return 0.0;
        logk = std::log(k);
    }
    return std::exp(lg + logk);
}

double pdf_pointing(double i, double xi, double A0) {
    if (!(xi > 0.0) || !(A0 > 0.0))
        throw std::domain_error("pdf_pointing: parameters must be positive");
    if (!(i > 0.0) || i > A0) return 0.0;
    double x2 = xi * xi;
    return x2 / std::pow(A0, x2) * std::pow(i, x2 - 1.0);
}

double pdf_composite(double i, const ChannelModel& model) {
    if (!(i > 0.0)) throw std::domain_error("pdf_composite: requires i > 0");
    if (!model.has_pointing())
        return pdf_gg(i / model.gain(), model.a(), model.b()) / model.gain();
    double a = model.a(), b = model.b(), x2 = model.xi2(), A0 = model.A0();
    double z = a * b * i / A0;
    double log_front = std::log(a * b) + std::log(x2) - std::log(A0) -
                       special::ln_gamma(a) - special::ln_gamma(b);
    if (z < 1e-12) {
        // Leading residue of the Meijer-G kernel; the smallest b-parameter
        // exponent dominates and the full series would only add noise.
        auto spec = special::MeijerGSpec::irradiance_pdf(a, b, x2);
        int h = 0;
        for (int j = 1; j < spec.m; ++j)
            if (spec.b[j] < spec.b[h]) h = j;
        double lp = spec.b[h] * std::log(z);
        double sign = 1.0;
        for (int j = 0; j < spec.m; ++j) {
            if (j == h) continue;
            auto g = special::ln_gamma_signed(spec.b[j] - spec.b[h]);
            lp += g.log_abs;
            sign *= g.sign;
        }
        auto g = special::ln_gamma_signed(spec.a[0] - spec.b[h]);
        lp -= g.log_abs;
        sign *= g.sign;
        return sign * std::exp(log_front + lp);
    }
    double g = special::meijer_g(special::MeijerGSpec::irradiance_pdf(a, b, x2), z);
    return std::exp(log_front) * g;
}

namespace {

double tail_gg_quadrature(double mu, double a, double b) {
    auto r = numerics::integrate_semi_infinite(
        [&](double l) { return pdf_gg(l, a, b); }, mu,
        {1e-11, 1e-16, 2'000'000});
    return std::min(std::max(r.value, 0.0), 1.0);
}

double inv_moment_gg_quadrature(double mu, double a, double b) {
    auto r = numerics::integrate_semi_infinite(
        [&](double l) { return pdf_gg(l, a, b) / l; }, mu,
        {1e-11, 1e-16, 2'000'000});
    return std::max(r.value, 0.0);
}

}  // namespace

double tail_probability(double mu, const ChannelModel& model) {
    if (!(mu > 0.0)) throw std::domain_error("tail_probability: requires mu > 0");
    if (!model.has_pointing())
        return tail_gg_quadrature(mu / model.gain(), model.a(), model.b());

    double a = model.a(), b = model.b(), x2 = model.xi2(), A0 = model.A0();
    double z = a * b * mu / A0;
    double lgg = special::ln_gamma(a) + special::ln_gamma(b);
    auto spec = special::MeijerGSpec::irradiance_cdf(a, b, x2);
    double t;
    if (z <= kComplementSwitch) {
        t = 1.0 - x2 * std::exp(-lgg) * special::meijer_g(spec, z);
    } else {
        // G(strip line) = G(shifted line) + residue at s=0; the residue equals
        // Gamma(a)Gamma(b)/xi^2, which is exactly the CDF limit, so the tail
        // is the shifted-line integral alone (sign flipped).
        double c = complement_abscissa(z, std::min({x2, a, b}));
        t = -x2 * std::exp(-lgg) * special::meijer_g_line(spec, z, c);
    }
    return std::min(std::max(t, 0.0), 1.0);
}

double inverse_moment_tail(double mu, const ChannelModel& model) {
    if (!(mu > 0.0))
        throw std::domain_error("inverse_moment_tail: requires mu > 0");
    if (!model.has_pointing()) {
        double g = model.gain();
        return inv_moment_gg_quadrature(mu / g, model.a(), model.b()) / g;
    }
    double a = model.a(), b = model.b(), x2 = model.xi2(), A0 = model.A0();
    double z = a * b * mu / A0;
    double front = a * b * x2 / A0 *
                   std::exp(-special::ln_gamma(a) - special::ln_gamma(b));
    auto spec = special::MeijerGSpec::inverse_moment(a, b, x2);
    if (z <= kComplementSwitch) {
        // E[1/l; l>mu] = front * (G2(inf) - G2(z)); the infinite-argument
        // limit is the s=0 residue of the defining integrand.
        auto ga = special::ln_gamma_signed(a - 1.0);
        auto gb = special::ln_gamma_signed(b - 1.0);
        double g2inf =
            ga.sign * gb.sign * std::exp(ga.log_abs + gb.log_abs) / (x2 - 1.0);
        return front * (g2inf - special::meijer_g(spec, z));
    }
    double c = complement_abscissa(z, std::min({x2 - 1.0, a - 1.0, b - 1.0}));
    return front * (-special::meijer_g_line(spec, z, c));
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

double Rng::uniform() {
    // 53-bit mantissa, strictly inside (0, 1).
    while (true) {
        double u = (eng_() >> 11) * 0x1.0p-53;
        if (u > 0.0 && u < 1.0) return u;
    }
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    while (true) {
        double u = 2.0 * uniform() - 1.0;
        double v = 2.0 * uniform() - 1.0;
        double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            double f = std::sqrt(-2.0 * std::log(s) / s);
            spare_ = v * f;
            have_spare_ = true;
            return u * f;
        }
    }
}

double Rng::gamma(double shape) {
    if (!(shape > 0.0)) throw std::domain_error("Rng::gamma: shape must be > 0");
    if (shape < 1.0) {
        // Boost: gamma(shape) = gamma(shape + 1) * U^(1/shape)
        double g = gamma(shape + 1.0);
        return g * std::pow(uniform(), 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    while (true) {
        double x = normal();
        double t = 1.0 + c * x;
        if (t <= 0.0) continue;
        double v = t * t * t;
        double u = uniform();
        if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
    }
}

std::vector<double> sample_irradiance(const ChannelModel& model,
                                      std::uint64_t seed, std::size_t count) {
    if (count < 1)
        throw std::domain_error("sample_irradiance: count must be >= 1");
    Rng rng(seed);
    std::vector<double> out;
    out.reserve(count);
    double a = model.a(), b = model.b();
    for (std::size_t k = 0; k < count; ++k) {
        double ia = rng.gamma(a) / a * (rng.gamma(b) / b);
        if (model.has_pointing()) {
            // Inverse-transform draw of the pointing loss: A0 * U^(1/xi^2).
            double ip = model.A0() * std::pow(rng.uniform(), 1.0 / model.xi2());
            out.push_back(ia * ip);
        } else {
            out.push_back(model.gain() * ia);
        }
    }
    return out;
}

}  // namespace fsocap::channel
