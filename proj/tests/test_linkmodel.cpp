#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "fsocap/linkmodel.hpp"
#include "fsocap/scenario.hpp"
#include "fsocap/special.hpp"

using namespace fsocap;

namespace {
const link::LinkGeometry kGeom{};  // stock 1550 nm / 1.8 km link
}

TEST_CASE("Gamma-Gamma parameters for the published turbulence rows") {
    auto [aw, bw] = link::gg_params_from_rytov(0.8);
    CHECK(std::abs(aw - 4.7424) < 1e-3);
    CHECK(std::abs(bw - 3.0133) < 1e-3);
    auto [am, bm] = link::gg_params_from_rytov(2.0);
    CHECK(std::abs(am - 3.9929) < 1e-3);
    CHECK(std::abs(bm - 1.7018) < 1e-3);
    auto [as, bs] = link::gg_params_from_rytov(6.0);
    CHECK(std::abs(as - 4.8184) < 1e-3);
    CHECK(std::abs(bs - 1.1896) < 1e-3);
    CHECK_THROWS_AS(link::gg_params_from_rytov(0.0), std::domain_error);
}

TEST_CASE("shape parameters vary smoothly; b decreasing over the rows") {
    double prev_b = std::numeric_limits<double>::infinity();
    for (double s = 0.8; s <= 6.0; s += 0.2) {
        auto [a, b] = link::gg_params_from_rytov(s);
        CHECK(a > 0.0);
        CHECK(b > 0.0);
        CHECK(b < prev_b);
        prev_b = b;
    }
    // continuity probe across a wide range (geometric grid; a ~ 1/s near 0)
    auto last = link::gg_params_from_rytov(0.05);
    for (double s = 0.055; s <= 50.0; s *= 1.1) {
        auto [a, b] = link::gg_params_from_rytov(s);
        CHECK(std::abs(a / last.first - 1.0) < 0.25);
        CHECK(std::abs(b / last.second - 1.0) < 0.25);
        last = {a, b};
    }
}

TEST_CASE("Rytov variance is linear in cn2 and inverts exactly") {
    double c = 1e-14;
    CHECK(link::rytov_from_cn2(2.0 * c, kGeom) ==
          doctest::Approx(2.0 * link::rytov_from_cn2(c, kGeom)).epsilon(1e-14));
    for (double s : {0.8, 2.0, 6.0}) {
        double round = link::rytov_from_cn2(link::cn2_from_rytov(s, kGeom), kGeom);
        CHECK(round == doctest::Approx(s).epsilon(1e-12));
    }
    CHECK(link::cn2_from_rytov(0.8, kGeom) > 0.0);
    CHECK(link::cn2_from_rytov(0.8, kGeom) < 1e-13);  // near-ground magnitude
    CHECK(link::cn2_from_rytov(0.8, kGeom) > 1e-15);
    CHECK(link::cn2_from_rytov(2.0, kGeom) > link::cn2_from_rytov(0.8, kGeom));
    CHECK_THROWS_AS(link::cn2_from_rytov(-1.0, kGeom), std::domain_error);
}

TEST_CASE("pointing chain reproduces the published jitter parameters") {
    auto weak = link::derive_pointing_state(kGeom, link::cn2_from_rytov(0.8, kGeom));
    CHECK(std::abs(weak.xi - 0.4790) < 1e-3);
    CHECK(std::abs(weak.A0 - 0.0490) < 1e-3);
    auto mod = link::derive_pointing_state(kGeom, link::cn2_from_rytov(2.0, kGeom));
    CHECK(std::abs(mod.xi - 0.6302) < 1e-3);
    CHECK(std::abs(mod.A0 - 0.0283) < 1e-3);
    // strong row: the published jitter parameters correspond to the round
    // structure parameter 1e-13 (Rytov 5.85 quoted as 6)
    auto strong = link::derive_pointing_state(kGeom, 1e-13);
    CHECK(std::abs(strong.xi - 1.0269) < 1e-3);
    CHECK(std::abs(strong.A0 - 0.0107) < 1e-3);
}

TEST_CASE("pointing state internal identities") {
    for (double cn2 : {1e-14, 3.4e-14, 1e-13}) {
        auto p = link::derive_pointing_state(kGeom, cn2);
        double erf_v = special::erf(p.v);
        CHECK(p.A0 == doctest::Approx(erf_v * erf_v).epsilon(1e-12));
        double rhs = p.w_L * p.w_L * std::sqrt(std::numbers::pi) * erf_v /
                     (2.0 * p.v * std::exp(-p.v * p.v));
        CHECK(p.w_Leq * p.w_Leq == doctest::Approx(rhs).epsilon(1e-12));
        CHECK(p.xi * kGeom.jitter_sigma ==
              doctest::Approx(p.w_Leq / 2.0).epsilon(1e-14));
        CHECK(p.w_Leq >= p.w_L);
    }
}

TEST_CASE("collected power shrinks as turbulence grows") {
    double prev = 1.0;
    for (double cn2 = 5e-15; cn2 <= 4e-13; cn2 *= 1.6) {
        auto p = link::derive_pointing_state(kGeom, cn2);
        CHECK(p.A0 < prev);
        prev = p.A0;
    }
}

TEST_CASE("zero jitter yields the infinite-xi sentinel") {
    link::LinkGeometry g = kGeom;
    g.jitter_sigma = 0.0;
    auto p = link::derive_pointing_state(g, 1e-13);
    CHECK(std::isinf(p.xi));
    CHECK(std::isfinite(p.w_L));
    CHECK(std::isfinite(p.w_Leq));
    CHECK(std::isfinite(p.A0));
    g.jitter_sigma = -0.1;
    CHECK_THROWS_AS(link::derive_pointing_state(g, 1e-13), std::domain_error);
}

TEST_CASE("beam-to-aperture validity guard") {
    auto ok = link::derive_pointing_state(kGeom, 1e-13);
    CHECK(ok.beam_ratio_ok);  // w_L/r_A ~ 13.7 for the stock link
    link::LinkGeometry wide = kGeom;
    wide.aperture_radius = 0.06;
    auto marginal = link::derive_pointing_state(wide, 1e-13);
    CHECK_FALSE(marginal.beam_ratio_ok);
}

TEST_CASE("turbulence state recomputes consistently") {
    auto t = link::turbulence_from_rytov(6.0, kGeom);
    auto [a, b] = link::gg_params_from_rytov(t.rytov_variance);
    CHECK(t.a == doctest::Approx(a).epsilon(1e-12));
    CHECK(t.b == doctest::Approx(b).epsilon(1e-12));
    CHECK(link::rytov_from_cn2(t.cn2, kGeom) ==
          doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("built-in scenarios carry the published values") {
    auto rows = scenario::default_scenarios();
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].name == "weak");
    CHECK(rows[2].name == "strong");
    CHECK(std::abs(rows[2].pointing.xi - 1.0269) < 1e-3);
    CHECK(std::abs(rows[2].pointing.A0 - 0.0107) < 1e-3);
    CHECK(std::abs(rows[2].turbulence.a - 4.8184) < 1e-3);
    auto model = rows[2].gg_pointing();
    CHECK(model.mean_irradiance() ==
          doctest::Approx(rows[2].pointing.A0 * rows[2].pointing.xi2() /
                          (1.0 + rows[2].pointing.xi2()))
              .epsilon(1e-14));
}
