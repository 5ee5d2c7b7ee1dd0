#include <doctest.h>

#include <cmath>
#include <limits>

#include "fsocap/channel.hpp"
#include "fsocap/numerics.hpp"

using namespace fsocap;
using numerics::ToleranceSpec;

TEST_CASE("semi-infinite integrals with exponential decay") {
    auto r1 = numerics::integrate_semi_infinite(
        [](double x) { return std::exp(-x); }, 0.0);
    CHECK(r1.value == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(r1.evaluations >= 1);
    CHECK(r1.abs_error_estimate >= 0.0);

    auto r2 = numerics::integrate_semi_infinite(
        [](double x) { return x * std::exp(-x); }, 0.0);
    CHECK(r2.value == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("offset lower limit and algebraic tails") {
    auto r = numerics::integrate_semi_infinite(
        [](double x) { return std::exp(-(x - 3.0)); }, 3.0);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-11));
    // 1/x^3 from 1: exactly 1/2
    auto r3 = numerics::integrate_semi_infinite(
        [](double x) { return 1.0 / (x * x * x); }, 1.0);
    CHECK(r3.value == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("Gamma-Gamma density integrates to one") {
    auto r = numerics::integrate_semi_infinite(
        [](double x) { return channel::pdf_gg(x, 4.7424, 3.0133); }, 0.0);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("finite tanh-sinh handles endpoint singularities") {
    // int_0^1 x^{-1/2} dx = 2
    auto r = numerics::integrate_finite(
        [](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("splitting a semi-infinite integral agrees with the unsplit value") {
    auto f = [](double x) { return channel::pdf_gg(x, 4.8184, 1.1896); };
    auto whole = numerics::integrate_semi_infinite(f, 0.0);
    for (double c : {0.05, 0.7, 2.0, 11.0}) {
        auto head = numerics::integrate_finite(f, 0.0, c);
        auto tail = numerics::integrate_semi_infinite(f, c);
        double split = head.value + tail.value;
        double budget = 2.0 * (whole.abs_error_estimate +
                               head.abs_error_estimate +
                               tail.abs_error_estimate) +
                        1e-12;
        CHECK(std::abs(split - whole.value) <= budget);
    }
}

TEST_CASE("quadrature failure modes are explicit") {
    CHECK_THROWS_AS(numerics::integrate_semi_infinite(
                        [](double x) {
                            return x > 2.0
                                       ? std::numeric_limits<double>::quiet_NaN()
                                       : 1.0 / (1.0 + x * x);
                        },
                        0.0),
                    numerics::QuadratureError);
    ToleranceSpec starved;
    starved.max_evaluations = 10;
    starved.rel_tol = 1e-14;
    starved.abs_tol = 1e-300;
    try {
        numerics::integrate_semi_infinite(
            [](double x) { return std::exp(-x) * std::cos(7.0 * x); }, 0.0,
            starved);
        FAIL("expected QuadratureError");
    } catch (const numerics::QuadratureError& e) {
        CHECK(e.best_estimate.evaluations >= starved.max_evaluations);
    }
}

TEST_CASE("root finder analytic cases") {
    double r1 = numerics::find_root_monotone(
        [](double x) { return std::exp(-x) - 0.5; }, 0.0, 10.0);
    CHECK(r1 == doctest::Approx(std::log(2.0)).epsilon(1e-10));
    double r2 = numerics::find_root_monotone(
        [](double x) { return x * x - 2.0; }, 0.0, 2.0);
    CHECK(r2 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("root finder is idempotent near a solved root") {
    auto g = [](double x) { return std::exp(-x) - 0.5; };
    double root = numerics::find_root_monotone(g, 0.0, 10.0);
    std::size_t iters = 999;
    double again = numerics::find_root_monotone(g, root - 1e-9, root + 1e-9,
                                                {}, &iters);
    CHECK(again == doctest::Approx(root).epsilon(1e-9));
    CHECK(iters <= 2);
}

TEST_CASE("root finder error paths") {
    CHECK_THROWS_AS(numerics::find_root_monotone(
                        [](double x) { return x * x + 1.0; }, -1.0, 1.0),
                    numerics::BracketError);
    CHECK_THROWS_AS(numerics::find_root_monotone(
                        [](double) { return 1.0; }, 1.0, 0.5),
                    numerics::BracketError);
}
