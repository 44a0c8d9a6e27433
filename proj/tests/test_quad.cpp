#include <doctest.h>

#include "isoweight/quad.hpp"
#include "isoweight/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <numbers>

using namespace isoweight;
namespace q = isoweight::quad;

namespace {
constexpr double PI = std::numbers::pi;
}

TEST_CASE("integrate on elementary closed forms") {
    CHECK(q::integrate([](double t) { return t; }, 0, 1).value ==
          doctest::Approx(0.5).epsilon(1e-13));
    CHECK(q::integrate([](double t) { return 1.0 / t; }, 1, 2).value ==
          doctest::Approx(std::log(2.0)).epsilon(1e-13));
    // integrable endpoint singularity, no declared structure
    CHECK(q::integrate([](double t) { return 1.0 / std::sqrt(t); }, 0, 1).value ==
          doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("integrate is near-exact on polynomials") {
    rng::Xoshiro256ss gen(17);
    double coef[11];
    for (double& c : coef) c = gen.uniform(-2.0, 2.0);
    auto poly = [&coef](double t) {
        double acc = 0.0;
        for (int k = 10; k >= 0; --k) acc = acc * t + coef[k];
        return acc;
    };
    // antiderivative evaluated by Horner as the oracle
    auto antider = [&coef](double t) {
        double acc = 0.0;
        for (int k = 10; k >= 0; --k) acc = acc * t + coef[k] / (k + 1.0);
        return acc * t;
    };
    const double exact = antider(1.7) - antider(-0.3);
    CHECK(q::integrate(poly, -0.3, 1.7).value ==
          doctest::Approx(exact).epsilon(1e-13));
}

TEST_CASE("sqrt-singular endpoints") {
    // int_0^1 (1-t^2)^(-1/2) dt = pi/2; smooth part 1/sqrt(1+t)
    auto arcsine = q::integrate_sqrt_singular(
        [](double t) { return 1.0 / std::sqrt(1.0 + t); }, 0, 1, false, true);
    CHECK(arcsine.value == doctest::Approx(PI / 2).epsilon(1e-12));

    // int_1^2 ((t-1)(2-t))^(-1/2) dt = pi
    auto euler = q::integrate_sqrt_singular([](double) { return 1.0; }, 1, 2,
                                            true, true);
    CHECK(euler.value == doctest::Approx(PI).epsilon(1e-12));

    // int_0^1 t^(-1/2) dt = 2 via the declared left singularity
    auto left = q::integrate_sqrt_singular([](double) { return 1.0; }, 0, 1,
                                           true, false);
    CHECK(left.value == doctest::Approx(2.0).epsilon(1e-13));

    // competitor angle kernel: int_0^1 t^(g-1) (1-t^(2g))^(-1/2) dt = pi/(2g)
    const double g = 0.6;
    auto competitor = q::integrate_sqrt_singular(
        [g](double t) {
            const double q1 = -std::expm1(2.0 * g * std::log(t));
            return std::pow(t, g - 1.0) * std::sqrt((1.0 - t) / q1);
        },
        0, 1, false, true);
    CHECK(competitor.value == doctest::Approx(PI / (2.0 * g)).epsilon(1e-9));

    // no declared singularity delegates to the plain rule
    auto smooth_direct = q::integrate([](double t) { return std::cos(t); }, 0, 1);
    auto smooth_via    = q::integrate_sqrt_singular(
        [](double t) { return std::cos(t); }, 0, 1, false, false);
    CHECK(smooth_via.value ==
          doctest::Approx(smooth_direct.value).epsilon(1e-13));
}

TEST_CASE("integrate validates inputs") {
    q::QuadOptions bad;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS((void)q::integrate([](double t) { return t; }, 0, 1, bad),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)q::integrate([](double t) { return t; }, 1, 0),
                    std::invalid_argument);
}

TEST_CASE("integrate reports failure on exhausted budget") {
    q::QuadOptions opt;
    opt.rel_tol   = 1e-14;
    opt.abs_tol   = 1e-300;
    opt.max_evals = 200;
    CHECK_THROWS_AS(
        (void)q::integrate([](double t) { return std::sin(1.0 / t); }, 1e-8, 1,
                           opt),
        q::QuadFailure);
}

TEST_CASE("bracket_root basics") {
    const double r =
        q::bracket_root([](double t) { return t * t - 2.0; }, 1, 2, 1e-14);
    CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));

    // root of u0 = (tau - ab/tau)/(b-a) on (1,2) is the geometric mean
    const double r2 = q::bracket_root(
        [](double t) { return (t - 2.0 / t) / 1.0; }, 1, 2, 1e-14);
    CHECK(r2 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));

    CHECK_THROWS_AS(
        (void)q::bracket_root([](double t) { return t + 3.0; }, 1, 2, 1e-12),
        std::invalid_argument);
}

TEST_CASE("bracket_root stays inside the bracket") {
    // left preimage of w0 = t on [a, argmax]: the smaller root of
    // t tau^2 - 2 A tau + G^2 t = 0 is the oracle
    const double a = 1.0, b = 2.0, t = 1.02;
    const double A = 0.5 * (a + b), G = std::sqrt(a * b);
    const double oracle = (A - std::sqrt(A * A - G * G * t * t)) / t;

    double lo = a, hi = G;  // argmax of w0 is at G
    bool stayed_inside = true;
    auto w0_minus_t = [&](double tau) {
        if (!(tau >= lo && tau <= hi)) stayed_inside = false;
        return 2.0 * A * tau / (G * G + tau * tau) - t;
    };
    const double v1 = q::bracket_root(w0_minus_t, lo, hi, 1e-14);
    CHECK(stayed_inside);
    CHECK(v1 == doctest::Approx(oracle).epsilon(1e-12));
}
