#include <doctest.h>

#include "isoweight/rng.hpp"
#include "isoweight/shapes.hpp"
#include "isoweight/special.hpp"

#include <cmath>
#include <stdexcept>
#include <numbers>

using namespace isoweight;

namespace {

constexpr double PI = std::numbers::pi;

// closed forms for the ball through the origin (center distance = radius):
//   P = 2 (2r)^beta r B((beta+1)/2, 1/2),
//   V = (2r)^(alpha+2)/(alpha+2) B((alpha+3)/2, 1/2).
double tangent_perimeter(double r, double beta) {
    return 2.0 * std::pow(2.0 * r, beta) * r *
           special::beta_fn(0.5 * (beta + 1.0), 0.5);
}
double tangent_volume(double r, double alpha) {
    return std::pow(2.0 * r, alpha + 2.0) / (alpha + 2.0) *
           special::beta_fn(0.5 * (alpha + 3.0), 0.5);
}

} // namespace

TEST_CASE("centered ball closed forms") {
    auto m = measure(CenteredBall{1.0}, {0.0, 0.0});
    CHECK(m.volume == doctest::Approx(PI).epsilon(1e-15));
    CHECK(m.perimeter == doctest::Approx(2.0 * PI).epsilon(1e-15));
    CHECK(iso_ratio(CenteredBall{2.7}, {0.0, 0.0}) ==
          doctest::Approx(4.0 * PI).epsilon(1e-13));
    CHECK(ball_ratio({0.0, 0.0}) == doctest::Approx(4.0 * PI).epsilon(1e-14));
}

TEST_CASE("off-centre flux quadrature matches closed forms at d = 0") {
    auto m = measure(OffCenterBall{0.0, 2.0}, {0.1, 0.5});
    auto c = measure(CenteredBall{2.0}, {0.1, 0.5});
    CHECK(m.volume == doctest::Approx(c.volume).epsilon(1e-9));
    CHECK(m.perimeter == doctest::Approx(c.perimeter).epsilon(1e-9));

    rng::Xoshiro256ss gen(99);
    for (int i = 0; i < 10; ++i) {
        const double r = gen.uniform(0.3, 3.0);
        const Weights w{gen.uniform(-1.0, 2.0), gen.uniform(-0.6, 2.0)};
        auto got  = measure(OffCenterBall{0.0, r}, w);
        auto want = measure(CenteredBall{r}, w);
        CHECK(got.volume == doctest::Approx(want.volume).epsilon(1e-9));
        CHECK(got.perimeter == doctest::Approx(want.perimeter).epsilon(1e-9));
    }
}

TEST_CASE("tangent ball measures against beta-function closed forms") {
    for (auto [alpha, beta] : {std::pair{0.0, 0.0}, {1.0, 1.0}, {0.1, 0.5},
                               {-1.0, -0.5}}) {
        const Weights w{alpha, beta};
        for (double r : {0.8, 1.3}) {
            auto m = measure(OffCenterBall{r, r}, w);
            CHECK(m.perimeter ==
                  doctest::Approx(tangent_perimeter(r, beta)).epsilon(1e-8));
            CHECK(m.volume ==
                  doctest::Approx(tangent_volume(r, alpha)).epsilon(1e-8));
        }
    }
}

TEST_CASE("competitor measures and ratio") {
    const Weights w{0.1, 0.4};  // gamma = 0.7, x = 1
    auto m = measure(CompetitorE{1.0}, w);
    CHECK(m.perimeter == doctest::Approx(20.0 / 7.0).epsilon(1e-9));
    CHECK(m.volume == doctest::Approx(400.0 / 441.0).epsilon(1e-9));

    CHECK(iso_ratio(CompetitorE{1.0}, w) > ball_ratio(w));
    CHECK(iso_ratio(CompetitorE{1.0}, w) ==
          doctest::Approx(iso_ratio(CompetitorE{3.7}, w)).epsilon(1e-10));

    CHECK_THROWS_AS((void)measure(CompetitorE{1.0}, {0.0, 0.0}),
                    std::invalid_argument);  // gamma = 1 out of range
}

TEST_CASE("competitor angular coordinate") {
    const Weights w{-0.5, 0.0};  // gamma = 1/2
    CHECK(competitor_theta(0.0, 1.0, w) == doctest::Approx(PI).epsilon(1e-15));
    CHECK(competitor_theta(1.0, 1.0, w) == 0.0);

    // branch continuity where (tau/b)^(2 gamma) = 1/2
    const Weights w2{0.1, 0.4};  // gamma = 0.7
    const double tau_star = std::pow(0.5, 1.0 / 1.4);
    const double lo = competitor_theta(tau_star * (1.0 - 1e-9), 1.0, w2);
    const double hi = competitor_theta(tau_star * (1.0 + 1e-9), 1.0, w2);
    CHECK(std::abs(lo - hi) <= 1e-7);

    // agreement with direct quadrature of the defining integral
    for (double tau : {0.2, 0.5, 0.9}) {
        auto oracle = quad::integrate_sqrt_singular(
            [&](double t) {
                const double q = -std::expm1(1.4 * std::log(t));
                return std::pow(t, -0.3) * std::sqrt((1.0 - t) / q);
            },
            tau, 1.0, false, true);
        CHECK(competitor_theta(tau, 1.0, w2) ==
              doctest::Approx(oracle.value).epsilon(1e-9));
    }
    CHECK_THROWS_AS((void)competitor_theta(2.0, 1.0, w2), std::invalid_argument);
}

TEST_CASE("normalised competitor excess") {
    const Weights w{0.1, 0.4};
    CHECK(desired_gap(w) ==
          doctest::Approx(45.0 / 7.0 - 2.0 * PI).epsilon(1e-10));
    CHECK(desired_gap(w) > 0.0);
    // chain bound through W: the excess dominates W(x) - 2 pi >= 0
    const double x = 1.0;
    CHECK(desired_gap(w) >= special::cap_W(x) - 2.0 * PI - 1e-12);
    CHECK(special::cap_W(x) - 2.0 * PI >= 0.0);

    CHECK_THROWS_AS((void)desired_gap({0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS((void)desired_gap({-1.0, -0.5}), std::invalid_argument);
}

TEST_CASE("competitor beats the ball across the admissible strip") {
    // gamma grid x P \ P- samples: ratio of the competitor always exceeds
    // the ball ratio
    for (double gamma : {0.5, 0.6, 0.7, 0.8, 0.9, 0.95}) {
        for (double x : {0.75, 1.0, 2.0}) {
            // realise (gamma, x): beta + 1 = 2 x gamma, alpha = gamma + beta - 1
            const double beta  = 2.0 * x * gamma - 1.0;
            const double alpha = gamma + beta - 1.0;
            const Weights w{alpha, beta};
            auto f = classify(w);
            if (!f.in_P || f.in_P_minus) continue;
            CHECK(iso_ratio(CompetitorE{1.0}, w) > ball_ratio(w));
        }
    }
}

TEST_CASE("morgan map") {
    auto p = morgan_map({4.0, 0.0}, -0.5);
    CHECK(p.x == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(p.y == 0.0);
    // centred circle of radius r maps to radius r^(beta+1)/(beta+1)
    const double beta = -0.3, r = 1.7;
    auto q = morgan_map({r * std::cos(1.0), r * std::sin(1.0)}, beta);
    CHECK(std::hypot(q.x, q.y) ==
          doctest::Approx(std::pow(r, beta + 1.0) / (beta + 1.0))
              .epsilon(1e-13));
    CHECK_THROWS_AS((void)morgan_map({1.0, 0.0}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS((void)morgan_map({0.0, 0.0}, -0.5), std::invalid_argument);
}

TEST_CASE("morgan pushforward identities") {
    // centred balls: equality in both volume and perimeter
    for (double beta : {-0.5, -0.25}) {
        auto chk = pushforward_check(Shape{CenteredBall{1.4}}, beta);
        CHECK(std::abs(chk.vol_residual) <= 1e-8);
        CHECK(std::abs(chk.per_slack) <= 1e-8);
    }
    // off-centre balls: volume identity holds, perimeter has nonnegative slack
    for (double beta : {-0.5, -0.35}) {
        auto chk = pushforward_check(Shape{OffCenterBall{0.6, 1.0}}, beta);
        CHECK(std::abs(chk.vol_residual) <= 1e-8);
        CHECK(chk.per_slack >= -1e-8);
        CHECK(chk.per_slack > 1e-4);  // strictly non-radial boundary
    }
    FourierStar star;
    star.r0  = 1.0;
    star.eps = {0.1, -0.05, 0.02, 0.0};
    auto chk = pushforward_check(Shape{star}, -0.5);
    CHECK(std::abs(chk.vol_residual) <= 1e-8);
    CHECK(chk.per_slack >= -1e-8);
}

TEST_CASE("annuli unions against the equal-volume ball") {
    CHECK(annuli_vs_ball({1.7}, {0.1, 0.5}) == doctest::Approx(0.0));
    CHECK(annuli_vs_ball({2.0, 1.0, 0.5, 0.1}, {0.0, 0.0}) > 0.0);
    CHECK(annuli_vs_ball({2.0, 1.0, 0.5, 0.1}, {0.1, 0.5}) > 0.0);

    // direct identity: the gap equals P(union) - J(V(union))
    const Weights w{0.1, 0.5};
    const std::vector<double> radii{2.0, 1.0, 0.5, 0.1};
    auto m = measure(CenteredAnnuliUnion{radii}, w);
    CHECK(annuli_vs_ball(radii, w) ==
          doctest::Approx(m.perimeter -
                          ball_perimeter_of_volume(m.volume, w))
              .epsilon(1e-10));

    CHECK_THROWS_AS((void)annuli_vs_ball({1.0, 2.0}, w), std::invalid_argument);
}

TEST_CASE("iso ratio is scale invariant") {
    const Weights w{0.1, 0.5};
    for (double s : {0.5, 2.0, 7.0}) {
        CHECK(iso_ratio(CenteredBall{s}, w) ==
              doctest::Approx(iso_ratio(CenteredBall{1.0}, w)).epsilon(1e-10));
        CHECK(iso_ratio(OffCenterBall{0.3 * s, s}, w) ==
              doctest::Approx(iso_ratio(OffCenterBall{0.3, 1.0}, w))
                  .epsilon(1e-10));
        std::vector<double> radii{2.0 * s, 1.0 * s, 0.5 * s, 0.1 * s};
        CHECK(iso_ratio(CenteredAnnuliUnion{radii}, w) ==
              doctest::Approx(iso_ratio(
                                  CenteredAnnuliUnion{{2.0, 1.0, 0.5, 0.1}}, w))
                  .epsilon(1e-10));
        FourierStar star;
        star.r0  = s;
        star.eps = {0.1, -0.08, 0.03, 0.05};
        FourierStar unit = star;
        unit.r0          = 1.0;
        CHECK(iso_ratio(Shape{star}, w) ==
              doctest::Approx(iso_ratio(Shape{unit}, w)).epsilon(1e-10));
    }
}

TEST_CASE("tangent balls beat centred balls outside P") {
    const Weights w{1.0, 1.0};
    const double tangent = iso_ratio(OffCenterBall{1.0, 1.0}, w);
    const double ball    = iso_ratio(CenteredBall{1.0}, w);
    CHECK(tangent < ball);
    // at (0,0) translation invariance makes every ball optimal
    CHECK(iso_ratio(OffCenterBall{0.5, 1.0}, {0.0, 0.0}) ==
          doctest::Approx(4.0 * PI).epsilon(1e-9));
    // inside P away from the origin, off-centre balls lose strictly
    CHECK(iso_ratio(OffCenterBall{0.5, 1.0}, {0.1, 0.5}) >
          iso_ratio(CenteredBall{1.0}, {0.1, 0.5}));
}

TEST_CASE("polar graphs: a closing cone and its deficit") {
    // theta(t) = pi (1 - t/b): boundary meets the axis at t = b
    const double b = 2.0;
    PolarGraph cone;
    cone.a           = 0.0;
    cone.b           = b;
    cone.theta       = [b](double t) { return PI * (1.0 - t / b); };
    cone.theta_prime = [b](double) { return -PI / b; };

    // volume closed form at (0,0): 2 pi int (1 - t/b) t dt = pi b^2 / 3
    auto m = measure(Shape{cone}, {0.0, 0.0});
    CHECK(m.volume == doctest::Approx(PI * b * b / 3.0).epsilon(1e-10));
    CHECK(deficit(Shape{cone}, {0.0, 0.0}) > 0.0);
    CHECK(deficit(Shape{cone}, {0.1, 0.5}) > 0.0);
}

TEST_CASE("fourier stars satisfy the main inequality on P") {
    FourierStar star;
    star.r0  = 1.2;
    star.eps = {0.15, -0.1, 0.05, -0.02};
    for (auto w : {Weights{0.0, 0.0}, Weights{0.1, 0.5}, Weights{-1.0, -0.5}}) {
        CHECK(deficit(Shape{star}, w) >= -1e-9);
    }
    // the round star is the ball
    FourierStar round;
    round.r0 = 1.2;
    auto m   = measure(Shape{round}, {0.1, 0.5});
    auto c   = measure(CenteredBall{1.2}, {0.1, 0.5});
    CHECK(m.volume == doctest::Approx(c.volume).epsilon(1e-10));
    CHECK(m.perimeter == doctest::Approx(c.perimeter).epsilon(1e-10));
}
