#include <doctest.h>

#include "isoweight/closedform.hpp"
#include "isoweight/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace isoweight;

namespace {

// sample points of P for property sweeps, via the (zeta, s) parametrisation
std::vector<Weights> sample_P(int n, std::uint64_t seed) {
    rng::Xoshiro256ss gen(seed);
    std::vector<Weights> out;
    while ((int)out.size() < n) {
        const double zeta = gen.uniform(1.0, 6.0);
        const double s    = gen.uniform(0.05, 1.0);
        const double beta = -1.0 + s * std::sqrt(zeta);
        const double alpha = (1.0 + 1.0 / zeta) * beta + 1.0 / zeta - 1.0;
        out.push_back({alpha, beta});
    }
    return out;
}

// 100 Chebyshev-spaced interior points of [a, b]
std::vector<double> cheb_points(double a, double b) {
    std::vector<double> pts;
    for (int k = 0; k < 100; ++k) {
        const double c = std::cos((2.0 * k + 1.0) * M_PI / 200.0);
        pts.push_back(0.5 * (a + b) + 0.5 * (b - a) * c);
    }
    return pts;
}

} // namespace

TEST_CASE("multiplier m closed values and limits") {
    CHECK(multiplier_m({0, 0}, 1, 2) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    // coincident-endpoint limit via Cauchy mean value
    CHECK(multiplier_m({0, 0}, 1, 1 + 1e-13) == doctest::Approx(1.0).epsilon(1e-9));
    const double m = multiplier_m({0.1, 0.5}, 1, 2);
    CHECK(m > 0.0);
    CHECK(m < 1.5);  // a^gamma m < beta + 1 at a = 1
    CHECK_THROWS_AS((void)multiplier_m({0, 0}, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)multiplier_m({0, 0}, 2, 1), std::invalid_argument);
}

TEST_CASE("multiplier mhat closed values") {
    CHECK(multiplier_mhat({0, 0}, 1, 2) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(multiplier_mhat({0, 0}, 1, 3) == doctest::Approx(1.0).epsilon(1e-14));
    for (const Weights& w : sample_P(50, 23)) {
        const double a = 0.5, b = 2.7;
        CHECK(multiplier_mhat(w, a, b) > multiplier_m(w, a, b));
    }
}

TEST_CASE("m homogeneity and monotonicity") {
    for (const Weights& w : sample_P(30, 5)) {
        const double gamma = w.alpha - w.beta + 1.0;
        for (double a : {0.4, 1.0, 2.5}) {
            for (double t : {1.3, 2.0, 7.0}) {
                const double lhs = multiplier_m(w, a, a * t);
                const double rhs = std::pow(a, -gamma) * multiplier_m(w, 1.0, t);
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
            }
        }
        // (i), (ii): a^gamma m < beta+1 < b^gamma m; (iii), (iv): monotone in b
        double prev_m = 0, prev_bm = 0;
        bool first = true;
        for (double b = 1.5; b <= 50.0; b *= 1.5) {
            const double m  = multiplier_m(w, 1.0, b);
            const double bm = std::pow(b, gamma) * m;
            CHECK(m < w.beta + 1.0);
            CHECK(bm > w.beta + 1.0);
            if (!first) {
                CHECK(m < prev_m);
                CHECK(bm > prev_bm);
            }
            prev_m  = m;
            prev_bm = bm;
            first   = false;
        }
    }
}

TEST_CASE("solve_linear boundary data and ODE residual") {
    const Interval iv{1.0, 2.0};
    for (const Weights& w : sample_P(20, 41)) {
        for (int e1 : {-1, 1}) {
            for (int e2 : {-1, 1}) {
                auto sol = solve_linear(w, iv, {e1, e2});
                CHECK(sol.value(iv.a) == doctest::Approx((double)e1).epsilon(1e-10));
                CHECK(sol.value(iv.b) == doctest::Approx((double)e2).epsilon(1e-10));
                const double scale = std::max(1.0, std::abs(sol.lambda));
                for (double tau : cheb_points(iv.a, iv.b)) {
                    const double resid =
                        sol.derivative(tau) +
                        (w.beta + 1.0) * sol.value(tau) / tau +
                        sol.lambda * std::pow(tau, w.alpha - w.beta);
                    CHECK(std::abs(resid) <= 1e-10 * scale);
                }
            }
        }
    }
    CHECK_THROWS_AS((void)solve_linear({0, 0}, {0.0, 1.0}, {1, 1}),
                    std::invalid_argument);
}

TEST_CASE("solve_linear multiplier signs and named values") {
    const Interval iv{1.0, 2.0};
    auto sol = solve_linear({0, 0}, iv, {-1, 1});
    CHECK(sol.lambda == doctest::Approx(-2.0).epsilon(1e-14));  // -mhat
    // u0 = (tau - ab/tau)/(b-a) vanishes at the geometric mean
    CHECK(sol.value(std::sqrt(2.0)) == doctest::Approx(0.0).epsilon(1e-13));
    for (double tau : cheb_points(1.0, 2.0)) {
        CHECK(sol.value(tau) ==
              doctest::Approx(tau - 2.0 / tau).epsilon(1e-13));
    }

    for (const Weights& w : sample_P(20, 57)) {
        CHECK(solve_linear(w, iv, {1, 1}).lambda < 0.0);
        CHECK(solve_linear(w, iv, {-1, 1}).lambda < 0.0);
        CHECK(solve_linear(w, iv, {-1, -1}).lambda > 0.0);
        CHECK(solve_linear(w, iv, {1, -1}).lambda > 0.0);
        // (1,1): u stays positive
        auto up = solve_linear(w, iv, {1, 1});
        for (double tau : cheb_points(iv.a, iv.b)) CHECK(up.value(tau) > 0.0);
    }

    // increasing on P \ P- for eta = (-1,1)
    auto inc = solve_linear({0.1, 0.5}, iv, {-1, 1});
    for (double tau : cheb_points(iv.a, iv.b)) CHECK(inc.derivative(tau) > 0.0);
}

TEST_CASE("solve_linear uniqueness against a direct 2x2 solve") {
    // Fit (lambda, c) to the two boundary equations independently.
    for (const Weights& w : sample_P(15, 91)) {
        const double a = 0.7, b = 2.2;
        const long double x = w.beta + 1.0L, y = w.alpha + 2.0L;
        for (int e1 : {-1, 1}) {
            for (int e2 : {-1, 1}) {
                // c - lambda a^y / y = e1 a^x ; c - lambda b^y / y = e2 b^x
                const long double Aa = std::pow((long double)a, y) / y;
                const long double Ab = std::pow((long double)b, y) / y;
                const long double ra = e1 * std::pow((long double)a, x);
                const long double rb = e2 * std::pow((long double)b, x);
                const long double lam = (ra - rb) / (Ab - Aa);
                const long double c   = ra + lam * Aa;
                auto sol = solve_linear(w, {a, b}, {e1, e2});
                CHECK(sol.lambda == doctest::Approx((double)lam).epsilon(1e-12));
                CHECK(sol.c == doctest::Approx((double)c).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("solution scale homogeneity") {
    for (const Weights& w : sample_P(10, 13)) {
        const double gamma = w.alpha - w.beta + 1.0;
        auto base = solve_linear(w, {1.0, 2.0}, {-1, 1});
        for (double s : {0.5, 3.0}) {
            auto scaled = solve_linear(w, {s, 2.0 * s}, {-1, 1});
            CHECK(scaled.lambda ==
                  doctest::Approx(std::pow(s, -gamma) * base.lambda)
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("origin solution") {
    auto sol = solve_linear_origin({0, 0}, 1.0);
    CHECK(sol.lambda == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(sol.value(0.25) == doctest::Approx(0.25).epsilon(1e-15));

    auto s2 = solve_linear_origin({0.1, 0.5}, 2.0);
    CHECK(s2.gamma == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(s2.lambda == doctest::Approx(-2.1 / std::pow(2.0, 0.6)).epsilon(1e-14));
    CHECK(s2.value(2.0) == doctest::Approx(1.0).epsilon(1e-15));
    for (double tau = 0.1; tau < 2.0; tau += 0.1) {
        const double resid = s2.derivative(tau) +
                             1.5 * s2.value(tau) / tau +
                             s2.lambda * std::pow(tau, -0.4);
        CHECK(std::abs(resid) <= 1e-12);
    }
    CHECK_THROWS_AS((void)solve_linear_origin({-1.0, 1.0}, 1.0),
                    std::invalid_argument);
}

TEST_CASE("Riccati solution matches the (0,0) reference") {
    auto sol = solve_riccati({0, 0}, {1.0, 2.0});
    const double A = 1.5, G = std::sqrt(2.0);
    CHECK(sol.value(1.0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sol.value(2.0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sol.argmax == doctest::Approx(G).epsilon(1e-10));
    CHECK(sol.max_val == doctest::Approx(A / G).epsilon(1e-12));
    CHECK(sol.value(G) == doctest::Approx(3.0 * std::sqrt(2.0) / 4.0).epsilon(1e-13));

    auto ref = reference_w0(1.0, 2.0);
    for (double tau : cheb_points(1.0, 2.0)) {
        CHECK(sol.value(tau) == doctest::Approx(ref.value(tau)).epsilon(1e-12));
        CHECK(ref.value(tau) ==
              doctest::Approx(2.0 * A * tau / (G * G + tau * tau)).epsilon(1e-13));
    }
    CHECK(ref.max_val == doctest::Approx(A / G).epsilon(1e-15));
}

TEST_CASE("Riccati equation residual, positivity and unimodality") {
    for (const Weights& w : sample_P(20, 77)) {
        auto sol = solve_riccati(w, {1.0, 2.0});
        const double scale = std::max(1.0, std::abs(sol.lambda));
        for (double tau : cheb_points(1.0, 2.0)) {
            const double wv = sol.value(tau);
            CHECK(wv > 0.0);
            const double resid =
                sol.derivative(tau) +
                sol.lambda * std::pow(tau, w.alpha - w.beta) * wv * wv -
                (w.beta + 1.0) * wv / tau;
            CHECK(std::abs(resid) <= 1e-10 * scale);
        }
        CHECK(sol.derivative(1.0) > 0.0);
        CHECK(sol.derivative(2.0) < 0.0);
        // argmax against the stationarity closed form
        const double y = w.alpha + 2.0;
        const double oracle =
            std::pow((w.beta + 1.0) * y * sol.c /
                         ((w.alpha - w.beta + 1.0) * sol.lambda),
                     1.0 / y);
        CHECK(sol.argmax == doctest::Approx(oracle).epsilon(1e-10));
        // interior values exceed the boundary value 1 on P
        for (double tau : {1.2, 1.5, 1.8}) CHECK(sol.value(tau) > 1.0);
    }

    CHECK_THROWS_AS((void)solve_riccati({0.1, 0.5}, {0.0, 1.0}),
                    std::invalid_argument);

    // sup bound against the reference on the same interval
    auto w01 = reference_w0(1.0, 2.0);
    auto rad = solve_riccati({0.1, 0.5}, {1.0, 2.0});
    CHECK(rad.max_val <= w01.max_val);
}

TEST_CASE("generalized curvature is constant") {
    auto sol = solve_linear({0, 0}, {1.0, 2.0}, {-1, 1});
    auto cp  = curvature(sol, 1.0);
    CHECK(cp.k == doctest::Approx(2.0).epsilon(1e-12));          // mhat at left end
    CHECK(cp.generalized == doctest::Approx(2.0).epsilon(1e-12));  // -lambda
    for (double tau : {1.0, 1.3, 1.7, 2.0}) {
        CHECK(curvature(sol, tau).generalized ==
              doctest::Approx(-sol.lambda).epsilon(1e-10));
    }

    auto org = solve_linear_origin({0, 0}, 1.0);
    for (double tau : {0.2, 0.6, 1.0}) {
        CHECK(curvature(org, tau).generalized ==
              doctest::Approx(2.0).epsilon(1e-10));
    }

    for (const Weights& w : sample_P(10, 3)) {
        auto s = solve_linear(w, {0.5, 1.7}, {1, 1});
        const double g1 = curvature(s, 0.6).generalized;
        const double g2 = curvature(s, 1.5).generalized;
        CHECK(g1 == doctest::Approx(g2).epsilon(1e-10));
        CHECK(g1 == doctest::Approx(-s.lambda).epsilon(1e-10));
    }

    CHECK_THROWS_AS((void)curvature(sol, 2.5), std::invalid_argument);
}
