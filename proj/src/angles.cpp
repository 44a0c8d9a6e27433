#include "isoweight/angles.hpp"

#include "isoweight/inequalities.hpp"

#include <cmath>
#include <stdexcept>

namespace isoweight {

namespace {

// Integrates g(tau)/sqrt(q(tau)) dmu in s = log(tau), where q vanishes
// linearly at both endpoints (slopes in s supplied for the fallback when
// rounding drives q non-positive within an ulp of an endpoint).
double band_integral(const std::function<double(double)>& g,
                     const std::function<double(double)>& q,
                     double a, double b, double slope_a, double slope_b,
                     const quad::QuadOptions& opt) {
    const double sa = std::log(a), sb = std::log(b);
    auto f_smooth = [&](double s) {
        const double tau = std::exp(s);
        double qq = q(tau);
        if (qq <= 0.0)
            qq = (s - sa < sb - s) ? slope_a * (s - sa) : slope_b * (sb - s);
        return g(tau) * std::sqrt((s - sa) * (sb - s) / qq);
    };
    return quad::integrate_sqrt_singular(f_smooth, sa, sb, true, true, opt).value;
}

} // namespace

double angle_linear(const LinearSolution& sol, const quad::QuadOptions& opt) {
    const double a = sol.interval.a, b = sol.interval.b;
    // d(1-u^2)/ds = -2 u u' tau at the endpoints, positive pointing inward.
    const double slope_a = -2.0 * sol.value(a) * sol.derivative(a) * a;
    const double slope_b = 2.0 * sol.value(b) * sol.derivative(b) * b;
    return band_integral(
        [&](double tau) { return sol.value(tau); },
        [&](double tau) {
            const double u = sol.value(tau);
            return (1.0 - u) * (1.0 + u);
        },
        a, b, slope_a, slope_b, opt);
}

double angle_origin(const OriginSolution& sol, const quad::QuadOptions& opt) {
    // Substituting v = (tau/b)^gamma turns the integral into
    // (1/gamma) int_0^1 dv / sqrt(1 - v^2).
    auto f_smooth = [](double v) { return 1.0 / std::sqrt(1.0 + v); };
    const double arc =
        quad::integrate_sqrt_singular(f_smooth, 0.0, 1.0, false, true, opt).value;
    return arc / sol.gamma;
}

double angle_riccati(const RiccatiSolution& sol, const quad::QuadOptions& opt) {
    const double a = sol.interval.a, b = sol.interval.b;
    const double slope_a = 2.0 * sol.value(a) * sol.derivative(a) * a;
    const double slope_b = -2.0 * sol.value(b) * sol.derivative(b) * b;
    return band_integral(
        [](double) { return 1.0; },
        [&](double tau) {
            const double w = sol.value(tau);
            return (w - 1.0) * (w + 1.0);
        },
        a, b, slope_a, slope_b, opt);
}

double mu_u(const LinearSolution& sol, double t) {
    if (!(t > 0.0 && t < 1.0))
        throw std::invalid_argument("mu_u: requires t in (0,1)");
    const double root = quad::bracket_root(
        [&](double tau) { return sol.value(tau) - t; }, sol.interval.a,
        sol.interval.b, 1e-14 * sol.interval.b);
    return std::log(sol.interval.b / root);
}

double mu_neg_u(const LinearSolution& sol, double t) {
    if (!(t > 0.0 && t < 1.0))
        throw std::invalid_argument("mu_neg_u: requires t in (0,1)");
    const double root = quad::bracket_root(
        [&](double tau) { return sol.value(tau) + t; }, sol.interval.a,
        sol.interval.b, 1e-14 * sol.interval.b);
    return std::log(root / sol.interval.a);
}

double mu_w(const RiccatiSolution& sol, double t) {
    if (t > sol.max_val)
        throw std::invalid_argument("mu_w: t exceeds max w");
    if (t == sol.max_val) return 0.0;
    if (!(t >= 1.0)) throw std::invalid_argument("mu_w: requires t >= 1");
    // at the boundary value the preimages are the endpoints themselves
    if (t == 1.0) return std::log(sol.interval.b / sol.interval.a);
    const double tol = 1e-14 * sol.interval.b;
    const double v1  = quad::bracket_root(
        [&](double tau) { return sol.value(tau) - t; }, sol.interval.a,
        sol.argmax, tol);
    const double v2 = quad::bracket_root(
        [&](double tau) { return sol.value(tau) - t; }, sol.argmax,
        sol.interval.b, tol);
    return std::log(v2 / v1);
}

double mu_w0(double a, double b, double t) {
    if (!(a > 0.0) || !(b > a))
        throw std::invalid_argument("mu_w0: requires 0 < a < b");
    const double lam = 0.5 * (a + b) / std::sqrt(a * b);
    if (!(t > 0.0 && t < lam))
        throw std::invalid_argument("mu_w0: requires t in (0, A/G)");
    return 2.0 * std::log((lam + std::sqrt((lam - t) * (lam + t))) / t);
}

double endpoint_coth_gap(const Weights& w, double a, double b) {
    return main_gap_unchecked(w, a, b);
}

double omega_field(double t, double x) {
    if (!(t > 0.0) || !(x > 0.0))
        throw std::invalid_argument("omega_field: requires t > 0, x > 0");
    return -2.0 / (t * std::tanh(x / 2.0));
}

} // namespace isoweight
