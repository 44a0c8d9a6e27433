#include "isoweight/closedform.hpp"

#include "isoweight/quad.hpp"

#include <cmath>
#include <stdexcept>

namespace isoweight {

namespace {

void check_interval(double a, double b, const char* who) {
    if (!(a > 0.0) || !(b > a))
        throw std::invalid_argument(std::string(who) + ": requires 0 < a < b");
}

} // namespace

double multiplier_m(const Weights& w, double a, double b) {
    check_interval(a, b, "multiplier_m");
    const double x = w.beta + 1.0, y = w.alpha + 2.0;
    if (y == 0.0) throw std::invalid_argument("multiplier_m: alpha + 2 == 0");
    const double L = std::log(b / a);
    const double gamma = w.alpha - w.beta + 1.0;
    const double scale = std::pow(a, -gamma);
    if (L == 0.0) return scale * x;  // coincident-endpoint limit (Cauchy MVT)
    if (std::max(std::abs(x), std::abs(y)) * L > 500.0)
        return scale * y * std::exp((x - y) * L) * (-std::expm1(-x * L)) /
               (-std::expm1(-y * L));
    return scale * y * std::expm1(x * L) / std::expm1(y * L);
}

double multiplier_mhat(const Weights& w, double a, double b) {
    check_interval(a, b, "multiplier_mhat");
    const double x = w.beta + 1.0, y = w.alpha + 2.0;
    if (y == 0.0) throw std::invalid_argument("multiplier_mhat: alpha + 2 == 0");
    const double L = std::log(b / a);
    const double gamma = w.alpha - w.beta + 1.0;
    const double scale = std::pow(a, -gamma);
    if (std::max(std::abs(x), std::abs(y)) * L > 500.0)
        return scale * y * std::exp((x - y) * L) * (1.0 + std::exp(-x * L)) /
               (-std::expm1(-y * L));
    return scale * y * (std::exp(x * L) + 1.0) / std::expm1(y * L);
}

double LinearSolution::value(double tau) const {
    const double y = weights.alpha + 2.0;
    return std::pow(tau, -(weights.beta + 1.0)) *
           (c - lambda / y * std::pow(tau, y));
}

double LinearSolution::derivative(double tau) const {
    // direct derivative of the closed form, not the ODE right-hand side
    const double x = weights.beta + 1.0;
    const double y = weights.alpha + 2.0;
    return -std::pow(tau, -(x + 1.0)) *
           (c * x + lambda * (y - x) / y * std::pow(tau, y));
}

double OriginSolution::value(double tau) const {
    return std::pow(tau / b, gamma);
}

double OriginSolution::derivative(double tau) const {
    return gamma * std::pow(tau / b, gamma - 1.0) / b;
}

double RiccatiSolution::value(double tau) const {
    const double y = weights.alpha + 2.0;
    return std::pow(tau, weights.beta + 1.0) /
           (c + lambda / y * std::pow(tau, y));
}

double RiccatiSolution::derivative(double tau) const {
    // direct derivative of the closed form, not the Riccati right-hand side
    const double x = weights.beta + 1.0;
    const double y = weights.alpha + 2.0;
    const double D = c + lambda / y * std::pow(tau, y);
    return std::pow(tau, x - 1.0) *
           (c * x - lambda * (y - x) / y * std::pow(tau, y)) / (D * D);
}

LinearSolution solve_linear(const Weights& w, const Interval& iv,
                            const BoundaryData& eta) {
    check_interval(iv.a, iv.b, "solve_linear");
    if (std::abs(eta.eta1) != 1 || std::abs(eta.eta2) != 1)
        throw std::invalid_argument("solve_linear: eta must be +-1");
    const double y = w.alpha + 2.0;

    LinearSolution sol;
    sol.weights  = w;
    sol.interval = iv;
    sol.eta      = eta;
    if (eta.eta1 == eta.eta2) {
        const double m = multiplier_m(w, iv.a, iv.b);
        // eta = (1,1): lambda = -m, c = a^(beta+1) - m a^(alpha+2)/(alpha+2);
        // (-1,-1) is its negation.
        sol.lambda = -eta.eta1 * m;
        sol.c = eta.eta1 * (std::pow(iv.a, w.beta + 1.0) -
                            m / y * std::pow(iv.a, y));
    } else {
        const double mh = multiplier_mhat(w, iv.a, iv.b);
        // eta = (-1,1): lambda = -mhat, c = b^(beta+1) - mhat b^(alpha+2)/(alpha+2).
        sol.lambda = -eta.eta2 * mh;
        sol.c = eta.eta2 * (std::pow(iv.b, w.beta + 1.0) -
                            mh / y * std::pow(iv.b, y));
    }
    return sol;
}

OriginSolution solve_linear_origin(const Weights& w, double b) {
    if (!(b > 0.0))
        throw std::invalid_argument("solve_linear_origin: requires b > 0");
    const double gamma = w.alpha - w.beta + 1.0;
    if (!(gamma > 0.0))
        throw std::invalid_argument("solve_linear_origin: requires gamma > 0");
    OriginSolution sol;
    sol.weights = w;
    sol.b       = b;
    sol.gamma   = gamma;
    sol.lambda  = -(w.alpha + 2.0) / std::pow(b, gamma);
    return sol;
}

RiccatiSolution solve_riccati(const Weights& w, const Interval& iv) {
    check_interval(iv.a, iv.b, "solve_riccati");
    const double y = w.alpha + 2.0;
    const double m = multiplier_m(w, iv.a, iv.b);

    RiccatiSolution sol;
    sol.weights  = w;
    sol.interval = iv;
    sol.lambda   = m;
    sol.c = std::pow(iv.a, w.beta + 1.0) - m / y * std::pow(iv.a, y);

    // w'(a) > 0 > w'(b) on P (properties of m), so w' brackets a zero.
    sol.argmax = quad::bracket_root(
        [&sol](double tau) { return sol.derivative(tau); }, iv.a, iv.b,
        1e-13 * iv.b);
    sol.max_val = sol.value(sol.argmax);
    return sol;
}

RiccatiSolution reference_w0(double a, double b) {
    check_interval(a, b, "reference_w0");
    const double A = 0.5 * (a + b);
    const double G = std::sqrt(a * b);
    RiccatiSolution sol;
    sol.weights  = {0.0, 0.0};
    sol.interval = {a, b};
    sol.lambda   = 1.0 / A;          // m at (0,0) is 2/(a+b)
    sol.c        = G * G / (2.0 * A);
    sol.argmax   = G;
    sol.max_val  = A / G;
    return sol;
}

namespace {

CurvaturePair curvature_impl(const Weights& w, double u, double du, double tau) {
    CurvaturePair cp;
    cp.k = du + u / tau;
    cp.generalized = std::pow(tau, w.beta - w.alpha) * (cp.k + w.beta * u / tau);
    return cp;
}

} // namespace

CurvaturePair curvature(const LinearSolution& sol, double tau) {
    if (!(tau >= sol.interval.a && tau <= sol.interval.b))
        throw std::invalid_argument("curvature: tau outside [a, b]");
    return curvature_impl(sol.weights, sol.value(tau), sol.derivative(tau), tau);
}

CurvaturePair curvature(const OriginSolution& sol, double tau) {
    if (!(tau > 0.0 && tau <= sol.b))
        throw std::invalid_argument("curvature: tau outside (0, b]");
    return curvature_impl(sol.weights, sol.value(tau), sol.derivative(tau), tau);
}

} // namespace isoweight
