#include "isoweight/inequalities.hpp"

#include <cmath>
#include <stdexcept>

namespace isoweight {

namespace {

// (e^z - 1 - z) / z^2, stable at z = 0.
long double em2(long double z) {
    if (std::abs(z) < 0.5L) {
        long double term = 0.5L, sum = 0.5L;
        for (int k = 3; k <= 24; ++k) {
            term *= z / k;
            sum += term;
        }
        return sum;
    }
    return (std::expm1(z) - z) / (z * z);
}

// The gaps pit quantities of size ~1/log(t) against each other near t = 1.
// The denominators x - m and x - m t^gamma cancel catastrophically when
// written directly, so they are evaluated through the normalised forms
//   x - m         = x y L^2 (y em2(yL) - x em2(xL)) / expm1(yL),
//   x - m t^gamma = g y L^2 (g em2(gL) - y em2(yL)) / expm1(yL),
// and everything runs in extended precision.
long double main_gap_impl(double alpha, double beta, double a, double b) {
    if (!(a > 0.0) || !(b > a))
        throw std::invalid_argument("main_gap: requires 0 < a < b");
    const long double x = (long double)beta + 1.0L;
    const long double y = (long double)alpha + 2.0L;
    const long double g = y - x;  // gamma
    const long double t = (long double)b / (long double)a;
    const long double L = std::log(t);
    const long double E = std::expm1(y * L);
    const long double L2 = L * L;
    const long double denom1 = x * y * L2 * (y * em2(y * L) - x * em2(x * L)) / E;
    const long double denom2 = g * y * L2 * (g * em2(g * L) - y * em2(y * L)) / E;
    const long double lhs = 1.0L / denom1 - 1.0L / denom2;
    const long double rhs = 2.0L * (std::exp(L) + 1.0L) / std::expm1(L);
    return lhs - rhs;
}

} // namespace

double main_gap(const Weights& w, double a, double b) {
    if (!classify(w).in_P)
        throw std::invalid_argument(
            "main_gap: (alpha, beta) = (" + std::to_string(w.alpha) + ", " +
            std::to_string(w.beta) +
            ") is outside P; use main_gap_unchecked to evaluate anyway");
    return (double)main_gap_impl(w.alpha, w.beta, a, b);
}

double main_gap_unchecked(const Weights& w, double a, double b) {
    return (double)main_gap_impl(w.alpha, w.beta, a, b);
}

double hyperbolic_gap(double x, double lam) {
    if (!(x > 0.0) || !(lam > 0.0))
        throw std::invalid_argument("hyperbolic_gap: requires x > 0, lam > 0");
    const long double xl = x, ll = lam;
    const long double y  = xl + 1.0L / xl;
    const long double A  = ll * xl / 2.0L;
    const long double B  = ll / (2.0L * xl);
    // x/sinh(A) underflows harmlessly to 0 when A is huge.
    const long double s1    = xl / std::sinh(A) - 1.0L / (xl * std::sinh(B));
    const long double coths = 1.0L / std::tanh(A) + 1.0L / std::tanh(B);
    const long double term1 = s1 * s1 / coths;
    const long double term2 =
        y * std::tanh(ll / 2.0L) - 2.0L * std::tanh(ll * y / 4.0L);
    return (double)(term1 + term2);
}

EquivalencePair equivalence_check(const Weights& w, double t) {
    const RegionFlags f = classify(w);
    const bool origin = w.alpha == 0.0 && w.beta == 0.0;
    if (!f.in_P_plus || origin)
        throw std::invalid_argument(
            "equivalence_check: weights must lie on P+ minus the origin");
    if (!(t > 1.0))
        throw std::invalid_argument("equivalence_check: requires t > 1");
    EquivalencePair p;
    p.lhs_gap = main_gap(w, 1.0, t);
    p.hyp_gap = hyperbolic_gap(w.beta + 1.0, std::log(t));
    return p;
}

double mhat_gap(const Weights& w, double a, double b) {
    if (!(a > 0.0) || !(b > a))
        throw std::invalid_argument("mhat_gap: requires 0 < a < b");
    const RegionFlags f = classify(w);
    if (!f.in_P || f.in_P_minus)
        throw std::invalid_argument("mhat_gap: weights must lie in P \\ P-");
    const long double x = (long double)w.beta + 1.0L;
    const long double y = (long double)w.alpha + 2.0L;
    const long double g = y - x;
    const long double L = std::log((long double)b / (long double)a);
    const long double scale = std::pow((long double)a, -g);
    const long double mh =
        y * (std::exp(x * L) + 1.0L) / std::expm1(y * L);
    return (double)(scale * (2.0L * x / std::expm1(g * L) - mh));
}

double bigM(double tau, double zeta) {
    if (!(tau >= 1.0))
        throw std::invalid_argument("bigM: requires tau >= 1");
    if (!(zeta >= 1.0)) throw std::invalid_argument("bigM: requires zeta >= 1");
    if (tau == 1.0) return 1.0;
    const long double z = zeta, L = std::log((long double)tau);
    return (double)((z + 1.0L) / z * std::expm1(z * L) /
                    std::expm1((z + 1.0L) * L));
}

double bigLambda(double tau, double zeta) {
    if (!(tau > 1.0))
        throw std::invalid_argument("bigLambda: requires tau > 1");
    const long double M = bigM(tau, zeta);
    return (double)(1.0L / (1.0L - M) - 1.0L / (1.0L - (long double)tau * M));
}

double identity_lambda_main(const Weights& w, double t) {
    if (!(t > 1.0))
        throw std::invalid_argument("identity_lambda_main: requires t > 1");
    const long double x = (long double)w.beta + 1.0L;
    const long double y = (long double)w.alpha + 2.0L;
    const long double g = y - x;
    const long double L = std::log((long double)t);
    const long double m = y * std::expm1(x * L) / std::expm1(y * L);
    const long double lhs =
        1.0L / (x - m) - 1.0L / (x - m * std::exp(g * L));
    // Lambda(t^gamma)/(beta+1), kept in extended precision end to end so the
    // residual reflects the identity rather than rounding of tau = t^gamma.
    const long double z   = x / g;
    const long double T   = g * L;  // log(tau)
    const long double M   = (z + 1.0L) / z * std::expm1(z * T) /
                            std::expm1((z + 1.0L) * T);
    const long double tau = std::exp(T);
    const long double rhs = (1.0L / (1.0L - M) - 1.0L / (1.0L - tau * M)) / x;
    return (double)std::abs(lhs - rhs);
}

std::string to_string(GapKind k) {
    switch (k) {
        case GapKind::main:        return "main";
        case GapKind::hyperbolic:  return "hyperbolic";
        case GapKind::mhat:        return "mhat";
        case GapKind::lambda_mono: return "lambda_mono";
    }
    return "?";
}

} // namespace isoweight
