#ifndef ISOWEIGHT_INEQUALITIES_HPP
#define ISOWEIGHT_INEQUALITIES_HPP

#include "isoweight/params.hpp"

#include <string>

namespace isoweight {

enum class GapKind { main, hyperbolic, mhat, lambda_mono };

struct GapRecord {
    Weights params;
    double a    = 1.0;
    double b    = 1.0;
    double gap  = 0.0;
    GapKind kind = GapKind::main;
};

/// LHS - RHS of
///   1/(1+beta - m a^gamma) - 1/(1+beta - m b^gamma) >= 2 (a+b)/(b-a).
/// Nonnegative on P; zero only at (alpha, beta) = (0, 0). Throws when the
/// weights are outside P; use main_gap_unchecked to evaluate regardless.
double main_gap(const Weights& w, double a, double b);
double main_gap_unchecked(const Weights& w, double a, double b);

/// (1/x)^2 coth(lam/2x) + x^2 coth(lam x/2) - y^2 coth(lam y/2)
/// + y tanh(lam/2) with y = x + 1/x. Evaluated through the
/// completed-square decomposition
///   s^2/(coth(lam x/2) + coth(lam/2x)) + y tanh(lam/2) - 2 tanh(lam y/4),
/// s = x/sinh(lam x/2) - 1/(x sinh(lam/2x)), which is free of the
/// catastrophic cancellation of the displayed form and exactly zero at x = 1.
double hyperbolic_gap(double x, double lam);

struct EquivalencePair {
    double lhs_gap = 0.0;
    double hyp_gap = 0.0;
};

/// For w on the boundary curve P+ (excluding the origin) and t > 1,
/// evaluates main_gap(w, 1, t) and hyperbolic_gap(beta+1, log t). The two
/// have the same sign (both positive).
EquivalencePair equivalence_check(const Weights& w, double t);

/// 2 (beta+1)/(b^gamma - a^gamma) - mhat; positive on P \ P-.
double mhat_gap(const Weights& w, double a, double b);

/// M(tau) = 1 at tau = 1 and (zeta+1)/zeta (tau^zeta - 1)/(tau^(zeta+1) - 1)
/// for tau > 1; strictly decreasing in tau.
double bigM(double tau, double zeta);

/// Lambda(tau) = 1/(1 - M) - 1/(1 - tau M) for tau > 1; strictly decreasing.
double bigLambda(double tau, double zeta);

/// Residual of the identity
///   1/(beta+1-m) - 1/(beta+1 - t^gamma m) = Lambda(t^gamma)/(beta+1)
/// in the normalised frame a = 1, b = t.
double identity_lambda_main(const Weights& w, double t);

std::string to_string(GapKind k);

} // namespace isoweight

#endif
