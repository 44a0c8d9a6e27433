#ifndef ISOWEIGHT_CLOSEDFORM_HPP
#define ISOWEIGHT_CLOSEDFORM_HPP

#include "isoweight/params.hpp"

namespace isoweight {

struct Interval {
    double a = 0.0;
    double b = 1.0;
};

/// Dirichlet data (+-1, +-1) at the interval endpoints.
struct BoundaryData {
    int eta1 = 1;
    int eta2 = 1;
};

/// m(a,b) = (alpha+2)(b^(beta+1) - a^(beta+1)) / (b^(alpha+2) - a^(alpha+2)),
/// evaluated in the scale-normalised frame through expm1 so nearly
/// coincident endpoints do not cancel.
double multiplier_m(const Weights& w, double a, double b);

/// mhat(a,b), same but with + in the numerator. mhat > m always.
double multiplier_mhat(const Weights& w, double a, double b);

/// Solution u(tau) = tau^-(beta+1) (c - lambda tau^(alpha+2)/(alpha+2))
/// of u' + (beta+1) u / tau + lambda tau^(alpha-beta) = 0 with
/// u(a) = eta1, u(b) = eta2.
struct LinearSolution {
    Weights weights;
    Interval interval;
    BoundaryData eta;
    double lambda = 0.0;
    double c      = 0.0;

    double value(double tau) const;
    double derivative(double tau) const;
};

/// The a = 0 solution u(tau) = (tau/b)^gamma with lambda = -(alpha+2)/b^gamma.
struct OriginSolution {
    Weights weights;
    double b      = 1.0;
    double gamma  = 1.0;
    double lambda = 0.0;

    double value(double tau) const;
    double derivative(double tau) const;
};

/// Solution w(tau) = tau^(beta+1) / (c + m tau^(alpha+2)/(alpha+2)) of the
/// Riccati equation w' + lambda tau^(alpha-beta) w^2 = (beta+1) w / tau
/// with w(a) = w(b) = 1; lambda = m. The interior argmax is located at
/// construction.
struct RiccatiSolution {
    Weights weights;
    Interval interval;
    double lambda  = 0.0;  // equals m(a, b)
    double c       = 0.0;
    double argmax  = 0.0;
    double max_val = 1.0;

    double value(double tau) const;
    double derivative(double tau) const;
};

struct CurvaturePair {
    double k           = 0.0;  // geodesic curvature (1/tau)(tau u)'
    double generalized = 0.0;  // tau^(beta-alpha) (k + beta u / tau); == -lambda
};

LinearSolution solve_linear(const Weights& w, const Interval& iv,
                            const BoundaryData& eta);
OriginSolution solve_linear_origin(const Weights& w, double b);
RiccatiSolution solve_riccati(const Weights& w, const Interval& iv);

/// The alpha = beta = 0 reference w0(tau) = 2 A tau / (G^2 + tau^2) with
/// A, G the arithmetic and geometric means of a, b; max value A/G at tau = G.
RiccatiSolution reference_w0(double a, double b);

CurvaturePair curvature(const LinearSolution& sol, double tau);
CurvaturePair curvature(const OriginSolution& sol, double tau);

} // namespace isoweight

#endif
