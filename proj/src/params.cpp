#include "isoweight/params.hpp"

#include <cmath>
#include <stdexcept>

namespace isoweight {

Derived derive(const Weights& w) {
    Derived d;
    d.gamma = w.alpha - w.beta + 1.0;
    if (d.gamma != 0.0) {
        d.zeta = (w.beta + 1.0) / d.gamma;
        d.x    = (w.beta + 1.0) / (2.0 * d.gamma);
    }
    return d;
}

RegionFlags classify(const Weights& w, double tol) {
    if (tol < 0.0)
        throw std::invalid_argument("classify: tol must be >= 0");
    const double alpha = w.alpha, beta = w.beta;
    const double gamma = alpha - beta + 1.0;
    const double curve = alpha * (beta + 1.0) - beta * beta;

    RegionFlags f;
    // The two non-strict boundary comparisons admit the curve tolerance so
    // points computed to lie on alpha = 2 beta or alpha (beta+1) = beta^2
    // are not expelled by rounding.
    f.in_P       = gamma > 0.0 && alpha <= 2.0 * beta + tol && curve <= tol;
    f.in_P_plus  = alpha >= 0.0 && beta >= 0.0 && std::abs(curve) <= tol;
    f.in_P_minus = alpha > -2.0 && alpha <= 0.0 &&
                   std::abs(alpha - 2.0 * beta) <= tol;
    // Q: alpha > -2 and alpha <= 2 beta if beta <= 0, alpha < 2 beta if beta > 0.
    f.in_Q = alpha > -2.0 &&
             (beta <= 0.0 ? alpha <= 2.0 * beta : alpha < 2.0 * beta);
    return f;
}

StandingAssumptions standing_assumptions(const Weights& w) {
    StandingAssumptions s;
    s.a1 = w.alpha > -2.0;
    s.a2 = w.alpha >= -2.0;
    s.a3 = w.beta > -1.0;
    s.a4 = 2.0 * w.beta - w.alpha > 0.0;
    return s;
}

HyperbolaPoint hyperbola_coords(const Weights& w) {
    return {(w.alpha + 2.0) / 2.0, (2.0 * w.beta - w.alpha) / 2.0};
}

Weights hyperbola_inverse(const HyperbolaPoint& p) {
    return {2.0 * p.X - 2.0, p.Y + p.X - 1.0};
}

Weights pplus_on_line(double zeta) {
    if (!(zeta >= 1.0))
        throw std::invalid_argument("pplus_on_line: zeta must be >= 1");
    // Solving alpha (beta+1) = beta^2 together with
    // alpha + 2 = (1 + 1/zeta)(beta + 1) gives beta + 1 = sqrt(zeta).
    const double beta  = std::sqrt(zeta) - 1.0;
    const double alpha = (1.0 + 1.0 / zeta) * beta + 1.0 / zeta - 1.0;
    return {alpha, beta};
}

} // namespace isoweight
