#ifndef ISOWEIGHT_PARAMS_HPP
#define ISOWEIGHT_PARAMS_HPP

#include <optional>

namespace isoweight {

/// Exponent pair of the radial power weights: |x|^alpha for volume,
/// |x|^beta for perimeter.
struct Weights {
    double alpha = 0.0;
    double beta  = 0.0;
};

/// Derived indices gamma = alpha - beta + 1, zeta = (beta+1)/gamma and
/// x = (beta+1)/(2 gamma). zeta and x are absent when gamma == 0.
struct Derived {
    double gamma = 1.0;
    std::optional<double> zeta;
    std::optional<double> x;
};

/// Membership flags for the parameter regions P, P+, P- and Q.
struct RegionFlags {
    bool in_P       = false;
    bool in_P_plus  = false;
    bool in_P_minus = false;
    bool in_Q       = false;
};

/// Truth values of the standing assumptions (A.1)-(A.4) specialised to
/// f = t^alpha, g = t^beta.
struct StandingAssumptions {
    bool a1 = false;  // integral of t^(alpha+1) converges at 0
    bool a2 = false;  // integral of t^(alpha+1) diverges at infinity
    bool a3 = false;  // t^nu g non-decreasing for some nu in [0,1)
    bool a4 = false;  // psi = t^(2 beta - alpha) diverges at infinity
};

/// Image of (alpha, beta) under the affine transform to hyperbola
/// coordinates X = (alpha+2)/2, Y = (2 beta - alpha)/2.
struct HyperbolaPoint {
    double X = 0.0;
    double Y = 0.0;
};

Derived derive(const Weights& w);

/// Region membership. Equality tests against the boundary curves
/// alpha = 2 beta and alpha (beta+1) = beta^2 use the absolute
/// tolerance `tol`; all other comparisons follow the defining
/// strict/non-strict inequalities exactly.
RegionFlags classify(const Weights& w, double tol = 1e-12);

StandingAssumptions standing_assumptions(const Weights& w);

HyperbolaPoint hyperbola_coords(const Weights& w);
Weights hyperbola_inverse(const HyperbolaPoint& p);

/// The unique point of P+ on the line through (-2,-1) with index zeta
/// (zeta >= 1). Satisfies alpha (beta+1) = beta^2 with
/// beta + 1 = sqrt(zeta).
Weights pplus_on_line(double zeta);

} // namespace isoweight

#endif
