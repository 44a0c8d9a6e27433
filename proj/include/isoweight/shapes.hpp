#ifndef ISOWEIGHT_SHAPES_HPP
#define ISOWEIGHT_SHAPES_HPP

#include "isoweight/params.hpp"
#include "isoweight/quad.hpp"

#include <array>
#include <functional>
#include <variant>
#include <vector>

namespace isoweight {

struct CenteredBall {
    double r = 1.0;
};

/// Union of centred annuli A((a_{2h+1}, a_{2h})) given by strictly
/// decreasing positive radii a_0 > a_1 > ... (even count).
struct CenteredAnnuliUnion {
    std::vector<double> radii;
};

/// Ball of radius r centred at (d, 0). d < r contains the origin, d == r
/// is tangent to it.
struct OffCenterBall {
    double d = 0.0;
    double r = 1.0;
};

/// Cap-symmetric set {(tau, phi) : a < tau < b, |phi| < theta(tau)} given
/// by a polar graph theta with values in (0, pi].
struct PolarGraph {
    double a = 0.0;
    double b = 1.0;
    std::function<double(double)> theta;
    std::function<double(double)> theta_prime;
};

/// The competitor set built from u(tau) = (tau/b)^gamma; boundary has a
/// cusp (gamma = 1/2) or Lipschitz corner (1/2 < gamma < 1) at the origin.
struct CompetitorE {
    double b = 1.0;
};

/// Star-shaped set with boundary r(phi) = r0 (1 + sum_k eps_k cos(k phi)).
struct FourierStar {
    double r0 = 1.0;
    std::array<double, 4> eps{};
};

using Shape = std::variant<CenteredBall, CenteredAnnuliUnion, OffCenterBall,
                           PolarGraph, CompetitorE, FourierStar>;

struct MeasurePair {
    double volume    = 0.0;  // V_alpha
    double perimeter = 0.0;  // P_beta
};

MeasurePair measure(const Shape& shape, const Weights& w,
                    const quad::QuadOptions& opt = {});

/// P^(alpha+2) / V^(beta+1), scale invariant.
double iso_ratio(const Shape& shape, const Weights& w,
                 const quad::QuadOptions& opt = {});
double iso_ratio(const MeasurePair& m, const Weights& w);

/// Isoperimetric ratio of centred balls: (2 pi)^gamma (alpha+2)^(beta+1).
double ball_ratio(const Weights& w);

/// iso_ratio(shape) - ball_ratio; >= 0 for all shapes when w is in P.
double deficit(const Shape& shape, const Weights& w,
               const quad::QuadOptions& opt = {});

/// Angular coordinate of the competitor boundary, via the two-branch
/// arcsin closed form; theta(0) = pi/(2 gamma), theta(b) = 0.
double competitor_theta(double tau, double b, const Weights& w);

/// gamma^-1 (1 + 1/(2x))^(2x) B(x, 1/2) - 2 pi; positive on P \ P- with
/// gamma in [1/2, 1). This is the normalised excess of the competitor's
/// isoperimetric ratio over the centred ball's.
double desired_gap(const Weights& w);

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// Morgan map Phi(x) = |x|^beta x / (beta + 1), for beta in (-1, 0).
Vec2 morgan_map(const Vec2& p, double beta);

struct PushforwardCheck {
    double vol_residual = 0.0;  // V_alpha(E) - (beta+1) V_0(Phi(E)), alpha = 2 beta
    double per_slack    = 0.0;  // P_beta(E) - (beta+1) P_0(Phi(E)), >= 0
};

/// Checks the Morgan-map pushforward identities for a boundary-parametrised
/// shape (centred ball, off-centre ball or Fourier star) at alpha = 2 beta.
PushforwardCheck pushforward_check(const Shape& shape, double beta,
                                   const quad::QuadOptions& opt = {});

/// V_alpha(B(0,t)) = 2 pi t^(alpha+2)/(alpha+2).
double ball_volume_fn(double t, const Weights& w);

/// J(v) = P_beta of the centred ball with V_alpha = v.
double ball_perimeter_of_volume(double v, const Weights& w);

/// P_beta(union) - P_beta(ball of equal V_alpha)
///   = sum_h J(t_h) - J(sum_h (-1)^h t_h) >= 0.
/// A single radius denotes a centred ball (identity case, gap 0).
double annuli_vs_ball(const std::vector<double>& radii, const Weights& w);

} // namespace isoweight

#endif
