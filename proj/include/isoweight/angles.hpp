#ifndef ISOWEIGHT_ANGLES_HPP
#define ISOWEIGHT_ANGLES_HPP

#include "isoweight/closedform.hpp"
#include "isoweight/quad.hpp"

namespace isoweight {

/// Total angle integral of u across its radial band with respect to
/// mu(dt) = dt/t:
///   angle = int_a^b u / sqrt(1 - u^2) dmu = theta_u(a) - theta_u(b).
/// Computed in s = log(tau); the endpoint blow-ups (|u| = 1 with u' != 0)
/// are inverse square roots and are removed by substitution.
double angle_linear(const LinearSolution& sol, const quad::QuadOptions& opt = {});

/// Same integral for the a = 0 solution u = (tau/b)^gamma; equals
/// pi/(2 gamma). Computed by quadrature after the substitution v = u(tau).
double angle_origin(const OriginSolution& sol, const quad::QuadOptions& opt = {});

/// int_a^b 1 / sqrt(w^2 - 1) dmu. Equals pi for the (0,0) reference w0 on
/// any interval; exceeds pi on P \ P-.
double angle_riccati(const RiccatiSolution& sol, const quad::QuadOptions& opt = {});

/// Distribution function mu_u(t) = mu({u > t}) = log(b / u^-1(t)) of a
/// strictly increasing eta = (-1,1) solution, for t in (0,1).
double mu_u(const LinearSolution& sol, double t);

/// mu_{-u}(t) = log(u^-1(-t) / a), t in (0,1).
double mu_neg_u(const LinearSolution& sol, double t);

/// mu_w(t) = log(v2(t)/v1(t)) with v1, v2 the preimages of t on the two
/// monotone branches of the unimodal w, for t in (1, max w). Returns 0 at
/// t == max w; rejects t > max w.
double mu_w(const RiccatiSolution& sol, double t);

/// Closed form z0(t) = 2 log((lam + sqrt(lam^2 - t^2))/t), lam = A/G; this
/// is the distribution function of the (0,0) reference w0 on [1, lam).
double mu_w0(double a, double b, double t);

/// [1/(1+beta - m a^gamma) - 1/(1+beta - m b^gamma)] - 2 coth(mu((a,b))/2).
double endpoint_coth_gap(const Weights& w, double a, double b);

/// omega(t, x) = -(2/t) coth(x/2); strictly increasing in x.
double omega_field(double t, double x);

} // namespace isoweight

#endif
