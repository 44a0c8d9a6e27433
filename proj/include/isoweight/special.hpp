#ifndef ISOWEIGHT_SPECIAL_HPP
#define ISOWEIGHT_SPECIAL_HPP

#include "isoweight/quad.hpp"

namespace isoweight::special {

struct SpecialConfig {
    int asymptotic_shift = 6;   // digamma recurrence shift target (>= 6)
    int series_terms     = 8;   // asymptotic series terms (>= 8)
    quad::QuadOptions quad_opts{};
};

/// Euler beta function via log-gamma.
double beta_fn(double x, double y);

/// Digamma by recurrence shift to >= cfg.asymptotic_shift followed by the
/// asymptotic series in 1/x^2.
double digamma(double x, const SpecialConfig& cfg = {});

/// phi(x) = 1/x - log x + psi(x); positive, decreasing, convex.
double phi(double x, const SpecialConfig& cfg = {});

/// Same phi through quadrature of the Binet-type integral
/// int_0^inf (1/t - 1/(e^t - 1)) e^{-tx} dt.
double phi_binet(double x, const SpecialConfig& cfg = {});

/// w(x) = phi(x) - phi(x+1/2) + log(1 + 1/(2x)) - 1/(2x); this is the
/// logarithmic derivative of W. w(1/2) = 0 and w > 0 on (1/2, 1).
double small_w(double x, const SpecialConfig& cfg = {});

struct SeriesResult {
    double value            = 0.0;
    double truncation_bound = 0.0;  // first omitted alternating term
};

/// Partial sum (n series terms) of the alternating representation of
/// w(1/2 + h) for |h| < 1/2.
SeriesResult small_w_series(double h, int n);

/// W(x) = sqrt(2x) (1 + 1/(2x))^(2x) B(x, 1/2); W >= 2 pi on [1/2, inf)
/// with equality only at x = 1/2. Rejects x < 1/2.
double cap_W(double x);
double cap_W_unchecked(double x);

/// int_{1/2}^x w dy by direct quadrature of small_w.
double int_w(double x, const SpecialConfig& cfg = {});

/// The same integral through the single-integral representation with
/// kernel rho(t).
double int_w_rep(double x, const SpecialConfig& cfg = {});

/// h(t) = 1/t - 1/(e^t - 1), h(0) = 1/2.
double hfun(double t);

/// rho(t) = h(t) + h(t/2)/2 - 1/2; convex, rho(0) = 1/4, -> -1/2 at infinity.
double rho(double t);

/// The unique root of rho, located beyond 5/2 by bracketing.
double rho_root();

/// Y(x) = [(x^2 + x/2 - 1/2)/(x(x+1/2))] / log(1 + (x-1/2)/(x+1/2));
/// Y <= 5/2 for x >= 1.
double Y_of_x(double x);

/// Hurwitz zeta(a, s) = sum_{p>=0} (a+p)^(-s) for a > 0, s > 1, by direct
/// summation plus an Euler-Maclaurin tail.
double hurwitz_zeta(double a, double s);

/// zeta(a, s) - zeta(a + 1/2, s) through the alternating half-step
/// representation.
double zeta_diff(double a, double s);

} // namespace isoweight::special

#endif
