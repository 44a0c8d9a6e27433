#ifndef ISOWEIGHT_QUAD_HPP
#define ISOWEIGHT_QUAD_HPP

#include <functional>
#include <stdexcept>
#include <string>

namespace isoweight::quad {

struct QuadResult {
    double value        = 0.0;
    double err_estimate = 0.0;
    long   evaluations  = 0;
};

/// Thrown when an integral fails to reach the requested tolerance
/// within the evaluation budget.
struct QuadFailure : std::runtime_error {
    explicit QuadFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct QuadOptions {
    double rel_tol   = 1e-10;
    double abs_tol   = 1e-12;
    long   max_evals = 1000000;
    int    max_depth = 60;
};

using Fn = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (G7,K15) integration of f over (a,b).
QuadResult integrate(const Fn& f, double a, double b,
                     const QuadOptions& opt = {});

/// Integrates f_smooth(t) * (t-a)^(-1/2 if sing_left) * (b-t)^(-1/2 if
/// sing_right) over (a,b). The inverse square roots are removed by the
/// substitution t = a + (b-a) s^2 (mirrored on the right); f_smooth is
/// never evaluated at the endpoints themselves.
QuadResult integrate_sqrt_singular(const Fn& f_smooth, double a, double b,
                                   bool sing_left, bool sing_right,
                                   const QuadOptions& opt = {});

/// Root of f in [lo, hi] given f(lo) f(hi) <= 0, by a safeguarded
/// secant/bisection hybrid. The returned point always lies in the
/// initial bracket; the bracket width shrinks monotonically.
double bracket_root(const Fn& f, double lo, double hi, double tol = 1e-13);

} // namespace isoweight::quad

#endif
