#include "isoweight/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <vector>

namespace isoweight::quad {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1,1] (QUADPACK values).
constexpr double XGK[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double WGK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double WG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
    double integral = 0.0;
    double error    = 0.0;
};

PanelEstimate gk15(const Fn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = WGK[7] * fc;
    double resg = WG[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x  = h * XGK[j];
        const double fs = f(c - x) + f(c + x);
        resk += WGK[j] * fs;
        if (j % 2 == 1) resg += WG[j / 2] * fs;
    }
    PanelEstimate r;
    r.integral = resk * h;
    r.error    = std::abs((resk - resg) * h);
    return r;
}

struct Panel {
    double a, b, integral, error;
    int depth;
    bool operator<(const Panel& o) const {
        // Worst error first; tie-break on the endpoints so the
        // subdivision order is fully deterministic.
        if (error != o.error) return error > o.error;
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
};

} // namespace

QuadResult integrate(const Fn& f, double a, double b, const QuadOptions& opt) {
    if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
    if (!(opt.rel_tol > 0.0) || !(opt.abs_tol > 0.0))
        throw std::invalid_argument("integrate: tolerances must be positive");

    QuadResult res;
    std::multiset<Panel> panels;
    double total_I, total_E;
    {
        PanelEstimate e = gk15(f, a, b);
        res.evaluations += 15;
        panels.insert({a, b, e.integral, e.error, 0});
        total_I = e.integral;
        total_E = e.error;
    }

    while (total_E > std::max(opt.abs_tol, opt.rel_tol * std::abs(total_I))) {
        auto it = panels.begin();
        // Skip panels that have reached the depth cap.
        while (it != panels.end() && it->depth >= opt.max_depth) ++it;
        if (it == panels.end()) break;  // nothing left to refine

        if (res.evaluations + 30 > opt.max_evals)
            throw QuadFailure("integrate: evaluation budget exhausted");

        Panel p = *it;
        panels.erase(it);
        const double m = 0.5 * (p.a + p.b);
        if (!(p.a < m && m < p.b)) {
            // Interval no longer representable; keep as-is.
            p.depth = opt.max_depth;
            panels.insert(p);
            continue;
        }
        PanelEstimate l = gk15(f, p.a, m);
        PanelEstimate r = gk15(f, m, p.b);
        res.evaluations += 30;
        panels.insert({p.a, m, l.integral, l.error, p.depth + 1});
        panels.insert({m, p.b, r.integral, r.error, p.depth + 1});
        total_I += l.integral + r.integral - p.integral;
        total_E += l.error + r.error - p.error;
    }

    // Re-accumulate once to shed the drift of the running updates.
    total_I = total_E = 0.0;
    for (const Panel& p : panels) { total_I += p.integral; total_E += p.error; }

    res.value        = total_I;
    res.err_estimate = total_E;
    return res;
}

QuadResult integrate_sqrt_singular(const Fn& f_smooth, double a, double b,
                                   bool sing_left, bool sing_right,
                                   const QuadOptions& opt) {
    if (!(a < b))
        throw std::invalid_argument("integrate_sqrt_singular: requires a < b");

    if (!sing_left && !sing_right) return integrate(f_smooth, a, b, opt);

    if (sing_left && sing_right) {
        // Split at the midpoint; on each half the opposite factor is smooth.
        const double m = 0.5 * (a + b);
        QuadOptions half = opt;
        half.abs_tol *= 0.5;
        auto left = integrate_sqrt_singular(
            [&](double t) { return f_smooth(t) / std::sqrt(b - t); }, a, m,
            true, false, half);
        auto right = integrate_sqrt_singular(
            [&](double t) { return f_smooth(t) / std::sqrt(t - a); }, m, b,
            false, true, half);
        return {left.value + right.value,
                left.err_estimate + right.err_estimate,
                left.evaluations + right.evaluations};
    }

    const double len = b - a;
    Fn g;
    if (sing_left) {
        g = [&, len](double s) { return f_smooth(a + len * s * s); };
    } else {
        g = [&, len](double s) { return f_smooth(b - len * s * s); };
    }
    QuadResult r = integrate(g, 0.0, 1.0, opt);
    const double scale = 2.0 * std::sqrt(len);
    r.value *= scale;
    r.err_estimate *= scale;
    return r;
}

double bracket_root(const Fn& f, double lo, double hi, double tol) {
    if (!(lo < hi))
        throw std::invalid_argument("bracket_root: requires lo < hi");
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0)
        throw std::invalid_argument("bracket_root: f(lo) f(hi) > 0");

    const double eps  = std::numeric_limits<double>::epsilon();
    const double wtol = std::max(tol, 4.0 * eps * std::max(std::abs(lo), std::abs(hi)));

    double prev_width = hi - lo;
    int bisections_pending = 0;
    for (int iter = 0; iter < 200 && hi - lo > wtol; ++iter) {
        double x;
        const double width = hi - lo;
        // Secant step, safeguarded: fall back to bisection when the step
        // leaves the bracket, crowds an endpoint, or fails to shrink the
        // bracket fast enough.
        if (bisections_pending == 0 && fhi != flo) {
            x = hi - fhi * (hi - lo) / (fhi - flo);
            const double margin = 0.01 * width;
            if (!(x > lo + margin && x < hi - margin)) x = lo + 0.5 * width;
        } else {
            x = lo + 0.5 * width;
            if (bisections_pending > 0) --bisections_pending;
        }
        const double fx = f(x);
        if (fx == 0.0) return x;
        if (flo * fx < 0.0) { hi = x; fhi = fx; }
        else                { lo = x; flo = fx; }

        if (hi - lo > 0.5 * prev_width) ++bisections_pending;
        prev_width = hi - lo;
    }
    return lo + 0.5 * (hi - lo);
}

} // namespace isoweight::quad
