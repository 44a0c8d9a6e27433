#include "isoweight/special.hpp"

#include <cmath>
#include <stdexcept>

namespace isoweight::special {

namespace {

// B_{2n}/(2n) for the digamma asymptotic series.
constexpr double DIGAMMA_COEF[8] = {
    1.0 / 12.0,   -1.0 / 120.0,     1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0,  1.0 / 12.0,  -3617.0 / 8160.0};

} // namespace

double beta_fn(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0))
        throw std::invalid_argument("beta_fn: requires x, y > 0");
    return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

double digamma(double x, const SpecialConfig& cfg) {
    if (!(x > 0.0)) throw std::invalid_argument("digamma: requires x > 0");
    const int shift = cfg.asymptotic_shift < 6 ? 6 : cfg.asymptotic_shift;
    const int terms = cfg.series_terms < 8 ? 8 : (cfg.series_terms > 8 ? 8 : cfg.series_terms);
    double acc = 0.0;
    while (x < shift) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    double series = 0.0, p = inv2;
    for (int n = 0; n < terms; ++n) {
        series += DIGAMMA_COEF[n] * p;
        p *= inv2;
    }
    return acc + std::log(x) - 0.5 / x - series;
}

double phi(double x, const SpecialConfig& cfg) {
    if (!(x > 0.0)) throw std::invalid_argument("phi: requires x > 0");
    return 1.0 / x - std::log(x) + digamma(x, cfg);
}

double hfun(double t) {
    if (t < 0.0) throw std::invalid_argument("hfun: requires t >= 0");
    if (t < 0.05) {
        // 1/t - 1/(e^t - 1) = 1/2 - t/12 + t^3/720 - t^5/30240 + ...
        const double t2 = t * t;
        return 0.5 - t / 12.0 +
               t * t2 * (1.0 / 720.0 + t2 * (-1.0 / 30240.0 + t2 / 1209600.0));
    }
    return 1.0 / t - 1.0 / std::expm1(t);
}

double phi_binet(double x, const SpecialConfig& cfg) {
    if (!(x > 0.0)) throw std::invalid_argument("phi_binet: requires x > 0");
    auto head_f = [x](double t) { return hfun(t) * std::exp(-t * x); };
    const auto head = quad::integrate(head_f, 0.0, 1.0, cfg.quad_opts);

    // Tail over (1, inf) mapped by t = 1 - log(s):
    //   int_1^inf h(t) e^{-tx} dt = e^{-x} int_0^1 h(1 - log s) s^{x-1} ds.
    const double scale = std::exp(-x);
    quad::QuadResult tail;
    if (x >= 1.0) {
        auto tail_f = [x](double s) {
            return hfun(1.0 - std::log(s)) * std::pow(s, x - 1.0);
        };
        tail = quad::integrate(tail_f, 0.0, 1.0, cfg.quad_opts);
    } else {
        // s^(x-1) is singular at 0; peel off an inverse square root.
        auto tail_f = [x](double s) {
            return hfun(1.0 - std::log(s)) * std::pow(s, x - 0.5);
        };
        tail = quad::integrate_sqrt_singular(tail_f, 0.0, 1.0, true, false,
                                             cfg.quad_opts);
    }
    return head.value + scale * tail.value;
}

double small_w(double x, const SpecialConfig& cfg) {
    if (!(x > 0.0)) throw std::invalid_argument("small_w: requires x > 0");
    return phi(x, cfg) - phi(x + 0.5, cfg) + std::log1p(0.5 / x) - 0.5 / x;
}

SeriesResult small_w_series(double h, int n) {
    if (!(std::abs(h) < 0.5))
        throw std::invalid_argument("small_w_series: requires |h| < 1/2");
    if (n < 1) throw std::invalid_argument("small_w_series: requires n >= 1");
    auto a = [h](int j) {
        return (2.0 * j + 5.0 + 2.0 * h) /
               ((j + 2.0) * (j + 3.0) * (j + 2.0 + 2.0 * h) * (j + 3.0 + 2.0 * h));
    };
    long double sum = 0.0L;
    for (int j = n - 1; j >= 0; --j)  // small terms first
        sum += (j % 2 == 0 ? 1.0L : -1.0L) * (long double)a(j);
    SeriesResult r;
    r.value = 2.0 * std::log((1.0 + h) / (1.0 + 2.0 * h)) +
              h * (6.0 * h + 5.0) / (2.0 * (1.0 + h) * (1.0 + 2.0 * h)) -
              2.0 * h * (double)sum;
    r.truncation_bound = std::abs(2.0 * h) * a(n);
    return r;
}

double cap_W_unchecked(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("cap_W: requires x > 0");
    const double lbeta =
        std::lgamma(x) + std::lgamma(0.5) - std::lgamma(x + 0.5);
    return std::exp(0.5 * std::log(2.0 * x) + 2.0 * x * std::log1p(0.5 / x) +
                    lbeta);
}

double cap_W(double x) {
    if (!(x >= 0.5)) throw std::invalid_argument("cap_W: requires x >= 1/2");
    return cap_W_unchecked(x);
}

double int_w(double x, const SpecialConfig& cfg) {
    if (!(x >= 0.5)) throw std::invalid_argument("int_w: requires x >= 1/2");
    if (x == 0.5) return 0.0;
    auto f = [&cfg](double y) { return small_w(y, cfg); };
    return quad::integrate(f, 0.5, x, cfg.quad_opts).value;
}

double rho(double t) { return hfun(t) + 0.5 * hfun(0.5 * t) - 0.5; }

double int_w_rep(double x, const SpecialConfig& cfg) {
    if (!(x >= 0.5)) throw std::invalid_argument("int_w_rep: requires x >= 1/2");
    if (x == 0.5) return 0.0;
    // (1/t)(e^{-t/2} - e^{-tx}) rho(t) (1 - e^{-t/2}), written with expm1 so
    // the t -> 0 limit is clean.
    auto f = [x](double t) {
        if (t == 0.0) return 0.0;
        const double d1 = -std::expm1(-t * (x - 0.5));  // 1 - e^{-t(x-1/2)}
        const double d2 = -std::expm1(-0.5 * t);        // 1 - e^{-t/2}
        return std::exp(-0.5 * t) * d1 * d2 * rho(t) / t;
    };
    return quad::integrate(f, 0.0, 160.0, cfg.quad_opts).value;
}

double rho_root() {
    return quad::bracket_root([](double t) { return rho(t); }, 2.5, 100.0,
                              1e-12);
}

double Y_of_x(double x) {
    if (!(x >= 1.0)) throw std::invalid_argument("Y_of_x: requires x >= 1");
    const double num = (x * x + 0.5 * x - 0.5) / (x * (x + 0.5));
    const double den = std::log1p((x - 0.5) / (x + 0.5));
    return num / den;
}

double hurwitz_zeta(double a, double s) {
    if (!(a > 0.0)) throw std::invalid_argument("hurwitz_zeta: requires a > 0");
    if (!(s > 1.0)) throw std::invalid_argument("hurwitz_zeta: requires s > 1");
    constexpr int N = 10000;
    long double sum = 0.0L;
    for (int p = N - 1; p >= 0; --p)
        sum += std::pow((long double)(a + p), (long double)-s);
    // Euler-Maclaurin tail at a + N.
    const long double z  = a + N;
    const long double zs = std::pow(z, (long double)-s);
    sum += z * zs / (s - 1.0L) + 0.5L * zs + s * zs / (12.0L * z) -
           s * (s + 1.0L) * (s + 2.0L) * zs / (720.0L * z * z * z);
    return (double)sum;
}

double zeta_diff(double a, double s) {
    if (!(a > 0.0)) throw std::invalid_argument("zeta_diff: requires a > 0");
    if (!(s > 1.0)) throw std::invalid_argument("zeta_diff: requires s > 1");
    long double sum = 0.0L;
    const long long cap = 1000000;
    for (long long j = 0; j < cap; ++j) {
        const long double term =
            std::pow((long double)(a + 0.5 * j + 1.0), (long double)-s) -
            std::pow((long double)(a + 0.5 * j + 0.5), (long double)-s);
        sum += (j % 2 == 0 ? term : -term);
        if (std::abs((double)term) < 1e-14 && j > 2) break;
    }
    return std::pow(a, -s) - 0.5 * std::pow(a + 0.5, -s) + 0.5 * (double)sum;
}

} // namespace isoweight::special
