#include "isoweight/shapes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace isoweight {

namespace {

constexpr double PI = std::numbers::pi;

void check_weights(const Weights& w, const char* who) {
    if (!(w.alpha > -2.0) || !(w.beta > -1.0))
        throw std::invalid_argument(std::string(who) +
                                    ": requires alpha > -2 and beta > -1");
}

double pow_pos(double base, double expo) { return std::pow(base, expo); }

// |center + r e(t)| with center distance d on the positive axis, written
// as sqrt((d-r)^2 + 4 d r cos^2(t/2)) so the tangent case stays exact
// near t = pi.
double offcenter_radius(double d, double r, double t) {
    const double c = std::cos(0.5 * t);
    const double dm = d - r;
    return std::sqrt(dm * dm + 4.0 * d * r * c * c);
}

MeasurePair measure_centered_ball(const CenteredBall& s, const Weights& w) {
    if (!(s.r > 0.0))
        throw std::invalid_argument("measure: ball radius must be positive");
    MeasurePair m;
    m.volume    = 2.0 * PI * pow_pos(s.r, w.alpha + 2.0) / (w.alpha + 2.0);
    m.perimeter = 2.0 * PI * pow_pos(s.r, w.beta + 1.0);
    return m;
}

MeasurePair measure_annuli(const CenteredAnnuliUnion& s, const Weights& w) {
    const auto& a = s.radii;
    if (a.size() < 2 || a.size() % 2 != 0)
        throw std::invalid_argument("measure: annuli union needs an even "
                                    "number of radii");
    for (std::size_t h = 0; h < a.size(); ++h) {
        if (!(a[h] > 0.0) || (h > 0 && !(a[h] < a[h - 1])))
            throw std::invalid_argument(
                "measure: annuli radii must be strictly decreasing and positive");
    }
    MeasurePair m;
    for (std::size_t h = 0; h < a.size(); ++h) {
        const double sgn = (h % 2 == 0) ? 1.0 : -1.0;
        m.volume += sgn * ball_volume_fn(a[h], w);
        m.perimeter += 2.0 * PI * pow_pos(a[h], w.beta + 1.0);
    }
    return m;
}

MeasurePair measure_offcenter(const OffCenterBall& s, const Weights& w,
                              const quad::QuadOptions& opt) {
    if (!(s.r > 0.0) || !(s.d >= 0.0))
        throw std::invalid_argument("measure: off-centre ball needs r > 0, d >= 0");
    const double d = s.d, r = s.r;
    MeasurePair m;

    // Perimeter: 2 r int_0^pi |x(t)|^beta dt.
    if (d == r) {
        // Boundary passes through the origin at t = pi; |x| = 2r sin(psi/2)
        // after psi = pi - t, an integrable power singularity at psi = 0.
        auto f_smooth = [&](double psi) {
            const double rho = 2.0 * r * std::sin(0.5 * psi);
            return 2.0 * r * pow_pos(rho, w.beta) * std::sqrt(psi);
        };
        m.perimeter =
            quad::integrate_sqrt_singular(f_smooth, 0.0, PI, true, false, opt)
                .value;
    } else {
        auto f = [&](double t) {
            return 2.0 * r * pow_pos(offcenter_radius(d, r, t), w.beta);
        };
        m.perimeter = quad::integrate(f, 0.0, PI, opt).value;
    }

    // Volume by boundary flux of x |x|^alpha / (alpha+2):
    //   V = 2 r/(alpha+2) int_0^pi |x(t)|^alpha (d cos t + r) dt.
    auto g = [&](double t) {
        return pow_pos(offcenter_radius(d, r, t), w.alpha) *
               (d * std::cos(t) + r);
    };
    m.volume = 2.0 * r / (w.alpha + 2.0) * quad::integrate(g, 0.0, PI, opt).value;
    return m;
}

MeasurePair measure_polar_graph(const PolarGraph& s, const Weights& w,
                                const quad::QuadOptions& opt) {
    if (!(s.b > s.a) || !(s.a >= 0.0) || !s.theta || !s.theta_prime)
        throw std::invalid_argument("measure: invalid polar graph");
    MeasurePair m;
    auto fv = [&](double t) { return s.theta(t) * pow_pos(t, w.alpha + 1.0); };
    auto fp = [&](double t) {
        const double dp = s.theta_prime(t);
        return std::sqrt(1.0 + t * t * dp * dp) * pow_pos(t, w.beta);
    };
    m.volume    = 2.0 * quad::integrate(fv, s.a, s.b, opt).value;
    m.perimeter = 2.0 * quad::integrate(fp, s.a, s.b, opt).value;
    return m;
}

MeasurePair measure_competitor(const CompetitorE& s, const Weights& w,
                               const quad::QuadOptions& opt) {
    if (!(s.b > 0.0))
        throw std::invalid_argument("measure: competitor needs b > 0");
    const double g = w.alpha - w.beta + 1.0;
    if (!(g >= 0.5 && g < 1.0))
        throw std::invalid_argument(
            "measure: competitor requires gamma in [1/2, 1)");
    // P = 2 b^(beta+1) int_0^1 s^beta (1 - s^(2 gamma))^(-1/2) ds and
    // V = 2 b^(alpha+2)/(alpha+2) int_0^1 s^(2 gamma + beta) (...) ds.
    // Since beta >= gamma - 1 >= -1/2 on P, the left endpoint is at worst
    // an inverse square root; the right endpoint always is one.
    auto one_minus_s2g = [g](double s) {
        return -std::expm1(2.0 * g * std::log(s));
    };
    auto fp = [&](double s) {
        return pow_pos(s, w.beta + 0.5) *
               std::sqrt((1.0 - s) / one_minus_s2g(s));
    };
    auto fv = [&](double s) {
        return pow_pos(s, 2.0 * g + w.beta) *
               std::sqrt((1.0 - s) / one_minus_s2g(s));
    };
    MeasurePair m;
    m.perimeter = 2.0 * pow_pos(s.b, w.beta + 1.0) *
                  quad::integrate_sqrt_singular(fp, 0.0, 1.0, true, true, opt)
                      .value;
    m.volume = 2.0 * pow_pos(s.b, w.alpha + 2.0) / (w.alpha + 2.0) *
               quad::integrate_sqrt_singular(fv, 0.0, 1.0, false, true, opt)
                   .value;
    return m;
}

double star_radius(const FourierStar& s, double phi) {
    double v = 1.0;
    for (int k = 1; k <= 4; ++k) v += s.eps[k - 1] * std::cos(k * phi);
    return s.r0 * v;
}

double star_radius_prime(const FourierStar& s, double phi) {
    double v = 0.0;
    for (int k = 1; k <= 4; ++k) v -= k * s.eps[k - 1] * std::sin(k * phi);
    return s.r0 * v;
}

MeasurePair measure_star(const FourierStar& s, const Weights& w,
                         const quad::QuadOptions& opt) {
    if (!(s.r0 > 0.0))
        throw std::invalid_argument("measure: star needs r0 > 0");
    double esum = 0.0;
    for (double e : s.eps) esum += std::abs(e);
    if (!(esum < 1.0))
        throw std::invalid_argument("measure: star radius must stay positive");
    // Flux form of the volume: V = int r(phi)^(alpha+2)/(alpha+2) dphi;
    // arclength perimeter: P = int r^beta sqrt(r^2 + r'^2) dphi.
    auto fv = [&](double phi) {
        return pow_pos(star_radius(s, phi), w.alpha + 2.0) / (w.alpha + 2.0);
    };
    auto fp = [&](double phi) {
        const double r  = star_radius(s, phi);
        const double rp = star_radius_prime(s, phi);
        return pow_pos(r, w.beta) * std::sqrt(r * r + rp * rp);
    };
    MeasurePair m;
    m.volume    = 2.0 * quad::integrate(fv, 0.0, PI, opt).value;
    m.perimeter = 2.0 * quad::integrate(fp, 0.0, PI, opt).value;
    return m;
}

} // namespace

MeasurePair measure(const Shape& shape, const Weights& w,
                    const quad::QuadOptions& opt) {
    check_weights(w, "measure");
    return std::visit(
        [&](const auto& s) -> MeasurePair {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CenteredBall>)
                return measure_centered_ball(s, w);
            else if constexpr (std::is_same_v<T, CenteredAnnuliUnion>)
                return measure_annuli(s, w);
            else if constexpr (std::is_same_v<T, OffCenterBall>)
                return measure_offcenter(s, w, opt);
            else if constexpr (std::is_same_v<T, PolarGraph>)
                return measure_polar_graph(s, w, opt);
            else if constexpr (std::is_same_v<T, CompetitorE>)
                return measure_competitor(s, w, opt);
            else
                return measure_star(s, w, opt);
        },
        shape);
}

double iso_ratio(const MeasurePair& m, const Weights& w) {
    if (!(m.volume > 0.0))
        throw std::invalid_argument("iso_ratio: volume must be positive");
    if (!(m.perimeter > 0.0))
        throw std::invalid_argument("iso_ratio: perimeter must be positive");
    return std::exp((w.alpha + 2.0) * std::log(m.perimeter) -
                    (w.beta + 1.0) * std::log(m.volume));
}

double iso_ratio(const Shape& shape, const Weights& w,
                 const quad::QuadOptions& opt) {
    return iso_ratio(measure(shape, w, opt), w);
}

double ball_ratio(const Weights& w) {
    check_weights(w, "ball_ratio");
    const double gamma = w.alpha - w.beta + 1.0;
    return std::exp(gamma * std::log(2.0 * PI) +
                    (w.beta + 1.0) * std::log(w.alpha + 2.0));
}

double deficit(const Shape& shape, const Weights& w,
               const quad::QuadOptions& opt) {
    return iso_ratio(shape, w, opt) - ball_ratio(w);
}

double competitor_theta(double tau, double b, const Weights& w) {
    if (!(b > 0.0) || !(tau >= 0.0) || !(tau <= b))
        throw std::invalid_argument("competitor_theta: requires 0 <= tau <= b");
    const double g = w.alpha - w.beta + 1.0;
    if (!(g > 0.0 && g < 1.0))
        throw std::invalid_argument("competitor_theta: requires gamma in (0,1)");
    if (tau == 0.0) return 0.5 * PI / g;
    if (tau == b) return 0.0;
    const double ug  = std::pow(tau / b, g);
    const double u2g = ug * ug;
    const double s   = std::asin(2.0 * ug * std::sqrt(1.0 - u2g));
    return (u2g <= 0.5) ? (PI - s) / (2.0 * g) : s / (2.0 * g);
}

double desired_gap(const Weights& w) {
    const double g = w.alpha - w.beta + 1.0;
    if (!(g >= 0.5 && g < 1.0))
        throw std::invalid_argument("desired_gap: requires gamma in [1/2, 1)");
    const RegionFlags f = classify(w);
    if (!f.in_P || f.in_P_minus)
        throw std::invalid_argument("desired_gap: weights must lie in P \\ P-");
    const double x = (w.beta + 1.0) / (2.0 * g);
    const double lbeta =
        std::lgamma(x) + std::lgamma(0.5) - std::lgamma(x + 0.5);
    return std::exp(-std::log(g) + 2.0 * x * std::log1p(0.5 / x) + lbeta) -
           2.0 * PI;
}

Vec2 morgan_map(const Vec2& p, double beta) {
    if (!(beta > -1.0 && beta < 0.0))
        throw std::invalid_argument("morgan_map: requires beta in (-1, 0)");
    const double r = std::hypot(p.x, p.y);
    if (!(r > 0.0))
        throw std::invalid_argument("morgan_map: point must be nonzero");
    const double f = std::pow(r, beta) / (beta + 1.0);
    return {f * p.x, f * p.y};
}

namespace {

struct BoundaryCurve {
    std::function<Vec2(double)> point;
    std::function<Vec2(double)> tangent;  // derivative wrt parameter
    double t0 = -PI, t1 = PI;
};

BoundaryCurve boundary_curve(const Shape& shape) {
    if (const auto* b = std::get_if<CenteredBall>(&shape)) {
        const double r = b->r;
        return {[r](double t) { return Vec2{r * std::cos(t), r * std::sin(t)}; },
                [r](double t) { return Vec2{-r * std::sin(t), r * std::cos(t)}; },
                -PI, PI};
    }
    if (const auto* o = std::get_if<OffCenterBall>(&shape)) {
        const double d = o->d, r = o->r;
        return {[d, r](double t) {
                    return Vec2{d + r * std::cos(t), r * std::sin(t)};
                },
                [r](double t) { return Vec2{-r * std::sin(t), r * std::cos(t)}; },
                -PI, PI};
    }
    if (const auto* s = std::get_if<FourierStar>(&shape)) {
        const FourierStar star = *s;
        return {[star](double phi) {
                    const double r = star_radius(star, phi);
                    return Vec2{r * std::cos(phi), r * std::sin(phi)};
                },
                [star](double phi) {
                    const double r  = star_radius(star, phi);
                    const double rp = star_radius_prime(star, phi);
                    return Vec2{rp * std::cos(phi) - r * std::sin(phi),
                                rp * std::sin(phi) + r * std::cos(phi)};
                },
                -PI, PI};
    }
    throw std::invalid_argument(
        "pushforward_check: shape has no boundary parametrisation");
}

} // namespace

PushforwardCheck pushforward_check(const Shape& shape, double beta,
                                   const quad::QuadOptions& opt) {
    if (!(beta > -1.0 && beta < 0.0))
        throw std::invalid_argument("pushforward_check: requires beta in (-1, 0)");
    const Weights w{2.0 * beta, beta};
    const MeasurePair m = measure(shape, w, opt);

    const BoundaryCurve c = boundary_curve(shape);
    // dPhi_x v = (|x|^beta / (beta+1)) [v + beta <x,v> x / |x|^2].
    auto image_tangent = [&](double t) {
        const Vec2 p = c.point(t);
        const Vec2 v = c.tangent(t);
        const double r2 = p.x * p.x + p.y * p.y;
        const double r  = std::sqrt(r2);
        const double f  = std::pow(r, beta) / (beta + 1.0);
        const double dot = p.x * v.x + p.y * v.y;
        return Vec2{f * (v.x + beta * dot * p.x / r2),
                    f * (v.y + beta * dot * p.y / r2)};
    };
    auto image_point = [&](double t) {
        const Vec2 p = c.point(t);
        const double r = std::hypot(p.x, p.y);
        const double f = std::pow(r, beta) / (beta + 1.0);
        return Vec2{f * p.x, f * p.y};
    };

    const double P0 =
        quad::integrate(
            [&](double t) {
                const Vec2 dv = image_tangent(t);
                return std::hypot(dv.x, dv.y);
            },
            c.t0, c.t1, opt)
            .value;
    const double V0 =
        0.5 * quad::integrate(
                  [&](double t) {
                      const Vec2 q  = image_point(t);
                      const Vec2 dq = image_tangent(t);
                      return q.x * dq.y - q.y * dq.x;
                  },
                  c.t0, c.t1, opt)
                  .value;

    PushforwardCheck chk;
    chk.vol_residual = m.volume - (beta + 1.0) * V0;
    chk.per_slack    = m.perimeter - (beta + 1.0) * P0;
    return chk;
}

double ball_volume_fn(double t, const Weights& w) {
    check_weights(w, "ball_volume_fn");
    if (!(t >= 0.0))
        throw std::invalid_argument("ball_volume_fn: requires t >= 0");
    return 2.0 * PI * std::pow(t, w.alpha + 2.0) / (w.alpha + 2.0);
}

double ball_perimeter_of_volume(double v, const Weights& w) {
    check_weights(w, "ball_perimeter_of_volume");
    if (!(v >= 0.0))
        throw std::invalid_argument("ball_perimeter_of_volume: requires v >= 0");
    if (v == 0.0) return 0.0;
    const double gamma = w.alpha - w.beta + 1.0;
    const double y     = w.alpha + 2.0;
    const double base =
        gamma * std::log(2.0 * PI) + (w.beta + 1.0) * std::log(y);
    return std::exp(base / y + (w.beta + 1.0) / y * std::log(v));
}

double annuli_vs_ball(const std::vector<double>& radii, const Weights& w) {
    check_weights(w, "annuli_vs_ball");
    if (radii.empty())
        throw std::invalid_argument("annuli_vs_ball: empty radii list");
    for (std::size_t h = 0; h < radii.size(); ++h) {
        if (!(radii[h] > 0.0) || (h > 0 && !(radii[h] < radii[h - 1])))
            throw std::invalid_argument(
                "annuli_vs_ball: radii must be strictly decreasing and positive");
    }
    double sumJ = 0.0, vol = 0.0;
    for (std::size_t h = 0; h < radii.size(); ++h) {
        const double t = ball_volume_fn(radii[h], w);
        sumJ += ball_perimeter_of_volume(t, w);
        vol += (h % 2 == 0 ? t : -t);
    }
    if (!(vol > 0.0))
        throw std::invalid_argument("annuli_vs_ball: union has no volume");
    return sumJ - ball_perimeter_of_volume(vol, w);
}

} // namespace isoweight
