#include "isoweight/sweep.hpp"

#include "isoweight/inequalities.hpp"
#include "isoweight/rng.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace isoweight {

namespace {

// Exceptions must not cross the OpenMP region, so the first failure is
// captured and rethrown after the loop joins.
template <typename Body>
void for_each_case(long n, bool parallel, const Body& body) {
    std::exception_ptr failure;
    auto guarded = [&](long i) {
        try {
            body(i);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(isoweight_sweep_failure)
#endif
            {
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < n; ++i) guarded(i);
        if (failure) std::rethrow_exception(failure);
        return;
#endif
    }
    for (long i = 0; i < n; ++i) guarded(i);
    if (failure) std::rethrow_exception(failure);
}

constexpr std::uint64_t family_tag(Family f) {
    switch (f) {
        case Family::offcenter: return 1;
        case Family::tangent:   return 2;
        case Family::annuli:    return 3;
        case Family::perturbed: return 4;
    }
    return 0;
}

} // namespace

Family family_from_string(const std::string& s) {
    if (s == "offcenter") return Family::offcenter;
    if (s == "tangent")   return Family::tangent;
    if (s == "annuli")    return Family::annuli;
    if (s == "perturbed") return Family::perturbed;
    throw std::invalid_argument("unknown family: " + s);
}

std::string to_string(Family f) {
    switch (f) {
        case Family::offcenter: return "offcenter";
        case Family::tangent:   return "tangent";
        case Family::annuli:    return "annuli";
        case Family::perturbed: return "perturbed";
    }
    return "?";
}

Shape random_shape(Family f, std::uint64_t seed, long case_index) {
    rng::Xoshiro256ss gen(
        rng::derive_seed(seed, {family_tag(f), (std::uint64_t)case_index}));
    switch (f) {
        case Family::offcenter: {
            const double r = gen.uniform(0.5, 2.0);
            const double d = r * gen.uniform(0.0, 0.95);
            return OffCenterBall{d, r};
        }
        case Family::tangent: {
            const double r = gen.uniform(0.5, 2.0);
            return OffCenterBall{r, r};
        }
        case Family::annuli: {
            const int pairs = 1 + (int)gen.below(3);
            std::vector<double> radii;
            double r = gen.uniform(1.0, 3.0);
            for (int k = 0; k < 2 * pairs; ++k) {
                radii.push_back(r);
                r *= gen.uniform(0.3, 0.9);
            }
            return CenteredAnnuliUnion{std::move(radii)};
        }
        case Family::perturbed: {
            FourierStar s;
            s.r0 = gen.uniform(0.5, 2.0);
            for (int k = 0; k < 4; ++k) s.eps[k] = gen.uniform(-0.2, 0.2);
            return s;
        }
    }
    throw std::logic_error("random_shape: bad family");
}

nlohmann::json describe(const Shape& shape) {
    nlohmann::json j;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CenteredBall>) {
                j["shape"] = "centered_ball";
                j["r"]     = s.r;
            } else if constexpr (std::is_same_v<T, CenteredAnnuliUnion>) {
                j["shape"] = "annuli_union";
                j["radii"] = s.radii;
            } else if constexpr (std::is_same_v<T, OffCenterBall>) {
                j["shape"] = "offcenter_ball";
                j["d"]     = s.d;
                j["r"]     = s.r;
            } else if constexpr (std::is_same_v<T, PolarGraph>) {
                j["shape"] = "polar_graph";
                j["a"]     = s.a;
                j["b"]     = s.b;
            } else if constexpr (std::is_same_v<T, CompetitorE>) {
                j["shape"] = "competitor";
                j["b"]     = s.b;
            } else {
                j["shape"] = "fourier_star";
                j["r0"]    = s.r0;
                j["eps"]   = s.eps;
            }
        },
        shape);
    return j;
}

ShapeSweepResult sweep_shapes(Family f, const Weights& w, long n,
                              std::uint64_t seed, bool parallel,
                              const quad::QuadOptions& opt) {
    if (n < 1) throw std::invalid_argument("sweep_shapes: requires n >= 1");
    ShapeSweepResult res;
    res.family  = f;
    res.weights = w;
    res.seed    = seed;
    res.cases_run = n;
    res.gaps.assign(n, 0.0);

    for_each_case(n, parallel, [&](long i) {
        const Shape shape = random_shape(f, seed, i);
        res.gaps[i] = deficit(shape, w, opt);
    });

    res.worst_gap   = res.gaps[0];
    res.worst_index = 0;
    for (long i = 1; i < n; ++i) {
        if (res.gaps[i] < res.worst_gap) {
            res.worst_gap   = res.gaps[i];
            res.worst_index = i;
        }
    }
    return res;
}

GapSweepResult sweep_main_gap(const GapGridSpec& grid, bool parallel) {
    const long n = (long)grid.n_zeta * grid.n_beta * grid.n_t;
    GapSweepResult res;
    res.cases_run = n;
    res.gaps.assign(n, 0.0);

    auto weights_at = [&grid](int iz, int is) {
        const double zeta =
            grid.n_zeta == 1
                ? 1.0
                : 1.0 + (grid.zeta_max - 1.0) * iz / (grid.n_zeta - 1.0);
        double s = grid.n_beta == 1
                       ? 1.0
                       : 0.05 + 0.95 * is / (grid.n_beta - 1.0);
        // (zeta, s) = (1, 1) is the origin where the gap vanishes
        // identically; step just inside.
        if (zeta == 1.0 && s == 1.0) s = 0.999;
        const double beta  = -1.0 + s * std::sqrt(zeta);
        const double alpha = (1.0 + 1.0 / zeta) * beta + 1.0 / zeta - 1.0;
        return Weights{alpha, beta};
    };
    auto t_at = [&grid](int it) {
        const double f = grid.n_t == 1 ? 0.0 : it / (grid.n_t - 1.0);
        return grid.t_min * std::pow(grid.t_max / grid.t_min, f);
    };

    for_each_case(n, parallel, [&](long i) {
        const int it = (int)(i % grid.n_t);
        const int is = (int)((i / grid.n_t) % grid.n_beta);
        const int iz = (int)(i / ((long)grid.n_t * grid.n_beta));
        res.gaps[i] = main_gap_unchecked(weights_at(iz, is), 1.0, t_at(it));
    });

    res.worst_gap   = res.gaps[0];
    res.worst_index = 0;
    for (long i = 1; i < n; ++i) {
        if (res.gaps[i] < res.worst_gap) {
            res.worst_gap   = res.gaps[i];
            res.worst_index = i;
        }
    }
    const long wi = res.worst_index;
    res.worst_weights = weights_at((int)(wi / ((long)grid.n_t * grid.n_beta)),
                                   (int)((wi / grid.n_t) % grid.n_beta));
    res.worst_t = t_at((int)(wi % grid.n_t));
    return res;
}

std::vector<Weights> default_weight_samples() {
    // Five points of P: the origin, a generic interior point, a P- point,
    // a beta < 0 interior point and a point near the line alpha = 2 beta.
    return {{0.0, 0.0},
            {0.1, 0.5},
            {-1.0, -0.5},
            {-0.5, 0.1},
            {0.05, 0.45}};
}

} // namespace isoweight
