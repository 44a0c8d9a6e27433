#ifndef ISOWEIGHT_SWEEP_HPP
#define ISOWEIGHT_SWEEP_HPP

#include "isoweight/params.hpp"
#include "isoweight/quad.hpp"
#include "isoweight/shapes.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace isoweight {

// The sweeps are embarrassingly parallel: every case writes one slot of a
// preallocated result vector and the reduction runs serially afterwards,
// so the OpenMP and serial paths produce identical output. The serial
// path is the reference implementation the tests compare against.

enum class Family { offcenter, tangent, annuli, perturbed };

Family family_from_string(const std::string& s);
std::string to_string(Family f);

/// Deterministic shape for (family, base seed, case index); independent of
/// the weights so the same shape set is reused across weight samples.
Shape random_shape(Family f, std::uint64_t seed, long case_index);

nlohmann::json describe(const Shape& shape);

struct ShapeSweepResult {
    Family        family = Family::offcenter;
    Weights       weights;
    std::uint64_t seed       = 0;
    long          cases_run  = 0;
    double        worst_gap  = 0.0;  // minimum deficit over the family
    long          worst_index = -1;
    std::vector<double> gaps;        // deficit per case, indexed by case
};

/// Deficit sweep of one random family at one weight sample.
ShapeSweepResult sweep_shapes(Family f, const Weights& w, long n,
                              std::uint64_t seed, bool parallel,
                              const quad::QuadOptions& opt = {});

struct GapGridSpec {
    int    n_zeta   = 30;
    int    n_beta   = 30;   // samples along each line ell_zeta
    int    n_t      = 50;
    double zeta_max = 8.0;
    double t_min    = 1.0 + 1e-4;
    double t_max    = 1e4;
};

struct GapSweepResult {
    long   cases_run  = 0;
    double worst_gap  = 0.0;
    long   worst_index = -1;
    Weights worst_weights;
    double worst_t = 0.0;
    std::vector<double> gaps;
};

/// main_gap over a (zeta, beta) parametrisation of P (including P- and the
/// near-P+ boundary, excluding the origin) crossed with a geometric grid
/// of t = b/a.
GapSweepResult sweep_main_gap(const GapGridSpec& grid, bool parallel);

/// Five fixed weight samples in P used by the default verification run.
std::vector<Weights> default_weight_samples();

} // namespace isoweight

#endif
