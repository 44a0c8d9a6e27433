// Command-line front end: classification queries, inequality gap checks,
// angle and distribution-function evaluations, special-function checks,
// competitor comparisons, randomized isoperimetric verification sweeps and
// figure-data emission.
//
// Exit codes: 0 all checks passed; 1 a verified violation was found;
// 2 usage or input error; 3 numerical failure (quadrature non-convergence).

#include <CLI11.hpp>
#include <json.hpp>

#include "isoweight/angles.hpp"
#include "isoweight/closedform.hpp"
#include "isoweight/inequalities.hpp"
#include "isoweight/params.hpp"
#include "isoweight/report.hpp"
#include "isoweight/shapes.hpp"
#include "isoweight/special.hpp"
#include "isoweight/sweep.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

using namespace isoweight;
using nlohmann::json;

namespace {

constexpr double PI = std::numbers::pi;

int g_exit = 0;

void flag_violation() { g_exit = std::max(g_exit, 1); }

void emit(const json& doc, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

BoundaryData parse_eta(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--eta expects the form '<+-1>,<+-1>'");
    const int e1 = std::stoi(s.substr(0, comma));
    const int e2 = std::stoi(s.substr(comma + 1));
    return BoundaryData{e1, e2};
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
    double alpha = 0, beta = 0, tol = 1e-12;
    bool json_out = false;
};

void run_classify(const ClassifyArgs& a) {
    const Weights w{a.alpha, a.beta};
    const auto d = derive(w);
    const auto f = classify(w, a.tol);
    const auto s = standing_assumptions(w);
    const auto h = hyperbola_coords(w);

    json j;
    j["alpha"] = w.alpha;
    j["beta"]  = w.beta;
    j["gamma"] = d.gamma;
    if (d.zeta) j["zeta"] = *d.zeta;
    if (d.x) j["x"] = *d.x;
    j["in_P"]       = f.in_P;
    j["in_P_plus"]  = f.in_P_plus;
    j["in_P_minus"] = f.in_P_minus;
    j["in_Q"]       = f.in_Q;
    j["assumptions"] = {{"A1", s.a1}, {"A2", s.a2}, {"A3", s.a3}, {"A4", s.a4}};
    j["hyperbola"]   = {{"X", h.X}, {"Y", h.Y}};

    std::ostringstream os;
    os << "(alpha, beta) = (" << w.alpha << ", " << w.beta << ")\n"
       << "gamma = " << d.gamma;
    if (d.zeta) os << "  zeta = " << *d.zeta << "  x = " << *d.x;
    os << "\n"
       << "in_P = " << yesno(f.in_P) << "  in_P+ = " << yesno(f.in_P_plus)
       << "  in_P- = " << yesno(f.in_P_minus) << "  in_Q = " << yesno(f.in_Q)
       << "\n"
       << "assumptions: A1 = " << yesno(s.a1) << "  A2 = " << yesno(s.a2)
       << "  A3 = " << yesno(s.a3) << "  A4 = " << yesno(s.a4) << "\n"
       << "hyperbola coordinates: X = " << h.X << "  Y = " << h.Y << "\n";
    emit(j, a.json_out, os.str());
}

// --------------------------------------------------------------------- gap

struct GapArgs {
    std::string kind;
    double alpha = 0, beta = 0;
    double a = 1.0, b = 2.0, t = 0.0;
    double x = 1.0, lam = 1.0;
    bool sweep    = false;
    int grid      = 30;
    int t_points  = 200;
    bool serial   = false;
    bool force    = false;
    bool json_out = false;
};

void run_gap_sweep(const GapArgs& g) {
    if (g.kind != "main")
        throw std::invalid_argument("gap: --sweep supports the main kind");
    GapGridSpec spec;
    spec.n_zeta = g.grid;
    spec.n_beta = g.grid;
    spec.n_t    = g.t_points;
    auto res = sweep_main_gap(spec, !g.serial);
    const bool passed = res.worst_gap > 0.0;
    if (!passed) flag_violation();

    VerificationReport rep;
    rep.kind      = "gap/main-sweep";
    rep.params    = {{"n_zeta", spec.n_zeta}, {"n_beta", spec.n_beta},
                     {"n_t", spec.n_t}, {"t_min", spec.t_min},
                     {"t_max", spec.t_max}, {"zeta_max", spec.zeta_max}};
    rep.cases_run = res.cases_run;
    rep.worst_gap = res.worst_gap;
    rep.worst_location = {{"alpha", res.worst_weights.alpha},
                          {"beta", res.worst_weights.beta},
                          {"t", res.worst_t}};
    rep.passed     = passed;
    rep.tolerances = {{"strict_positivity", 0.0}};
    rep.timestamp  = iso_timestamp_now();
    emit(to_json(rep), g.json_out, render_text(rep));
}

void run_gap(const GapArgs& g) {
    if (g.sweep) {
        run_gap_sweep(g);
        return;
    }
    double lo = g.a, hi = g.b;
    if (g.t > 0.0) { lo = 1.0; hi = g.t; }
    const Weights w{g.alpha, g.beta};

    double gap = 0.0, tol = 1e-11;
    json extra;
    if (g.kind == "main") {
        gap = g.force ? main_gap_unchecked(w, lo, hi) : main_gap(w, lo, hi);
    } else if (g.kind == "coth") {
        gap = endpoint_coth_gap(w, lo, hi);
    } else if (g.kind == "mhat") {
        gap = mhat_gap(w, lo, hi);
        tol = 0.0;  // strict on P \ P-
    } else if (g.kind == "hyperbolic") {
        gap = hyperbolic_gap(g.x, g.lam);
        tol = 1e-12;
        extra = {{"x", g.x}, {"lambda", g.lam}};
    } else {
        throw std::invalid_argument("gap: unknown kind " + g.kind);
    }
    const bool passed = gap >= -tol;
    if (!passed) flag_violation();

    json j;
    j["kind"]   = "gap/" + g.kind;
    j["gap"]    = gap;
    j["passed"] = passed;
    j["tolerance"] = tol;
    if (g.kind == "hyperbolic") {
        j["params"] = extra;
    } else {
        j["params"] = {{"alpha", g.alpha}, {"beta", g.beta}, {"a", lo}, {"b", hi}};
    }
    std::ostringstream os;
    os << "gap " << g.kind << " = " << gap << "  ("
       << (passed ? "passed" : "VIOLATION") << ")\n";
    emit(j, g.json_out, os.str());
}

// ------------------------------------------------------------------- angle

struct AngleArgs {
    std::string kind;
    double alpha = 0, beta = 0, a = 1.0, b = 2.0;
    std::string eta = "-1,1";
    bool json_out = false;
};

void run_angle(const AngleArgs& an) {
    const Weights w{an.alpha, an.beta};
    json j;
    std::ostringstream os;
    if (an.kind == "linear") {
        auto sol = solve_linear(w, {an.a, an.b}, parse_eta(an.eta));
        const double v = angle_linear(sol);
        j = {{"kind", "angle/linear"},
             {"value", v},
             {"lambda", sol.lambda},
             {"params",
              {{"alpha", an.alpha}, {"beta", an.beta}, {"a", an.a},
               {"b", an.b}, {"eta", an.eta}}}};
        os << "angle linear = " << v << "  (lambda = " << sol.lambda << ")\n";
    } else if (an.kind == "riccati") {
        auto sol = solve_riccati(w, {an.a, an.b});
        const double v = angle_riccati(sol);
        const bool passed = v >= PI - 1e-8;
        if (!passed) flag_violation();
        j = {{"kind", "angle/riccati"},
             {"value", v},
             {"excess_over_pi", v - PI},
             {"passed", passed},
             {"params",
              {{"alpha", an.alpha}, {"beta", an.beta}, {"a", an.a}, {"b", an.b}}}};
        os << "angle riccati = " << v << "  excess over pi = " << v - PI
           << (passed ? "" : "  VIOLATION") << "\n";
    } else if (an.kind == "origin") {
        auto sol = solve_linear_origin(w, an.b);
        const double v        = angle_origin(sol);
        const double expected = PI / (2.0 * sol.gamma);
        const bool passed     = std::abs(v - expected) <= 1e-8;
        if (!passed) flag_violation();
        j = {{"kind", "angle/origin"},
             {"value", v},
             {"expected", expected},
             {"passed", passed},
             {"params", {{"alpha", an.alpha}, {"beta", an.beta}, {"b", an.b}}}};
        os << "angle origin = " << v << "  expected pi/(2 gamma) = " << expected
           << (passed ? "" : "  VIOLATION") << "\n";
    } else {
        throw std::invalid_argument("angle: unknown kind " + an.kind);
    }
    emit(j, an.json_out, os.str());
}

// -------------------------------------------------------------------- dist

struct DistArgs {
    std::string kind;
    double alpha = 0.1, beta = 0.5, a = 1.0, b = 2.0, t = 0.5;
    int samples   = 10;
    bool json_out = false;
};

void run_dist(const DistArgs& d) {
    const Weights w{d.alpha, d.beta};
    json j;
    std::ostringstream os;
    if (d.kind == "mu-u") {
        auto sol = solve_linear(w, {d.a, d.b}, {-1, 1});
        const double up = mu_u(sol, d.t), un = mu_neg_u(sol, d.t);
        j = {{"kind", "dist/mu-u"}, {"mu_u", up}, {"mu_neg_u", un},
             {"t", d.t},
             {"params", {{"alpha", d.alpha}, {"beta", d.beta}, {"a", d.a}, {"b", d.b}}}};
        os << "mu_u(" << d.t << ") = " << up << "  mu_{-u} = " << un << "\n";
    } else if (d.kind == "mu-w") {
        auto sol = solve_riccati(w, {d.a, d.b});
        const double mw  = mu_w(sol, d.t);
        const double mw0 = mu_w0(d.a, d.b, d.t);
        j = {{"kind", "dist/mu-w"}, {"mu_w", mw}, {"mu_w0", mw0},
             {"t", d.t}, {"max_w", sol.max_val},
             {"params", {{"alpha", d.alpha}, {"beta", d.beta}, {"a", d.a}, {"b", d.b}}}};
        os << "mu_w(" << d.t << ") = " << mw << "  mu_w0 = " << mw0 << "\n";
    } else if (d.kind == "compare") {
        auto f = classify(w);
        if (!f.in_P || f.in_P_minus)
            throw std::invalid_argument(
                "dist compare: strict comparisons hold on P \\ P- only");
        auto lin = solve_linear(w, {d.a, d.b}, {-1, 1});
        auto ric = solve_riccati(w, {d.a, d.b});
        double worst_u = 1e300, worst_w = 1e300;
        for (int k = 1; k <= d.samples; ++k) {
            const double t = k / (d.samples + 1.0);
            worst_u = std::min(worst_u, mu_u(lin, t) - mu_neg_u(lin, t));
            const double tw = 1.0 + t * (ric.max_val - 1.0);
            worst_w = std::min(worst_w, mu_w0(d.a, d.b, tw) - mu_w(ric, tw));
        }
        const bool passed = worst_u > 0.0 && worst_w > 0.0;
        if (!passed) flag_violation();
        j = {{"kind", "dist/compare"},
             {"worst_margin_mu_u_minus_mu_neg_u", worst_u},
             {"worst_margin_mu_w0_minus_mu_w", worst_w},
             {"samples", d.samples},
             {"passed", passed},
             {"params", {{"alpha", d.alpha}, {"beta", d.beta}, {"a", d.a}, {"b", d.b}}}};
        os << "dist compare: min[mu_u - mu_{-u}] = " << worst_u
           << "  min[mu_w0 - mu_w] = " << worst_w << "  ("
           << (passed ? "passed" : "VIOLATION") << ")\n";
    } else {
        throw std::invalid_argument("dist: unknown kind " + d.kind);
    }
    emit(j, d.json_out, os.str());
}

// ----------------------------------------------------------------- special

struct SpecialArgs {
    std::string kind;
    double x = 1.0, a = 1.0, s = 2.0;
    bool json_out = false;
};

void run_special(const SpecialArgs& sp) {
    namespace spf = isoweight::special;
    json j;
    std::ostringstream os;
    if (sp.kind == "W") {
        const double v   = spf::cap_W(sp.x);
        const double gap = v - 2.0 * PI;
        const bool passed = gap >= -1e-10;
        if (!passed) flag_violation();
        j = {{"kind", "special/W"}, {"x", sp.x}, {"value", v},
             {"gap_over_2pi", gap}, {"passed", passed}};
        os << "W(" << sp.x << ") = " << v << "  gap over 2 pi = " << gap
           << "  (" << (passed ? "passed" : "VIOLATION") << ")\n";
    } else if (sp.kind == "w") {
        const double v = spf::small_w(sp.x);
        j = {{"kind", "special/w"}, {"x", sp.x}, {"value", v}};
        os << "w(" << sp.x << ") = " << v << "\n";
    } else if (sp.kind == "phi") {
        const double v  = spf::phi(sp.x);
        const double vb = spf::phi_binet(sp.x);
        const bool passed = std::abs(v - vb) <= 1e-8;
        if (!passed) flag_violation();
        j = {{"kind", "special/phi"}, {"x", sp.x}, {"value", v},
             {"binet", vb}, {"passed", passed}};
        os << "phi(" << sp.x << ") = " << v << "  binet route = " << vb << "\n";
    } else if (sp.kind == "rho") {
        const double v = spf::rho(sp.x);
        j = {{"kind", "special/rho"}, {"t", sp.x}, {"value", v},
             {"root", spf::rho_root()}};
        os << "rho(" << sp.x << ") = " << v << "  (root at "
           << spf::rho_root() << ")\n";
    } else if (sp.kind == "Y") {
        const double v = spf::Y_of_x(sp.x);
        const bool passed = v <= 2.5;
        if (!passed) flag_violation();
        j = {{"kind", "special/Y"}, {"x", sp.x}, {"value", v},
             {"passed", passed}};
        os << "Y(" << sp.x << ") = " << v << "  ("
           << (passed ? "<= 5/2" : "VIOLATION") << ")\n";
    } else if (sp.kind == "zeta-diff") {
        const double direct =
            spf::hurwitz_zeta(sp.a, sp.s) - spf::hurwitz_zeta(sp.a + 0.5, sp.s);
        const double series = spf::zeta_diff(sp.a, sp.s);
        const bool passed = std::abs(direct - series) <= 1e-10;
        if (!passed) flag_violation();
        j = {{"kind", "special/zeta-diff"}, {"a", sp.a}, {"s", sp.s},
             {"direct", direct}, {"series", series}, {"passed", passed}};
        os << "zeta(" << sp.a << "," << sp.s << ") - zeta(" << sp.a + 0.5
           << "," << sp.s << ") = " << direct << "  series route = " << series
           << "\n";
    } else {
        throw std::invalid_argument("special: unknown kind " + sp.kind);
    }
    emit(j, sp.json_out, os.str());
}

// -------------------------------------------------------------- competitor

struct CompetitorArgs {
    double alpha = 0.1, beta = 0.4, b = 1.0;
    bool json_out = false;
};

void run_competitor(const CompetitorArgs& c) {
    const Weights w{c.alpha, c.beta};
    const auto m     = measure(CompetitorE{c.b}, w);
    const double re  = iso_ratio(m, w);
    const double rb  = ball_ratio(w);
    const double gap = desired_gap(w);
    const bool passed = gap > 0.0 && re > rb;
    if (!passed) flag_violation();

    json j = {{"kind", "competitor"},
              {"perimeter", m.perimeter},
              {"volume", m.volume},
              {"iso_ratio", re},
              {"ball_ratio", rb},
              {"normalized_excess", gap},
              {"passed", passed},
              {"params", {{"alpha", c.alpha}, {"beta", c.beta}, {"b", c.b}}}};
    std::ostringstream os;
    os << "competitor at (" << c.alpha << ", " << c.beta << "), b = " << c.b
       << "\n"
       << "  P = " << m.perimeter << "  V = " << m.volume << "\n"
       << "  ratio = " << re << "  ball ratio = " << rb
       << "  normalized excess = " << gap << "  ("
       << (passed ? "passed" : "VIOLATION") << ")\n";
    emit(j, c.json_out, os.str());
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
    std::string family = "all";
    std::vector<double> alpha, beta;
    long samples = 500;
    std::uint64_t seed = 0;
    double tol = 1e-7;
    std::string out;
    bool serial   = false;
    bool json_out = false;
};

void run_verify(const VerifyArgs& v) {
    std::vector<Family> families;
    if (v.family == "all") {
        families = {Family::offcenter, Family::tangent, Family::annuli,
                    Family::perturbed};
    } else {
        families = {family_from_string(v.family)};
    }
    std::vector<Weights> weights;
    if (v.alpha.empty() != v.beta.empty() || v.alpha.size() != v.beta.size())
        throw std::invalid_argument("verify: --alpha and --beta must pair up");
    if (v.alpha.empty()) {
        weights = default_weight_samples();
    } else {
        for (std::size_t i = 0; i < v.alpha.size(); ++i)
            weights.push_back({v.alpha[i], v.beta[i]});
    }

    json reports = json::array();
    bool all_passed = true;
    std::ostringstream os;
    for (Family f : families) {
        for (const Weights& w : weights) {
            auto r = sweep_shapes(f, w, v.samples, v.seed, !v.serial);
            VerificationReport rep;
            rep.kind = "verify/" + to_string(f);
            rep.params = {{"alpha", w.alpha}, {"beta", w.beta},
                          {"samples", v.samples}};
            rep.cases_run = r.cases_run;
            rep.worst_gap = r.worst_gap;
            rep.worst_location =
                describe(random_shape(f, v.seed, r.worst_index));
            rep.worst_location["case_index"] = r.worst_index;
            rep.passed     = r.worst_gap >= -v.tol;
            rep.seed       = v.seed;
            rep.tolerances = {{"deficit", v.tol},
                              {"quad_rel", 1e-10},
                              {"quad_abs", 1e-12}};
            rep.timestamp  = iso_timestamp_now();
            all_passed     = all_passed && rep.passed;
            reports.push_back(to_json(rep));
            os << render_text(rep);
        }
    }
    if (!all_passed) flag_violation();
    json doc = {{"command", "verify"}, {"passed", all_passed},
                {"reports", reports}};
    if (!v.out.empty()) {
        std::ofstream file(v.out);
        if (!file) throw std::invalid_argument("verify: cannot open " + v.out);
        file << doc.dump(2) << "\n";
    }
    emit(doc, v.json_out, os.str());
}

// ------------------------------------------------------------------ figure

struct FigureArgs {
    std::string kind;
    std::string out;
    int grid = 400;
};

void run_figure(const FigureArgs& f) {
    std::ofstream os(f.out);
    if (!os) throw std::invalid_argument("figure: cannot open " + f.out);
    os.precision(12);
    if (f.kind == "region") {
        os << "curve,alpha,beta\n";
        for (int i = 0; i <= f.grid; ++i) {
            const double beta = -1.0 + 4.0 * i / f.grid;
            os << "alpha_eq_2beta," << 2.0 * beta << "," << beta << "\n";
        }
        for (int i = 0; i <= f.grid; ++i) {
            const double beta = -1.0 + 4.0 * i / f.grid;
            os << "gamma_eq_0," << beta - 1.0 << "," << beta << "\n";
        }
        for (int i = 0; i <= f.grid; ++i) {
            const double beta = 3.0 * i / f.grid;
            os << "curve_P_plus," << beta * beta / (beta + 1.0) << "," << beta
               << "\n";
        }
    } else if (f.kind == "w-graph") {
        os << "x,w\n";
        for (int i = 0; i <= f.grid; ++i) {
            const double x = 0.5 + (20.0 - 0.5) * i / f.grid;
            os << x << "," << special::small_w(x) << "\n";
        }
    } else if (f.kind == "competitor") {
        const Weights w{-0.5, 0.0};  // gamma = 1/2
        const double b = 1.0;
        os << "tau,theta,x,y\n";
        for (int i = 0; i <= f.grid; ++i) {
            const double tau = b - b * i / f.grid;  // upper branch, b -> 0
            const double th  = competitor_theta(tau, b, w);
            os << tau << "," << th << "," << tau * std::cos(th) << ","
               << tau * std::sin(th) << "\n";
        }
        for (int i = 1; i <= f.grid; ++i) {
            const double tau = b * i / f.grid;  // lower branch, 0 -> b
            const double th  = -competitor_theta(tau, b, w);
            os << tau << "," << th << "," << tau * std::cos(th) << ","
               << tau * std::sin(th) << "\n";
        }
    } else if (f.kind == "hyperbola") {
        os << "X,Y\n";
        for (int i = 0; i <= f.grid; ++i) {
            const double X = 1.0 + 4.0 * i / f.grid;
            os << X << "," << std::sqrt(X * X - 1.0) << "\n";
        }
    } else {
        throw std::invalid_argument("figure: unknown kind " + f.kind);
    }
    std::cout << "wrote " << f.out << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "isoweight - numerical checks for planar isoperimetry with radial "
        "power weights |x|^alpha (volume) and |x|^beta (perimeter).\n"
        "Defaults: verification sweeps use seed 0, 500 samples per family, "
        "deficit tolerance 1e-7; quadrature runs at rel 1e-10 / abs 1e-12."};
    app.set_config("--config", "", "key=value config file (flags override)");
    app.require_subcommand(1);

    ClassifyArgs ca;
    auto* c = app.add_subcommand("classify", "parameter region membership");
    c->add_option("--alpha", ca.alpha)->required();
    c->add_option("--beta", ca.beta)->required();
    c->add_option("--tol", ca.tol, "boundary-curve tolerance");
    c->add_flag("--json", ca.json_out);
    c->callback([&ca] { run_classify(ca); });

    GapArgs ga;
    auto* g = app.add_subcommand("gap", "algebraic inequality gaps");
    g->add_option("kind", ga.kind, "main|hyperbolic|mhat|coth")->required();
    g->add_option("--alpha", ga.alpha);
    g->add_option("--beta", ga.beta);
    g->add_option("--a", ga.a);
    g->add_option("--b", ga.b);
    g->add_option("--t", ga.t, "normalized b/a (overrides --a/--b)");
    g->add_option("--x", ga.x, "hyperbolic: x = beta + 1");
    g->add_option("--lam", ga.lam, "hyperbolic: lambda = log t");
    g->add_flag("--sweep", ga.sweep,
                "main: sweep a (zeta, beta) grid of P against a t grid");
    g->add_option("--grid", ga.grid, "sweep: points per region axis");
    g->add_option("--samples", ga.t_points, "sweep: points on the t grid");
    g->add_flag("--serial", ga.serial, "sweep: disable the parallel path");
    g->add_flag("--force", ga.force, "evaluate outside P as well");
    g->add_flag("--json", ga.json_out);
    g->callback([&ga] { run_gap(ga); });

    AngleArgs aa;
    auto* an = app.add_subcommand("angle", "angle integrals");
    an->add_option("kind", aa.kind, "linear|riccati|origin")->required();
    an->add_option("--alpha", aa.alpha);
    an->add_option("--beta", aa.beta);
    an->add_option("--a", aa.a);
    an->add_option("--b", aa.b);
    an->add_option("--eta", aa.eta, "boundary data, e.g. -1,1");
    an->add_flag("--json", aa.json_out);
    an->callback([&aa] { run_angle(aa); });

    DistArgs da;
    auto* di = app.add_subcommand("dist", "distribution functions");
    di->add_option("kind", da.kind, "mu-u|mu-w|compare")->required();
    di->add_option("--alpha", da.alpha);
    di->add_option("--beta", da.beta);
    di->add_option("--a", da.a);
    di->add_option("--b", da.b);
    di->add_option("--t", da.t, "threshold");
    di->add_option("--samples", da.samples, "thresholds for compare");
    di->add_flag("--json", da.json_out);
    di->callback([&da] { run_dist(da); });

    SpecialArgs sa;
    auto* sp = app.add_subcommand("special", "special-function checks");
    sp->add_option("kind", sa.kind, "W|w|phi|rho|Y|zeta-diff")->required();
    sp->add_option("--x", sa.x);
    sp->add_option("--a", sa.a, "zeta-diff: first argument");
    sp->add_option("--s", sa.s, "zeta-diff: exponent");
    sp->add_flag("--json", sa.json_out);
    sp->callback([&sa] { run_special(sa); });

    CompetitorArgs cma;
    auto* cm = app.add_subcommand("competitor",
                                  "competitor set vs centred ball");
    cm->add_option("--alpha", cma.alpha);
    cm->add_option("--beta", cma.beta);
    cm->add_option("--b", cma.b);
    cm->add_flag("--json", cma.json_out);
    cm->callback([&cma] { run_competitor(cma); });

    VerifyArgs va;
    auto* ve = app.add_subcommand("verify",
                                  "randomized isoperimetric verification");
    ve->add_option("--family", va.family, "offcenter|tangent|annuli|perturbed|all");
    ve->add_option("--alpha", va.alpha, "weight sample(s); default grid in P");
    ve->add_option("--beta", va.beta);
    ve->add_option("--samples", va.samples);
    ve->add_option("--seed", va.seed);
    ve->add_option("--tol", va.tol, "deficit tolerance");
    ve->add_option("--out", va.out, "also write the JSON document here");
    ve->add_flag("--serial", va.serial, "disable the parallel sweep path");
    ve->add_flag("--json", va.json_out);
    ve->callback([&va] { run_verify(va); });

    FigureArgs fa;
    auto* fi = app.add_subcommand("figure", "emit CSV figure data");
    fi->add_option("kind", fa.kind, "region|w-graph|competitor|hyperbola")
        ->required();
    fi->add_option("--out", fa.out)->required();
    fi->add_option("--grid", fa.grid, "samples per curve");
    fi->callback([&fa] { run_figure(fa); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const quad::QuadFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
