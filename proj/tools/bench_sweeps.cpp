// Times the OpenMP sweep kernels against the serial reference and checks
// that both produce identical results.

#include "isoweight/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace isoweight;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

template <typename Run>
bool bench_one(const char* name, const Run& run) {
    auto t0 = std::chrono::steady_clock::now();
    auto serial = run(false);
    const double ts = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto parallel = run(true);
    const double tp = ms_since(t0);

    const bool identical = serial.gaps == parallel.gaps;
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx   %s\n", name, ts, tp,
                ts / tp, identical ? "identical" : "MISMATCH");
    return identical;
}

} // namespace

int main(int argc, char** argv) {
    long samples = 500;
    if (argc > 1) samples = std::stol(argv[1]);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("sweep benchmark, %d thread(s), %ld shape samples\n", threads,
                samples);
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel",
                "speedup");

    bool ok = true;

    GapGridSpec grid;
    ok &= bench_one("main-gap grid 30x30x50", [&](bool par) {
        return sweep_main_gap(grid, par);
    });

    const Weights w{0.1, 0.5};
    ok &= bench_one("shapes offcenter", [&](bool par) {
        return sweep_shapes(Family::offcenter, w, samples, 0, par);
    });
    ok &= bench_one("shapes tangent", [&](bool par) {
        return sweep_shapes(Family::tangent, w, samples, 0, par);
    });
    ok &= bench_one("shapes perturbed", [&](bool par) {
        return sweep_shapes(Family::perturbed, w, samples, 0, par);
    });
    ok &= bench_one("shapes annuli", [&](bool par) {
        return sweep_shapes(Family::annuli, w, samples, 0, par);
    });

    return ok ? 0 : 1;
}
