// Benchmark: OpenMP pairwise distance-matrix kernels against their serial
// reference implementations. Prints one line per case with both timings,
// the speedup, and whether the outputs are bit-identical.
#include <cmath>
#include <cstdio>
#include <memory>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "dircomplex/covering.hpp"
#include "dircomplex/metrics.hpp"
#include "dircomplex/spectral.hpp"

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

bool identical(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif

    using namespace dircx;

    struct Case {
        const char* name;
        std::shared_ptr<ActionSystem> sys;
        int n;
        int k;
    };
    std::vector<Case> cases = {
        {"rotation n=384 k=32", std::make_shared<RotationSystem>(0.3819660112501051, 0.5412658773652741), 384, 32},
        {"skewshift n=256 k=16", std::make_shared<SkewShift>(2, 64), 256, 16},
        {"fullshift n=192 k=8", std::make_shared<FullShift>(2, 48), 192, 8},
    };

    Direction dir(Slope::from_rational(1, 2), 1.0);
    for (const auto& c : cases) {
        auto sample = sample_measure(*c.sys, c.n, 42);
        MetricSeq ms(*c.sys, dir, Family::mean);

        double t0 = now();
        auto serial = ms.eval_matrix_serial(sample, c.k);
        double t1 = now();
        auto parallel = ms.eval_matrix(sample, c.k);
        double t2 = now();

        double ts = t1 - t0, tp = t2 - t1;
        std::printf("metric  %-22s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  identical %s\n",
                    c.name, ts, tp, tp > 0 ? ts / tp : 0.0,
                    identical(serial, parallel) ? "yes" : "NO");
    }

    {
        auto sys = std::make_shared<RotationSystem>(0.3819660112501051, 0.5412658773652741);
        auto sample = sample_measure(*sys, 4096, 7);
        auto battery = test_battery(*sys);
        auto window = strip_window(dir, 48);
        double t0 = now();
        auto serial = orbit_distance_matrix_serial(*sys, battery[0], sample, window);
        double t1 = now();
        auto parallel = orbit_distance_matrix(*sys, battery[0], sample, window);
        double t2 = now();
        double ts = t1 - t0, tp = t2 - t1;
        std::printf("orbit   %-22s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  identical %s\n",
                    "rotation s=4096 k=48", ts, tp, tp > 0 ? ts / tp : 0.0,
                    identical(serial.d, parallel.d) ? "yes" : "NO");
    }
    return 0;
}
