#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dircomplex/experiment.hpp"

namespace {

int resolve_workers(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("DIRCOMPLEX_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0; // runtime default
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"directional complexity experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    bool seed_set = false;
    int workers = 0;
    long long exact_cap = -1;

    app.add_option("--config", config_path, "experiment config (JSON)")->required();
    app.add_option("--out", out_dir, "output directory");
    app.add_option_function<std::uint64_t>(
           "--seed", [&](std::uint64_t v) { seed = v; seed_set = true; },
           "root RNG seed (overrides config)");
    app.add_option("--workers", workers, "thread count (default: DIRCOMPLEX_WORKERS or runtime)");
    app.add_option("--exact-cap", exact_cap,
                   "node budget for the exact cover solver (0 disables, overrides config)");

    const char* subs[] = {"span",    "measure-span", "equicont", "suspend",
                          "spectral", "sweep",        "zoo-check"};
    const char* descs[] = {
        "topological spanning numbers over the k/eps grids",
        "measure spanning numbers (partial covers) over the grids",
        "equicontinuity modulus probes with mu-discard",
        "suspension cross-validation of boundedness verdicts",
        "orbit compactness of an L2 test-function battery",
        "measure spanning numbers across a slope grid (>= 2 directions)",
        "verdict matrix for the reference zoo against known classifications"};
    for (std::size_t i = 0; i < 7; ++i) app.add_subcommand(subs[i], descs[i])->fallthrough();

    CLI11_PARSE(app, argc, argv);

    int nthreads = resolve_workers(workers);
#ifdef _OPENMP
    if (nthreads > 0) omp_set_num_threads(nthreads);
#else
    (void)nthreads;
#endif

    try {
        auto cfg = dircx::ExperimentConfig::load(config_path);
        if (seed_set) cfg.seed = seed;
        if (exact_cap >= 0) cfg.exact_cap = exact_cap;
        std::string sub = app.get_subcommands().front()->get_name();
        int rc = dircx::run_experiment(sub, cfg, out_dir);
        if (rc != 0) std::cerr << "dircomplex: " << sub << " failed; see summary.json\n";
        return rc;
    } catch (const std::exception& e) {
        std::cerr << "dircomplex: " << e.what() << "\n";
        return 1;
    }
}
