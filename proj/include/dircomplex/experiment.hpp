#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "dircomplex/covering.hpp"
#include "dircomplex/equicont.hpp"
#include "dircomplex/spectral.hpp"
#include "dircomplex/suspension.hpp"

namespace dircx {

inline constexpr const char* kToolVersion = "0.1.0";

struct ExperimentConfig {
    nlohmann::json system; // system descriptor, see make_system
    std::vector<Direction> directions;
    std::vector<Family> families;
    std::vector<double> eps_grid;
    std::vector<int> k_grid;
    std::vector<double> delta_grid; // equicont probe deltas
    int n_samples = 256;
    double tau = 0.1;
    std::uint64_t seed = 1;
    long long exact_cap = 200000;

    static ExperimentConfig from_json(const nlohmann::json& j);
    static ExperimentConfig load(const std::string& path);
    nlohmann::json to_json() const; // canonical form used for the manifest hash
    void validate() const;
};

nlohmann::json direction_to_json(const Direction& d);
Direction direction_from_json(const nlohmann::json& j);

// Builds a reference system from a descriptor:
//   {"kind":"rotation","alpha":...,"gamma":...}
//   {"kind":"fullshift","alphabet":2,"radius":64}
//   {"kind":"skewshift","alphabet":2,"radius":64}
//   {"kind":"permutation","n":5,"step1":1,"step2":2}
// min_radius lets the runner size subshift windows from the largest
// requested strip; an explicit "radius" in the descriptor wins if larger.
std::shared_ptr<ActionSystem> make_system(const nlohmann::json& desc, int min_radius = 0);

// Subshift radius needed for the deepest strip plus comparison margin.
int required_radius(const std::vector<Direction>& dirs, int k_max);

// Runs one subcommand (span, measure-span, equicont, suspend, spectral,
// sweep, zoo-check) and writes its CSV, summary.json and manifest.json under
// out_dir. Identical inputs produce byte-identical outputs. Returns the
// process exit status; failures leave a structured error record in
// summary.json.
int run_experiment(const std::string& subcommand, const ExperimentConfig& cfg,
                   const std::string& out_dir);

} // namespace dircx
