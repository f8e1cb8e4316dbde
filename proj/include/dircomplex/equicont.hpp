#pragma once

#include <string>
#include <vector>

#include "dircomplex/metrics.hpp"

namespace dircx {

// Which quantified statement the modulus probes.
enum class ProbeFamily { bowen, maxmean, mean_limsup };

std::string probe_family_name(ProbeFamily f);

struct ClosePair {
    Point a, b;
    double base_dist = 0.0;
};

// For each eps, delta(eps) is the largest tested delta such that every
// sampled pair with base distance < delta keeps the probed metric below eps
// for all depths up to the grid maximum. delta = 0 encodes probe failure.
struct ModulusCurve {
    ProbeFamily family = ProbeFamily::bowen;
    std::vector<double> eps_grid;
    std::vector<double> delta; // same length as eps_grid

    bool positive() const; // all deltas > 0
};

// Close pairs by system-specific perturbation: one batch per delta-grid value
// (uniform sampling rarely yields close pairs in shift spaces).
std::vector<ClosePair> make_close_pairs(const ActionSystem& sys,
                                        const std::vector<double>& delta_grid,
                                        int per_delta, std::uint64_t seed);

// The probed value per pair: bowen -> d_k at max depth, maxmean -> d-hat at
// max depth, mean_limsup -> tail maximum of the mean metric over the last
// half of the k grid (finite-scale surrogate for the limsup).
std::vector<double> probe_values(const ActionSystem& sys, const Direction& dir,
                                 ProbeFamily family, const std::vector<ClosePair>& pairs,
                                 const std::vector<int>& k_grid);

ModulusCurve modulus(const ActionSystem& sys, const Direction& dir, ProbeFamily family,
                     const std::vector<ClosePair>& pairs, const std::vector<int>& k_grid,
                     const std::vector<double>& eps_grid, const std::vector<double>& delta_grid);

struct MuEquicontinuityReport {
    ProbeFamily family = ProbeFamily::bowen;
    double tau = 0.0;
    int discarded = 0;
    ModulusCurve curve; // after discard
    bool pass = false;  // positive delta for every grid eps on the retained set
};

// Greedily discards up to ceil(tau * #points) sample points (highest failing
// pair degree first) and recomputes the modulus on the retained pairs.
MuEquicontinuityReport mu_equicontinuity_report(const ActionSystem& sys, const Direction& dir,
                                                ProbeFamily family, double tau,
                                                int per_delta, std::uint64_t seed,
                                                const std::vector<int>& k_grid,
                                                const std::vector<double>& eps_grid,
                                                const std::vector<double>& delta_grid);

} // namespace dircx
