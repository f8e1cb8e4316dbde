#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "dircomplex/covering.hpp"

namespace dircx {

// A test function observed on a fixed sample from the invariant measure.
// Translates are computed by composition on the SAME sample, so pairwise
// distances are honest empirical L2 distances.
struct EmpiricalFunction {
    std::string id;
    std::function<std::complex<double>(const Point&)> f; // sup |f| <= 1

    double norm(const ActionSystem& sys, const std::vector<Point>& sample) const;
};

// Pairwise empirical-L2 distance matrix over {f o T^w : w in the window}.
// Distances below 1e-12 clamp to 0. OpenMP-parallel over window pairs, with
// a serial twin kept for testing.
DistMatrix orbit_distance_matrix(const ActionSystem& sys, const EmpiricalFunction& f,
                                 const std::vector<Point>& sample, const StripWindow& window);
DistMatrix orbit_distance_matrix_serial(const ActionSystem& sys, const EmpiricalFunction& f,
                                        const std::vector<Point>& sample, const StripWindow& window);

// Covering numbers of the orbit of f over the depth-k strip in empirical L2.
CoverResult orbit_cover_number(const ActionSystem& sys, const EmpiricalFunction& f,
                               const std::vector<Point>& sample, const Direction& dir,
                               int k, double eps, long long node_budget = 0);

enum class SpectrumKind { discrete_like, non_discrete, inconclusive };

struct SpectrumVerdict {
    SpectrumKind kind = SpectrumKind::inconclusive;
    std::vector<std::string> function_ids;
    std::vector<Verdict> per_function; // classifier verdicts per test function
    std::vector<std::vector<CoverResult>> results; // [function][k]
    std::string to_string() const;
};

// Fixed test-function battery per system kind: cylinder indicators of radius
// 0..2 for shifts, the first three characters for the circle, coordinate
// indicators for permutation systems.
std::vector<EmpiricalFunction> test_battery(const ActionSystem& sys);

// DISCRETE-LIKE if every test-function orbit is BOUNDED, NON-DISCRETE if any
// is GROWING, INCONCLUSIVE otherwise.
SpectrumVerdict spectrum_verdict(const ActionSystem& sys, const Direction& dir,
                                 const std::vector<EmpiricalFunction>& functions,
                                 const std::vector<double>& eps_grid,
                                 const std::vector<int>& k_grid,
                                 int n_samples, std::uint64_t seed);

} // namespace dircx
