#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dircomplex/metrics.hpp"

namespace dircx {

// Symmetric pairwise distance matrix with zero diagonal.
struct DistMatrix {
    int n = 0;
    std::vector<double> d; // n*n row-major

    double at(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
};

struct ExactCover {
    std::optional<int> size; // nullopt when the node budget ran out
    std::vector<int> centers;
};

struct GreedyCover {
    int size = 0;
    std::vector<int> centers;
};

// Minimum number of open eps-balls centered at sample points covering at
// least `threshold` points (threshold = n for a full cover). Branch and
// bound with iterative deepening; returns unknown on budget exhaustion,
// never a wrong number.
ExactCover cover_exact(const DistMatrix& dm, double eps, long long node_budget,
                       int threshold = -1);

// Greedy max coverage, deterministic tie-break by lowest center index.
GreedyCover cover_greedy(const DistMatrix& dm, double eps, int threshold = -1);

// Size of a greedily built eps-separated set (iteration by index). Every
// eps-cover of the full sample needs at least separated_lower(dm, 2*eps)
// balls.
int separated_lower(const DistMatrix& dm, double eps);

struct CoverResult {
    double eps = 0.0;
    int k = 0;
    std::optional<int> exact;
    int greedy_upper = 0;
    int separated_lower = 0; // greedy 2*eps-packing of the sample; a lower
                             // bound for full covers and the growth statistic
                             // used by the classifier for partial covers
    std::vector<int> centers;
};

// Full-sample spanning numbers in the depth-k metric.
CoverResult span_topological(const MetricSeq& ms, const std::vector<Point>& sample,
                             int k, double eps, long long node_budget);

// Partial cover of >= ceil((1-eps)*n) sample points (empirical measure
// complexity). Centers drawn from the sample.
CoverResult span_measure(const MetricSeq& ms, const std::vector<Point>& sample,
                         int k, double eps, long long node_budget);

// As above but on a precomputed distance matrix.
CoverResult cover_result_full(const DistMatrix& dm, int k, double eps, long long node_budget);
CoverResult cover_result_partial(const DistMatrix& dm, int k, double eps, long long node_budget);

enum class VerdictKind { bounded, growing, inconclusive };

struct Verdict {
    VerdictKind kind = VerdictKind::inconclusive;
    int bound = 0; // C(eps) when bounded
    std::string to_string() const;
};

// Finite-scale boundedness verdict over a k grid. BOUNDED requires the
// greedy upper and packing lower bounds to plateau on the tail of the grid
// well below the sample size; GROWING requires the packing lower bound to
// increase strictly along the tail by more than the plateau drift
// tolerance, or to saturate at the sample size (a finite sample clamps the
// packing number at n, so saturation is read as growth beyond the sample's
// resolution).
Verdict classify_counts(const std::vector<CoverResult>& by_k, int sample_size);

struct ComplexityProfile {
    Family family = Family::bowen;
    Direction direction;
    std::vector<double> eps_grid;
    std::vector<int> k_grid;
    std::vector<std::vector<CoverResult>> results; // [eps][k]
    std::vector<Verdict> verdicts;                 // per eps
};

// Runs span_measure (measure = true) or span_topological over the grids and
// classifies each eps row. Requires a k grid of >= 4 depths spanning at
// least one decade.
ComplexityProfile classify(const MetricSeq& ms, const std::vector<Point>& sample,
                           const std::vector<int>& k_grid, const std::vector<double>& eps_grid,
                           long long node_budget, bool measure);

} // namespace dircx
