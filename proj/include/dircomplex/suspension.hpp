#pragma once

#include <memory>

#include "dircomplex/covering.hpp"
#include "dircomplex/metrics.hpp"

namespace dircx {

// Point of the suspension X x [0,1)^2. The third coordinate is tracked as
// (steps, v0) with v = {steps*beta + v0}, so the group law holds exactly for
// float slopes as well: every power recomputes its floors from scratch.
struct SuspensionPoint {
    Point x;           // current base point
    double u = 0.0;    // second coordinate, fixed under the flow
    double v0 = 0.0;   // third coordinate at step 0
    long long steps = 0;
};

// Suspension flow: the Z-system W^n(x,u,v) = (T^(n,[n*beta+v])x, u,
// {n*beta+v}) over a q=2 base, with mu~ = mu x Lebesgue. Exposed as an
// ActionSystem whose action uses only the first component of w, so the
// Z-action metrics are the directional metrics along beta=0 with b < 1/2.
class SuspensionSystem final : public ActionSystem {
public:
    SuspensionSystem(std::shared_ptr<const ActionSystem> base, Slope beta);

    double diameter() const override;
    std::string kind() const override { return "suspension"; }
    Point action(const LatticeVec& w, const Point& p) const override;
    double base_metric(const Point& p1, const Point& p2) const override;
    Point sample(Rng& rng) const override;
    Point perturb(const Point& p, double target, Rng& rng) const override;

    const ActionSystem& base() const { return *base_; }
    const Slope& beta() const { return beta_; }

    Point power(long long n, const Point& p) const; // W^n
    double third_coordinate(const SuspensionPoint& p) const;

    // Direction whose strip is {(i, 0) : 0 <= i <= k-1}: Z-action mode.
    static Direction z_direction() { return Direction(Slope::from_rational(0, 1), 0.25); }

private:
    // floor(n*beta + v) and its fractional part, exact for rational beta.
    void split(long long n, double v, long long& fl, double& frac) const;

    std::shared_ptr<const ActionSystem> base_;
    Slope beta_;
};

std::shared_ptr<SuspensionSystem> suspend(std::shared_ptr<const ActionSystem> base, Slope beta);

// Z-action mean metric of the suspension, (1/k) sum d~(W^i p1, W^i p2).
// Direct loop; the property tests check it against the directional-mode
// evaluation through MetricSeq.
double suspension_mean_metric(const SuspensionSystem& ss, const Point& p1, const Point& p2, int k);

struct CrossValidation {
    std::vector<double> b_values; // base half-widths, default {0.5, 1, 2}
    std::vector<ComplexityProfile> base_profiles; // one per b, mean family
    ComplexityProfile suspension_profile;         // Z mean family
    std::vector<double> eps_grid;
    std::vector<std::vector<std::string>> verdict_rows; // [eps] -> per side
    std::vector<bool> agreement;                        // per eps
    bool all_agree = false;
};

// Cross-validation pipeline: directional mean-metric measure complexity of the
// base at each b against the Z mean-metric complexity of the suspension.
CrossValidation cross_validate(std::shared_ptr<const ActionSystem> base, Slope beta,
                               const std::vector<double>& eps_grid,
                               const std::vector<int>& k_grid,
                               int n_samples, std::uint64_t seed,
                               const std::vector<double>& b_values = {0.5, 1.0, 2.0});

} // namespace dircx
