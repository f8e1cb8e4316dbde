#include "dircomplex/equicont.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dircx {

std::string probe_family_name(ProbeFamily f) {
    switch (f) {
        case ProbeFamily::bowen: return "bowen";
        case ProbeFamily::maxmean: return "maxmean";
        case ProbeFamily::mean_limsup: return "mean-limsup";
    }
    return "?";
}

bool ModulusCurve::positive() const {
    for (double d : delta)
        if (!(d > 0.0)) return false;
    return true;
}

std::vector<ClosePair> make_close_pairs(const ActionSystem& sys,
                                        const std::vector<double>& delta_grid,
                                        int per_delta, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<ClosePair> pairs;
    pairs.reserve(delta_grid.size() * static_cast<std::size_t>(per_delta));
    for (double delta : delta_grid) {
        for (int i = 0; i < per_delta; ++i) {
            ClosePair p;
            p.a = sys.sample(rng);
            p.b = sys.perturb(p.a, delta, rng);
            p.base_dist = sys.base_metric(p.a, p.b);
            pairs.push_back(std::move(p));
        }
    }
    return pairs;
}

std::vector<double> probe_values(const ActionSystem& sys, const Direction& dir,
                                 ProbeFamily family, const std::vector<ClosePair>& pairs,
                                 const std::vector<int>& k_grid) {
    if (k_grid.empty()) throw std::invalid_argument("probe_values: empty k grid");
    MetricSeq ms(sys, dir, Family::bowen);
    std::vector<double> values;
    values.reserve(pairs.size());
    std::size_t tail = k_grid.size() - (k_grid.size() + 1) / 2;
    for (const auto& p : pairs) {
        auto profile = ms.eval_profile(p.a, p.b, k_grid);
        double v = 0.0;
        switch (family) {
            case ProbeFamily::bowen: v = profile.back().bowen; break;
            case ProbeFamily::maxmean: v = profile.back().maxmean; break;
            case ProbeFamily::mean_limsup:
                for (std::size_t i = tail; i < profile.size(); ++i)
                    v = std::max(v, profile[i].mean);
                break;
        }
        values.push_back(v);
    }
    return values;
}

namespace {

ModulusCurve curve_from_values(ProbeFamily family, const std::vector<ClosePair>& pairs,
                               const std::vector<double>& values,
                               const std::vector<double>& eps_grid,
                               const std::vector<double>& delta_grid) {
    std::vector<double> deltas_desc = delta_grid;
    std::sort(deltas_desc.begin(), deltas_desc.end(), std::greater<>());
    ModulusCurve curve;
    curve.family = family;
    curve.eps_grid = eps_grid;
    for (double eps : eps_grid) {
        double best = 0.0;
        for (double delta : deltas_desc) {
            bool ok = true;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (pairs[i].base_dist < delta && values[i] >= eps) { ok = false; break; }
            if (ok) { best = delta; break; }
        }
        curve.delta.push_back(best);
    }
    return curve;
}

} // namespace

ModulusCurve modulus(const ActionSystem& sys, const Direction& dir, ProbeFamily family,
                     const std::vector<ClosePair>& pairs, const std::vector<int>& k_grid,
                     const std::vector<double>& eps_grid, const std::vector<double>& delta_grid) {
    auto values = probe_values(sys, dir, family, pairs, k_grid);
    return curve_from_values(family, pairs, values, eps_grid, delta_grid);
}

MuEquicontinuityReport mu_equicontinuity_report(const ActionSystem& sys, const Direction& dir,
                                                ProbeFamily family, double tau,
                                                int per_delta, std::uint64_t seed,
                                                const std::vector<int>& k_grid,
                                                const std::vector<double>& eps_grid,
                                                const std::vector<double>& delta_grid) {
    if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("tau must be in (0, 1)");
    auto pairs = make_close_pairs(sys, delta_grid, per_delta, seed);
    auto values = probe_values(sys, dir, family, pairs, k_grid);
    double delta_min = *std::min_element(delta_grid.begin(), delta_grid.end());

    // Each pair contributes two distinct sample points.
    int n_points = 2 * static_cast<int>(pairs.size());
    int budget = static_cast<int>(std::ceil(tau * n_points));

    std::vector<char> alive(pairs.size(), 1);
    MuEquicontinuityReport report;
    report.family = family;
    report.tau = tau;

    auto retained = [&]() {
        std::vector<ClosePair> ps;
        std::vector<double> vs;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (alive[i]) { ps.push_back(pairs[i]); vs.push_back(values[i]); }
        return curve_from_values(family, ps, vs, eps_grid, delta_grid);
    };

    for (;;) {
        report.curve = retained();
        if (report.curve.positive()) { report.pass = true; break; }
        if (budget < 2) { report.pass = false; break; }
        // Find the smallest failing eps and drop the pair whose failure it is.
        // Discarding a pair costs both of its points.
        std::size_t victim = pairs.size();
        for (std::size_t e = 0; e < eps_grid.size() && victim == pairs.size(); ++e) {
            if (report.curve.delta[e] > 0.0) continue;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (alive[i] && pairs[i].base_dist < delta_min && values[i] >= eps_grid[e]) {
                    victim = i;
                    break;
                }
        }
        if (victim == pairs.size()) { report.pass = false; break; }
        alive[victim] = 0;
        budget -= 2;
        report.discarded += 2;
    }
    return report;
}

} // namespace dircx
