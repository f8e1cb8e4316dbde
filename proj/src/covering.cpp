#include "dircomplex/covering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dircx {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(int n) { return Bits(static_cast<std::size_t>((n + 63) / 64), 0); }

void set_bit(Bits& b, int i) { b[static_cast<std::size_t>(i) >> 6] |= 1ULL << (i & 63); }

int popcount(const Bits& b) {
    int c = 0;
    for (auto w : b) c += __builtin_popcountll(w);
    return c;
}

int gain(const Bits& ball, const Bits& covered) {
    int c = 0;
    for (std::size_t w = 0; w < ball.size(); ++w) c += __builtin_popcountll(ball[w] & ~covered[w]);
    return c;
}

void merge(Bits& covered, const Bits& ball) {
    for (std::size_t w = 0; w < ball.size(); ++w) covered[w] |= ball[w];
}

std::vector<Bits> ball_sets(const DistMatrix& dm, double eps) {
    std::vector<Bits> balls(static_cast<std::size_t>(dm.n));
    for (int i = 0; i < dm.n; ++i) {
        balls[static_cast<std::size_t>(i)] = make_bits(dm.n);
        for (int j = 0; j < dm.n; ++j)
            if (dm.at(i, j) < eps) set_bit(balls[static_cast<std::size_t>(i)], j);
    }
    return balls;
}

int threshold_or_n(const DistMatrix& dm, int threshold) {
    return threshold < 0 ? dm.n : threshold;
}

struct ExactSearch {
    const std::vector<Bits>* balls = nullptr;
    const std::vector<int>* order = nullptr;   // candidate indices, coverage desc
    const std::vector<int>* suffix_max = nullptr; // max ball size from position
    int target = 0;
    long long budget = 0;
    bool exhausted = false;
    std::vector<int> chosen;

    bool dfs(int pos, const Bits& covered, int covered_count, int picks_left) {
        if (covered_count >= target) return true;
        if (picks_left == 0) return false;
        if (--budget <= 0) { exhausted = true; return false; }
        for (std::size_t p = static_cast<std::size_t>(pos); p < order->size(); ++p) {
            int cand = (*order)[p];
            // even perfect disjoint balls from here on cannot reach the target
            if (covered_count + picks_left * (*suffix_max)[p] < target) return false;
            int g = gain((*balls)[static_cast<std::size_t>(cand)], covered);
            if (g == 0) continue;
            Bits next = covered;
            merge(next, (*balls)[static_cast<std::size_t>(cand)]);
            chosen.push_back(cand);
            if (dfs(static_cast<int>(p) + 1, next, covered_count + g, picks_left - 1))
                return true;
            chosen.pop_back();
            if (exhausted) return false;
        }
        return false;
    }
};

} // namespace

GreedyCover cover_greedy(const DistMatrix& dm, double eps, int threshold) {
    int target = threshold_or_n(dm, threshold);
    if (dm.n < 1) throw std::invalid_argument("cover_greedy: empty matrix");
    if (target <= 0) return GreedyCover{1, {0}};
    auto balls = ball_sets(dm, eps);
    Bits covered = make_bits(dm.n);
    GreedyCover out;
    int covered_count = 0;
    while (covered_count < target) {
        int best = -1, best_gain = 0;
        for (int i = 0; i < dm.n; ++i) {
            int g = gain(balls[static_cast<std::size_t>(i)], covered);
            if (g > best_gain) { best_gain = g; best = i; }
        }
        if (best < 0) throw std::runtime_error("cover_greedy: unreachable threshold");
        merge(covered, balls[static_cast<std::size_t>(best)]);
        covered_count += best_gain;
        out.centers.push_back(best);
    }
    out.size = static_cast<int>(out.centers.size());
    return out;
}

int separated_lower(const DistMatrix& dm, double eps) {
    std::vector<int> chosen;
    for (int i = 0; i < dm.n; ++i) {
        bool ok = true;
        for (int c : chosen)
            if (dm.at(i, c) < eps) { ok = false; break; }
        if (ok) chosen.push_back(i);
    }
    return static_cast<int>(chosen.size());
}

ExactCover cover_exact(const DistMatrix& dm, double eps, long long node_budget,
                       int threshold) {
    int target = threshold_or_n(dm, threshold);
    if (dm.n < 1) throw std::invalid_argument("cover_exact: empty matrix");
    if (target <= 0) return ExactCover{1, {0}};
    auto balls = ball_sets(dm, eps);

    std::vector<int> sizes(static_cast<std::size_t>(dm.n));
    for (int i = 0; i < dm.n; ++i) sizes[static_cast<std::size_t>(i)] = popcount(balls[static_cast<std::size_t>(i)]);
    std::vector<int> order(static_cast<std::size_t>(dm.n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sizes[static_cast<std::size_t>(a)] > sizes[static_cast<std::size_t>(b)]; });
    std::vector<int> suffix_max(order.size());
    int run = 0;
    for (std::size_t p = order.size(); p-- > 0;) {
        run = std::max(run, sizes[static_cast<std::size_t>(order[p])]);
        suffix_max[p] = run;
    }

    GreedyCover greedy = cover_greedy(dm, eps, target);
    int lb = std::max(1, separated_lower(dm, 2.0 * eps) - (dm.n - target));

    ExactSearch search;
    search.balls = &balls;
    search.order = &order;
    search.suffix_max = &suffix_max;
    search.target = target;
    search.budget = node_budget;
    for (int s = lb; s < greedy.size; ++s) {
        search.chosen.clear();
        Bits covered = make_bits(dm.n);
        if (search.dfs(0, covered, 0, s)) {
            std::vector<int> centers = search.chosen;
            std::sort(centers.begin(), centers.end());
            return ExactCover{s, centers};
        }
        if (search.exhausted) return ExactCover{std::nullopt, {}};
    }
    return ExactCover{greedy.size, greedy.centers};
}

CoverResult cover_result_full(const DistMatrix& dm, int k, double eps, long long node_budget) {
    CoverResult r;
    r.eps = eps;
    r.k = k;
    auto greedy = cover_greedy(dm, eps);
    r.greedy_upper = greedy.size;
    r.centers = greedy.centers;
    r.separated_lower = separated_lower(dm, 2.0 * eps);
    if (node_budget > 0) {
        auto exact = cover_exact(dm, eps, node_budget);
        r.exact = exact.size;
        if (exact.size) r.centers = exact.centers;
    }
    return r;
}

CoverResult cover_result_partial(const DistMatrix& dm, int k, double eps, long long node_budget) {
    int target = static_cast<int>(std::ceil((1.0 - eps) * dm.n));
    CoverResult r;
    r.eps = eps;
    r.k = k;
    auto greedy = cover_greedy(dm, eps, target);
    r.greedy_upper = greedy.size;
    r.centers = greedy.centers;
    r.separated_lower = separated_lower(dm, 2.0 * eps);
    if (node_budget > 0) {
        auto exact = cover_exact(dm, eps, node_budget, target);
        r.exact = exact.size;
        if (exact.size) r.centers = exact.centers;
    }
    return r;
}

CoverResult span_topological(const MetricSeq& ms, const std::vector<Point>& sample,
                             int k, double eps, long long node_budget) {
    DistMatrix dm{static_cast<int>(sample.size()), ms.eval_matrix(sample, k)};
    return cover_result_full(dm, k, eps, node_budget);
}

CoverResult span_measure(const MetricSeq& ms, const std::vector<Point>& sample,
                         int k, double eps, long long node_budget) {
    DistMatrix dm{static_cast<int>(sample.size()), ms.eval_matrix(sample, k)};
    return cover_result_partial(dm, k, eps, node_budget);
}

std::string Verdict::to_string() const {
    switch (kind) {
        case VerdictKind::bounded: return "BOUNDED(" + std::to_string(bound) + ")";
        case VerdictKind::growing: return "GROWING";
        case VerdictKind::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

Verdict classify_counts(const std::vector<CoverResult>& by_k, int sample_size) {
    if (by_k.size() < 2) return Verdict{VerdictKind::inconclusive, 0};
    std::vector<int> lower, upper;
    for (const auto& r : by_k) {
        lower.push_back(r.separated_lower);
        upper.push_back(r.greedy_upper);
    }
    std::size_t tail = by_k.size() - (by_k.size() + 1) / 2; // start of last half
    bool l_tail_strict = true, l_tail_nondecr = true;
    for (std::size_t i = tail + 1; i < by_k.size(); ++i) {
        if (lower[i] <= lower[i - 1]) l_tail_strict = false;
        if (lower[i] < lower[i - 1]) l_tail_nondecr = false;
    }
    // Neither count is exactly constant while a bounded orbit fills out its
    // limit set, so the plateau test tolerates slow drift: less than 1.5x
    // across the tail of the k grid. Symmetrically, a strictly increasing
    // tail only counts as growth once it clears the same 1.5x threshold;
    // +1 steps toward a plateau are drift, not growth.
    bool g_tail_slow = 2 * upper.back() <= 3 * upper[tail];
    bool l_tail_slow = 2 * lower.back() <= 3 * lower[tail];
    bool saturated = lower.back() >= static_cast<int>(0.9 * sample_size);

    if (l_tail_strict && !l_tail_slow && by_k.size() - tail >= 2)
        return Verdict{VerdictKind::growing, 0};
    if (saturated && l_tail_nondecr) return Verdict{VerdictKind::growing, 0};
    if (!saturated && g_tail_slow && l_tail_slow) {
        int c = *std::max_element(upper.begin(), upper.end());
        return Verdict{VerdictKind::bounded, c};
    }
    return Verdict{VerdictKind::inconclusive, 0};
}

ComplexityProfile classify(const MetricSeq& ms, const std::vector<Point>& sample,
                           const std::vector<int>& k_grid, const std::vector<double>& eps_grid,
                           long long node_budget, bool measure) {
    if (k_grid.size() < 4 || k_grid.back() < 10 * k_grid.front())
        throw std::invalid_argument("classify: k grid needs >= 4 depths spanning a decade");
    if (eps_grid.empty()) throw std::invalid_argument("classify: empty eps grid");
    ComplexityProfile prof;
    prof.family = ms.family();
    prof.direction = ms.direction();
    prof.eps_grid = eps_grid;
    prof.k_grid = k_grid;
    prof.results.assign(eps_grid.size(), {});
    for (int k : k_grid) {
        DistMatrix dm{static_cast<int>(sample.size()), ms.eval_matrix(sample, k)};
        for (std::size_t e = 0; e < eps_grid.size(); ++e) {
            prof.results[e].push_back(measure ? cover_result_partial(dm, k, eps_grid[e], node_budget)
                                              : cover_result_full(dm, k, eps_grid[e], node_budget));
        }
    }
    for (std::size_t e = 0; e < eps_grid.size(); ++e)
        prof.verdicts.push_back(classify_counts(prof.results[e], static_cast<int>(sample.size())));
    return prof;
}

} // namespace dircx
