#include "dircomplex/systems.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dircx {

namespace {

double circle_dist(double a, double b) {
    double t = std::fabs(a - b);
    return std::min(t, 1.0 - t);
}

double wrap01(double x) {
    double r = x - std::floor(x);
    return r >= 1.0 ? 0.0 : r;
}

[[noreturn]] void resolution_exceeded() {
    throw std::runtime_error("resolution exceeded");
}

} // namespace

int GridPoint::remaining() const {
    return radius - static_cast<int>(std::max(std::llabs(om), std::llabs(on)));
}

std::uint8_t GridPoint::at(long long i, long long j) const {
    long long side = 2LL * radius + 1;
    return (*grid)[static_cast<std::size_t>((om + i + radius) * side + (on + j + radius))];
}

int LinePoint::remaining() const {
    return radius - static_cast<int>(std::llabs(off));
}

std::uint8_t LinePoint::at(long long i) const {
    return (*line)[static_cast<std::size_t>(off + i + radius)];
}

// ---------------------------------------------------------------- rotation

RotationSystem::RotationSystem(double alpha, double gamma) : alpha_(alpha), gamma_(gamma) {}

Point RotationSystem::action(const LatticeVec& w, const Point& x) const {
    const auto& p = std::get<TorusPoint>(x);
    double m = static_cast<double>(w[0]);
    double n = static_cast<double>(w[1]);
    TorusPoint r;
    r.x.push_back(wrap01(p.x[0] + wrap01(m * alpha_) + wrap01(n * gamma_)));
    return r;
}

double RotationSystem::base_metric(const Point& x, const Point& y) const {
    return circle_dist(std::get<TorusPoint>(x).x[0], std::get<TorusPoint>(y).x[0]);
}

Point RotationSystem::sample(Rng& rng) const {
    TorusPoint p;
    p.x.push_back(rng.uniform());
    return p;
}

Point RotationSystem::perturb(const Point& x, double target, Rng& rng) const {
    double delta = std::min(0.49, target * (0.25 + 0.5 * rng.uniform()));
    double sign = rng.uniform_int(2) == 0 ? 1.0 : -1.0;
    TorusPoint p;
    p.x.push_back(wrap01(std::get<TorusPoint>(x).x[0] + sign * delta));
    return p;
}

// --------------------------------------------------------------- fullshift

FullShift::FullShift(int alphabet, int radius, int resolution)
    : alphabet_(alphabet), radius_(radius), resolution_(resolution) {
    if (alphabet < 2) throw std::invalid_argument("fullshift: alphabet must be >= 2");
    if (radius < 0) throw std::invalid_argument("fullshift: radius must be >= 0");
}

Point FullShift::action(const LatticeVec& w, const Point& x) const {
    GridPoint p = std::get<GridPoint>(x);
    p.om += w[0];
    p.on += w[1];
    if (p.remaining() < 0) resolution_exceeded();
    return p;
}

double FullShift::base_metric(const Point& xv, const Point& yv) const {
    const auto& x = std::get<GridPoint>(xv);
    const auto& y = std::get<GridPoint>(yv);
    int rmax = std::min({x.remaining(), y.remaining(), resolution_});
    if (rmax < 0) resolution_exceeded();
    if (x.grid == y.grid && x.om == y.om && x.on == y.on) return 0.0;
    for (int r = 0; r <= rmax; ++r) {
        // ring at Chebyshev radius r
        for (long long i = -r; i <= r; ++i) {
            if (x.at(i, -r) != y.at(i, -r) || x.at(i, r) != y.at(i, r))
                return std::ldexp(1.0, -r);
        }
        for (long long j = -r + 1; j < r; ++j) {
            if (x.at(-r, j) != y.at(-r, j) || x.at(r, j) != y.at(r, j))
                return std::ldexp(1.0, -r);
        }
    }
    return 0.0;
}

Point FullShift::sample(Rng& rng) const {
    long long side = 2LL * radius_ + 1;
    auto grid = std::make_shared<std::vector<std::uint8_t>>(static_cast<std::size_t>(side * side));
    for (auto& s : *grid) s = static_cast<std::uint8_t>(rng.uniform_int(alphabet_));
    GridPoint p;
    p.grid = std::move(grid);
    p.radius = radius_;
    return p;
}

Point FullShift::perturb(const Point& xv, double target, Rng& rng) const {
    const auto& x = std::get<GridPoint>(xv);
    int rem = x.remaining();
    int r = target >= 1.0 ? 0 : static_cast<int>(std::floor(-std::log2(target))) + 1;
    long long side = 2LL * rem + 1;
    auto grid = std::make_shared<std::vector<std::uint8_t>>(static_cast<std::size_t>(side * side));
    for (long long i = -rem; i <= rem; ++i)
        for (long long j = -rem; j <= rem; ++j) {
            std::uint8_t s = x.at(i, j);
            long long cr = std::max(std::llabs(i), std::llabs(j));
            if (cr >= r) s = static_cast<std::uint8_t>(rng.uniform_int(alphabet_));
            (*grid)[static_cast<std::size_t>((i + rem) * side + (j + rem))] = s;
        }
    if (r <= rem) {
        // force the first disagreement onto ring r exactly
        std::size_t idx = static_cast<std::size_t>((r + rem) * side + rem);
        std::uint8_t orig = x.at(r, 0);
        (*grid)[idx] = static_cast<std::uint8_t>((orig + 1 + rng.uniform_int(alphabet_ - 1)) % alphabet_);
    }
    GridPoint p;
    p.grid = std::move(grid);
    p.radius = rem;
    return p;
}

// --------------------------------------------------------------- skewshift

SkewShift::SkewShift(int alphabet, int radius, int resolution)
    : alphabet_(alphabet), radius_(radius), resolution_(resolution) {
    if (alphabet < 2) throw std::invalid_argument("skewshift: alphabet must be >= 2");
    if (radius < 0) throw std::invalid_argument("skewshift: radius must be >= 0");
}

Point SkewShift::action(const LatticeVec& w, const Point& x) const {
    LinePoint p = std::get<LinePoint>(x);
    p.off += w[0] - w[1];
    if (p.remaining() < 0) resolution_exceeded();
    return p;
}

double SkewShift::base_metric(const Point& xv, const Point& yv) const {
    const auto& x = std::get<LinePoint>(xv);
    const auto& y = std::get<LinePoint>(yv);
    int rmax = std::min({x.remaining(), y.remaining(), resolution_});
    if (rmax < 0) resolution_exceeded();
    if (x.line == y.line && x.off == y.off) return 0.0;
    for (int r = 0; r <= rmax; ++r)
        if (x.at(r) != y.at(r) || x.at(-r) != y.at(-r)) return std::ldexp(1.0, -r);
    return 0.0;
}

Point SkewShift::sample(Rng& rng) const {
    auto line = std::make_shared<std::vector<std::uint8_t>>(static_cast<std::size_t>(2 * radius_ + 1));
    for (auto& s : *line) s = static_cast<std::uint8_t>(rng.uniform_int(alphabet_));
    LinePoint p;
    p.line = std::move(line);
    p.radius = radius_;
    return p;
}

Point SkewShift::perturb(const Point& xv, double target, Rng& rng) const {
    const auto& x = std::get<LinePoint>(xv);
    int rem = x.remaining();
    int r = target >= 1.0 ? 0 : static_cast<int>(std::floor(-std::log2(target))) + 1;
    auto line = std::make_shared<std::vector<std::uint8_t>>(static_cast<std::size_t>(2 * rem + 1));
    for (long long i = -rem; i <= rem; ++i) {
        std::uint8_t s = x.at(i);
        if (std::llabs(i) >= r) s = static_cast<std::uint8_t>(rng.uniform_int(alphabet_));
        (*line)[static_cast<std::size_t>(i + rem)] = s;
    }
    if (r <= rem) {
        std::uint8_t orig = x.at(r);
        (*line)[static_cast<std::size_t>(r + rem)] =
            static_cast<std::uint8_t>((orig + 1 + rng.uniform_int(alphabet_ - 1)) % alphabet_);
    }
    LinePoint p;
    p.line = std::move(line);
    p.radius = rem;
    return p;
}

// ------------------------------------------------------------- permutation

namespace {

std::vector<std::vector<int>> power_table(const std::vector<int>& pi) {
    int n = static_cast<int>(pi.size());
    std::vector<std::vector<int>> powers;
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    powers.push_back(id);
    std::vector<int> cur = pi;
    while (cur != id) {
        powers.push_back(cur);
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) next[i] = pi[cur[i]];
        cur = next;
    }
    return powers;
}

} // namespace

PermutationSystem::PermutationSystem(std::vector<int> pi1, std::vector<int> pi2)
    : n_(static_cast<int>(pi1.size())) {
    if (pi1.size() != pi2.size() || pi1.empty())
        throw std::invalid_argument("permutation: generators must be nonempty and equal-sized");
    for (int i = 0; i < n_; ++i)
        if (pi1[pi2[i]] != pi2[pi1[i]])
            throw std::invalid_argument("permutation: generators must commute");
    pow1_ = power_table(pi1);
    pow2_ = power_table(pi2);
}

PermutationSystem PermutationSystem::cyclic(int n, int step1, int step2) {
    std::vector<int> pi1(n), pi2(n);
    for (int i = 0; i < n; ++i) {
        pi1[i] = static_cast<int>(((i + step1) % n + n) % n);
        pi2[i] = static_cast<int>(((i + step2) % n + n) % n);
    }
    return PermutationSystem(std::move(pi1), std::move(pi2));
}

int PermutationSystem::apply_power(const std::vector<std::vector<int>>& powers,
                                   long long e, int s) const {
    long long ord = static_cast<long long>(powers.size());
    long long r = ((e % ord) + ord) % ord;
    return powers[static_cast<std::size_t>(r)][s];
}

Point PermutationSystem::action(const LatticeVec& w, const Point& x) const {
    int s = std::get<StatePoint>(x).state;
    s = apply_power(pow1_, w[0], s);
    s = apply_power(pow2_, w[1], s);
    return StatePoint{s};
}

double PermutationSystem::base_metric(const Point& x, const Point& y) const {
    return std::get<StatePoint>(x).state == std::get<StatePoint>(y).state ? 0.0 : 1.0;
}

Point PermutationSystem::sample(Rng& rng) const {
    return StatePoint{static_cast<int>(rng.uniform_int(n_))};
}

Point PermutationSystem::perturb(const Point& x, double target, Rng&) const {
    (void)target; // only the point itself is within distance < 1
    return x;
}

// ------------------------------------------------------------------ shared

std::vector<Point> orbit_segment(const ActionSystem& sys, const Point& x,
                                 const StripWindow& window) {
    if (window.points.empty()) throw std::runtime_error("empty window");
    std::vector<Point> out;
    out.reserve(window.points.size());
    for (const auto& w : window.points) out.push_back(sys.action(w, x));
    return out;
}

std::vector<Point> sample_measure(const ActionSystem& sys, int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_measure: n must be >= 1");
    Rng rng(seed);
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(sys.sample(rng));
    return out;
}

} // namespace dircx
