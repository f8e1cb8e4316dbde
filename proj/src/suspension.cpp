#include "dircomplex/suspension.hpp"

#include <cmath>
#include <stdexcept>

namespace dircx {

namespace {

double circle_dist(double a, double b) {
    double t = std::fabs(a - b);
    return std::min(t, 1.0 - t);
}

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

} // namespace

SuspensionSystem::SuspensionSystem(std::shared_ptr<const ActionSystem> base, Slope beta)
    : base_(std::move(base)), beta_(beta) {
    if (!base_) throw std::invalid_argument("suspension: null base");
    if (base_->q() != 2) throw std::invalid_argument("suspension: base must be a Z^2 action");
}

double SuspensionSystem::diameter() const { return std::max(base_->diameter(), 0.5); }

void SuspensionSystem::split(long long n, double v, long long& fl, double& frac) const {
    if (beta_.rational) {
        long long t = beta_.num * n;
        long long a = floor_div(t, beta_.den);
        long long rem = t - a * beta_.den; // in [0, den)
        double units = static_cast<double>(rem) + v * static_cast<double>(beta_.den);
        if (units >= static_cast<double>(beta_.den)) {
            fl = a + 1;
            frac = (units - static_cast<double>(beta_.den)) / static_cast<double>(beta_.den);
        } else {
            fl = a;
            frac = units / static_cast<double>(beta_.den);
        }
    } else {
        double s = beta_.value * static_cast<double>(n) + v;
        double f = std::floor(s);
        fl = static_cast<long long>(f);
        frac = s - f;
        if (frac >= 1.0) { frac = 0.0; fl += 1; }
    }
}

double SuspensionSystem::third_coordinate(const SuspensionPoint& p) const {
    long long fl;
    double frac;
    split(p.steps, p.v0, fl, frac);
    return frac;
}

Point SuspensionSystem::power(long long n, const Point& pv) const {
    const auto& p = *std::get<std::shared_ptr<SuspensionPoint>>(pv);
    long long f_before, f_after;
    double frac;
    split(p.steps, p.v0, f_before, frac);
    split(p.steps + n, p.v0, f_after, frac);
    auto np = std::make_shared<SuspensionPoint>();
    np->x = base_->action({n, f_after - f_before}, p.x);
    np->u = p.u;
    np->v0 = p.v0;
    np->steps = p.steps + n;
    return np;
}

Point SuspensionSystem::action(const LatticeVec& w, const Point& p) const {
    return power(w[0], p); // Z-action: only the first component acts
}

double SuspensionSystem::base_metric(const Point& p1v, const Point& p2v) const {
    const auto& p1 = *std::get<std::shared_ptr<SuspensionPoint>>(p1v);
    const auto& p2 = *std::get<std::shared_ptr<SuspensionPoint>>(p2v);
    double d = base_->base_metric(p1.x, p2.x);
    d = std::max(d, circle_dist(p1.u, p2.u));
    d = std::max(d, circle_dist(third_coordinate(p1), third_coordinate(p2)));
    return d;
}

Point SuspensionSystem::sample(Rng& rng) const {
    auto p = std::make_shared<SuspensionPoint>();
    p->x = base_->sample(rng);
    p->u = rng.uniform();
    p->v0 = rng.uniform();
    return p;
}

Point SuspensionSystem::perturb(const Point& pv, double target, Rng& rng) const {
    const auto& p = *std::get<std::shared_ptr<SuspensionPoint>>(pv);
    if (p.steps != 0) throw std::invalid_argument("suspension perturb: expects step-0 points");
    double delta = std::min(0.49, target * (0.25 + 0.5 * rng.uniform()));
    auto np = std::make_shared<SuspensionPoint>();
    np->x = base_->perturb(p.x, target, rng);
    np->u = p.u + (rng.uniform_int(2) ? delta : -delta);
    np->u -= std::floor(np->u);
    np->v0 = p.v0 + (rng.uniform_int(2) ? delta : -delta);
    np->v0 -= std::floor(np->v0);
    return np;
}

std::shared_ptr<SuspensionSystem> suspend(std::shared_ptr<const ActionSystem> base, Slope beta) {
    return std::make_shared<SuspensionSystem>(std::move(base), beta);
}

double suspension_mean_metric(const SuspensionSystem& ss, const Point& p1, const Point& p2, int k) {
    if (k < 1) throw std::invalid_argument("suspension_mean_metric: k must be >= 1");
    double sum = 0.0;
    for (int i = 0; i < k; ++i)
        sum += ss.base_metric(ss.power(i, p1), ss.power(i, p2));
    return sum / static_cast<double>(k);
}

CrossValidation cross_validate(std::shared_ptr<const ActionSystem> base, Slope beta,
                               const std::vector<double>& eps_grid,
                               const std::vector<int>& k_grid,
                               int n_samples, std::uint64_t seed,
                               const std::vector<double>& b_values) {
    CrossValidation cv;
    cv.b_values = b_values;
    cv.eps_grid = eps_grid;

    auto base_sample = sample_measure(*base, n_samples, seed);
    for (double b : b_values) {
        Direction dir(beta, b);
        MetricSeq ms(*base, dir, Family::mean);
        cv.base_profiles.push_back(classify(ms, base_sample, k_grid, eps_grid, 0, true));
    }

    auto susp = suspend(base, beta);
    auto susp_sample = sample_measure(*susp, n_samples, Rng::derive(seed, 1));
    MetricSeq zms(*susp, SuspensionSystem::z_direction(), Family::mean);
    cv.suspension_profile = classify(zms, susp_sample, k_grid, eps_grid, 0, true);

    cv.all_agree = true;
    for (std::size_t e = 0; e < eps_grid.size(); ++e) {
        std::vector<std::string> row;
        bool agree = true;
        VerdictKind ref = cv.base_profiles.front().verdicts[e].kind;
        for (const auto& prof : cv.base_profiles) {
            row.push_back(prof.verdicts[e].to_string());
            if (prof.verdicts[e].kind != ref) agree = false;
        }
        row.push_back(cv.suspension_profile.verdicts[e].to_string());
        if (cv.suspension_profile.verdicts[e].kind != ref) agree = false;
        cv.verdict_rows.push_back(std::move(row));
        cv.agreement.push_back(agree);
        if (!agree) cv.all_agree = false;
    }
    return cv;
}

} // namespace dircx
