#include "dircomplex/metrics.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dircx {

std::string family_name(Family f) {
    switch (f) {
        case Family::bowen: return "bowen";
        case Family::maxmean: return "maxmean";
        case Family::mean: return "mean";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "bowen") return Family::bowen;
    if (s == "maxmean") return Family::maxmean;
    if (s == "mean") return Family::mean;
    throw std::invalid_argument("unknown metric family: " + s);
}

double MetricValues::of(Family f) const {
    switch (f) {
        case Family::bowen: return bowen;
        case Family::maxmean: return maxmean;
        case Family::mean: return mean;
    }
    return 0.0;
}

MetricSeq::MetricSeq(const ActionSystem& sys, Direction dir, Family family)
    : sys_(&sys), dir_(std::move(dir)), family_(family) {
    dir_.validate();
}

MetricValues MetricSeq::window_values(const StripWindow& w,
                                      const std::vector<Point>& seg_x,
                                      const std::vector<Point>& seg_y,
                                      const std::vector<int>* ks,
                                      std::vector<MetricValues>* profile) const {
    // Kahan-compensated running sum over the window, snapshots at each
    // completed depth.
    double sum = 0.0, comp = 0.0;
    long long count = 0;
    double bowen = 0.0, maxmean = 0.0;
    bool have_mean = false;
    double last_mean = 0.0;
    std::size_t idx = 0;
    std::size_t ks_pos = 0;
    MetricValues out{};
    for (int depth = 1; depth <= w.k; ++depth) {
        while (idx < w.points.size() && w.points[idx][0] == depth - 1) {
            double d = sys_->base_metric(seg_x[idx], seg_y[idx]);
            bowen = std::max(bowen, d);
            double t = d - comp;
            double s = sum + t;
            comp = (s - sum) - t;
            sum = s;
            ++count;
            ++idx;
        }
        if (count > 0) {
            last_mean = sum / static_cast<double>(count);
            maxmean = have_mean ? std::max(maxmean, last_mean) : last_mean;
            have_mean = true;
        }
        if (ks && ks_pos < ks->size() && (*ks)[ks_pos] == depth) {
            if (!have_mean) throw std::runtime_error("empty window");
            out = MetricValues{bowen, maxmean, last_mean};
            if (profile) profile->push_back(out);
            ++ks_pos;
        }
    }
    if (!have_mean) throw std::runtime_error("empty window");
    if (!ks) out = MetricValues{bowen, maxmean, last_mean};
    return out;
}

MetricValues MetricSeq::eval_all(const Point& x, const Point& y, int k) const {
    if (k < 1) throw std::invalid_argument("metric depth must be >= 1");
    StripWindow w = strip_window(dir_, k);
    if (w.points.empty()) throw std::runtime_error("empty window");
    auto sx = orbit_segment(*sys_, x, w);
    auto sy = orbit_segment(*sys_, y, w);
    return window_values(w, sx, sy, nullptr, nullptr);
}

double MetricSeq::eval(const Point& x, const Point& y, int k) const {
    return eval_all(x, y, k).of(family_);
}

std::vector<MetricValues> MetricSeq::eval_profile(const Point& x, const Point& y,
                                                  const std::vector<int>& ks) const {
    if (ks.empty()) throw std::invalid_argument("eval_profile: empty depth grid");
    if (!std::is_sorted(ks.begin(), ks.end()))
        throw std::invalid_argument("eval_profile: depths must be ascending");
    StripWindow w = strip_window(dir_, ks.back());
    if (w.points.empty()) throw std::runtime_error("empty window");
    auto sx = orbit_segment(*sys_, x, w);
    auto sy = orbit_segment(*sys_, y, w);
    std::vector<MetricValues> profile;
    profile.reserve(ks.size());
    window_values(w, sx, sy, &ks, &profile);
    if (profile.size() != ks.size()) throw std::runtime_error("empty window");
    return profile;
}

std::vector<double> MetricSeq::eval_matrix(const std::vector<Point>& pts, int k) const {
    if (pts.empty()) throw std::invalid_argument("eval_matrix: empty point list");
    const long long n = static_cast<long long>(pts.size());
    StripWindow w = strip_window(dir_, k);
    if (w.points.empty()) throw std::runtime_error("empty window");

    std::vector<std::vector<Point>> segs(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) segs[i] = orbit_segment(*sys_, pts[i], w);

    std::vector<double> dm(static_cast<std::size_t>(n * n), 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (long long i = 0; i < n; ++i) {
        for (long long j = i + 1; j < n; ++j) {
            double v = window_values(w, segs[static_cast<std::size_t>(i)],
                                     segs[static_cast<std::size_t>(j)], nullptr, nullptr)
                           .of(family_);
            dm[static_cast<std::size_t>(i * n + j)] = v;
            dm[static_cast<std::size_t>(j * n + i)] = v;
        }
    }
    return dm;
}

std::vector<double> MetricSeq::eval_matrix_serial(const std::vector<Point>& pts, int k) const {
    if (pts.empty()) throw std::invalid_argument("eval_matrix: empty point list");
    const std::size_t n = pts.size();
    std::vector<double> dm(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = eval(pts[i], pts[j], k);
            dm[i * n + j] = v;
            dm[j * n + i] = v;
        }
    return dm;
}

} // namespace dircx
