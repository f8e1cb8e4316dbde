#pragma once

#include <string>
#include <vector>

#include "dircomplex/systems.hpp"

namespace dircx {

enum class Family { bowen, maxmean, mean };

std::string family_name(Family f);
Family parse_family(const std::string& s);

// All three directional metrics at depth k, evaluated in one pass over the
// strip window. bowen = max over the window, mean = average, maxmean = max
// over depths i <= k of the depth-i mean (empty-column depths skipped).
struct MetricValues {
    double bowen = 0.0;
    double maxmean = 0.0;
    double mean = 0.0;

    double of(Family f) const;
};

// One of the three directional metric families, bound to a system and a
// direction. Evaluation is pure; instances are shareable across tasks.
class MetricSeq {
public:
    MetricSeq(const ActionSystem& sys, Direction dir, Family family);

    const ActionSystem& system() const { return *sys_; }
    const Direction& direction() const { return dir_; }
    Family family() const { return family_; }

    double eval(const Point& x, const Point& y, int k) const;
    MetricValues eval_all(const Point& x, const Point& y, int k) const;

    // MetricValues at every depth in ks (ascending), from a single pass over
    // the window at max(ks).
    std::vector<MetricValues> eval_profile(const Point& x, const Point& y,
                                           const std::vector<int>& ks) const;

    // Pairwise distances; zero diagonal. Orbit segments are computed once per
    // point. OpenMP-parallel over pairs, bit-identical to the serial path.
    std::vector<double> eval_matrix(const std::vector<Point>& pts, int k) const;

    // Serial reference: n^2 independent eval calls, kept for testing and the
    // benchmark target.
    std::vector<double> eval_matrix_serial(const std::vector<Point>& pts, int k) const;

private:
    MetricValues window_values(const StripWindow& w,
                               const std::vector<Point>& seg_x,
                               const std::vector<Point>& seg_y,
                               const std::vector<int>* ks,
                               std::vector<MetricValues>* profile) const;

    const ActionSystem* sys_;
    Direction dir_;
    Family family_;
};

} // namespace dircx
