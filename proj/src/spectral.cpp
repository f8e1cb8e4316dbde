#include "dircomplex/spectral.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dircx {

namespace {

constexpr double kZeroClamp = 1e-12;

using ValueTable = std::vector<std::vector<std::complex<double>>>; // [window][sample]

ValueTable orbit_values(const ActionSystem& sys, const EmpiricalFunction& f,
                        const std::vector<Point>& sample, const StripWindow& window) {
    if (sample.empty()) throw std::invalid_argument("orbit_values: empty sample");
    if (window.points.empty()) throw std::runtime_error("empty window");
    ValueTable vals(window.points.size());
    for (std::size_t w = 0; w < window.points.size(); ++w) {
        vals[w].reserve(sample.size());
        for (const auto& z : sample) vals[w].push_back(f.f(sys.action(window.points[w], z)));
    }
    return vals;
}

double l2_dist(const std::vector<std::complex<double>>& a,
               const std::vector<std::complex<double>>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double re = a[i].real() - b[i].real();
        double im = a[i].imag() - b[i].imag();
        sum += re * re + im * im;
    }
    double d = std::sqrt(sum / static_cast<double>(a.size()));
    return d < kZeroClamp ? 0.0 : d;
}

DistMatrix matrix_from_values(const ValueTable& vals, bool parallel) {
    const long long m = static_cast<long long>(vals.size());
    DistMatrix dm;
    dm.n = static_cast<int>(m);
    dm.d.assign(static_cast<std::size_t>(m * m), 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
#endif
    for (long long i = 0; i < m; ++i) {
        for (long long j = i + 1; j < m; ++j) {
            double v = l2_dist(vals[static_cast<std::size_t>(i)], vals[static_cast<std::size_t>(j)]);
            dm.d[static_cast<std::size_t>(i * m + j)] = v;
            dm.d[static_cast<std::size_t>(j * m + i)] = v;
        }
    }
    return dm;
}

} // namespace

double EmpiricalFunction::norm(const ActionSystem&, const std::vector<Point>& sample) const {
    double sum = 0.0;
    for (const auto& z : sample) sum += std::norm(f(z));
    return std::sqrt(sum / static_cast<double>(sample.size()));
}

DistMatrix orbit_distance_matrix(const ActionSystem& sys, const EmpiricalFunction& f,
                                 const std::vector<Point>& sample, const StripWindow& window) {
    return matrix_from_values(orbit_values(sys, f, sample, window), true);
}

DistMatrix orbit_distance_matrix_serial(const ActionSystem& sys, const EmpiricalFunction& f,
                                        const std::vector<Point>& sample, const StripWindow& window) {
    return matrix_from_values(orbit_values(sys, f, sample, window), false);
}

CoverResult orbit_cover_number(const ActionSystem& sys, const EmpiricalFunction& f,
                               const std::vector<Point>& sample, const Direction& dir,
                               int k, double eps, long long node_budget) {
    if (sample.size() < 100) throw std::invalid_argument("orbit_cover_number: need >= 100 samples");
    auto window = strip_window(dir, k);
    auto dm = orbit_distance_matrix(sys, f, sample, window);
    return cover_result_full(dm, k, eps, node_budget);
}

std::string SpectrumVerdict::to_string() const {
    switch (kind) {
        case SpectrumKind::discrete_like: return "DISCRETE-LIKE";
        case SpectrumKind::non_discrete: return "NON-DISCRETE";
        case SpectrumKind::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

std::vector<EmpiricalFunction> test_battery(const ActionSystem& sys) {
    std::vector<EmpiricalFunction> fs;
    const std::string kind = sys.kind();
    if (kind == "rotation") {
        for (int j = 1; j <= 3; ++j) {
            EmpiricalFunction ef;
            ef.id = "char" + std::to_string(j);
            ef.f = [j](const Point& p) {
                double x = std::get<TorusPoint>(p).x[0];
                double ang = 2.0 * M_PI * j * x;
                return std::complex<double>(std::cos(ang), std::sin(ang));
            };
            fs.push_back(std::move(ef));
        }
    } else if (kind == "fullshift") {
        // Single-cell indicators at three offsets; orbits under translation
        // enumerate coordinate indicators, so their covering numbers track
        // the window size.
        const long long offs[3][2] = {{0, 0}, {1, 0}, {0, 1}};
        for (int t = 0; t < 3; ++t) {
            EmpiricalFunction ef;
            ef.id = "cell" + std::to_string(t);
            long long oi = offs[t][0], oj = offs[t][1];
            ef.f = [oi, oj](const Point& p) {
                const auto& g = std::get<GridPoint>(p);
                long long r = std::max(std::llabs(oi), std::llabs(oj));
                if (g.remaining() < r) throw std::runtime_error("resolution exceeded");
                return std::complex<double>(g.at(oi, oj) == 0 ? 1.0 : 0.0, 0.0);
            };
            fs.push_back(std::move(ef));
        }
    } else if (kind == "skewshift") {
        for (int t = 0; t < 3; ++t) {
            EmpiricalFunction ef;
            ef.id = "cell" + std::to_string(t);
            ef.f = [t](const Point& p) {
                const auto& l = std::get<LinePoint>(p);
                if (l.remaining() < t) throw std::runtime_error("resolution exceeded");
                return std::complex<double>(l.at(t) == 0 ? 1.0 : 0.0, 0.0);
            };
            fs.push_back(std::move(ef));
        }
    } else if (kind == "permutation") {
        const auto& perm = dynamic_cast<const PermutationSystem&>(sys);
        int count = std::min(3, perm.size());
        for (int j = 0; j < count; ++j) {
            EmpiricalFunction ef;
            ef.id = "state" + std::to_string(j);
            ef.f = [j](const Point& p) {
                return std::complex<double>(std::get<StatePoint>(p).state == j ? 1.0 : 0.0, 0.0);
            };
            fs.push_back(std::move(ef));
        }
    } else {
        throw std::invalid_argument("no test battery for system kind: " + kind);
    }
    return fs;
}

SpectrumVerdict spectrum_verdict(const ActionSystem& sys, const Direction& dir,
                                 const std::vector<EmpiricalFunction>& functions,
                                 const std::vector<double>& eps_grid,
                                 const std::vector<int>& k_grid,
                                 int n_samples, std::uint64_t seed) {
    if (functions.size() < 3)
        throw std::invalid_argument("spectrum_verdict: need >= 3 test functions");
    auto sample = sample_measure(sys, n_samples, seed);
    SpectrumVerdict out;
    bool any_growing = false, all_bounded = true;
    for (const auto& f : functions) {
        out.function_ids.push_back(f.id);
        std::vector<std::vector<CoverResult>> by_eps(eps_grid.size());
        int max_window = 0;
        std::vector<CoverResult> flat;
        for (int k : k_grid) {
            auto window = strip_window(dir, k);
            auto dm = orbit_distance_matrix(sys, f, sample, window);
            max_window = std::max(max_window, dm.n);
            for (std::size_t e = 0; e < eps_grid.size(); ++e) {
                auto r = cover_result_full(dm, k, eps_grid[e], 0);
                by_eps[e].push_back(r);
                flat.push_back(r);
            }
        }
        // Combined per-function verdict over the eps grid.
        Verdict combined{VerdictKind::bounded, 0};
        for (std::size_t e = 0; e < eps_grid.size(); ++e) {
            Verdict v = classify_counts(by_eps[e], max_window);
            if (v.kind == VerdictKind::growing) combined.kind = VerdictKind::growing;
            else if (v.kind == VerdictKind::inconclusive && combined.kind == VerdictKind::bounded)
                combined.kind = VerdictKind::inconclusive;
            combined.bound = std::max(combined.bound, v.bound);
        }
        if (combined.kind == VerdictKind::growing) any_growing = true;
        if (combined.kind != VerdictKind::bounded) all_bounded = false;
        out.per_function.push_back(combined);
        out.results.push_back(std::move(flat));
    }
    if (any_growing) out.kind = SpectrumKind::non_discrete;
    else if (all_bounded) out.kind = SpectrumKind::discrete_like;
    else out.kind = SpectrumKind::inconclusive;
    return out;
}

} // namespace dircx
