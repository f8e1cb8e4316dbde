// Acceptance suite. Usage: acceptance <path-to-cli-binary>
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "dircomplex/equicont.hpp"
#include "dircomplex/spectral.hpp"
#include "dircomplex/suspension.hpp"

using namespace dircx;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail = "") {
    std::printf("%s: criterion %d (%s)%s%s\n", ok ? "PASS" : "FAIL", idx, name,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

std::vector<std::shared_ptr<ActionSystem>> make_zoo(int radius) {
    return {
        std::make_shared<RotationSystem>(0.3819660112501051, 0.5412658773652741),
        std::make_shared<FullShift>(2, radius),
        std::make_shared<SkewShift>(2, radius),
        std::make_shared<PermutationSystem>(PermutationSystem::cyclic(5, 1, 2)),
    };
}

const std::vector<Slope> kBetas = {Slope::from_rational(0, 1), Slope::from_rational(1, 1),
                                   Slope::from_double(1.4142135623730951)};

// ---------------------------------------------------------------- criterion 1

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    long long draws = 0, violations = 0;
    std::vector<Direction> dirs = {
        Direction(Slope::from_rational(0, 1), 1.0),
        Direction(Slope::from_rational(1, 1), 1.0),
        Direction(Slope::from_double(1.4142135623730951), 1.0),
    };
    for (const auto& sys : make_zoo(64))
        for (const auto& dir : dirs) {
            Rng rng(301);
            MetricSeq ms(*sys, dir, Family::bowen);
            for (int t = 0; t < 170; ++t) {
                Point x = sys->sample(rng), y = sys->sample(rng);
                double prev_bowen = -1.0, prev_maxmean = -1.0;
                for (int k : {1, 2, 4, 8, 16}) {
                    auto v = ms.eval_all(x, y, k);
                    if (v.bowen < v.maxmean - 1e-12) ++violations;
                    if (v.maxmean < v.mean - 1e-12) ++violations;
                    if (v.bowen < prev_bowen - 1e-12) ++violations;
                    if (v.maxmean < prev_maxmean - 1e-12) ++violations;
                    prev_bowen = v.bowen;
                    prev_maxmean = v.maxmean;
                    ++draws;
                }
            }
        }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream d;
    d << draws << " draws, " << violations << " violations, " << secs << "s";
    report(1, "metric ordering and monotonicity", draws >= 10000 && violations == 0 && secs < 60,
           d.str());
}

// ---------------------------------------------------------------- criterion 2

DistMatrix random_metric(Rng& rng, int n) {
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < n; ++i) pts.emplace_back(rng.uniform(), rng.uniform());
    DistMatrix dm;
    dm.n = n;
    dm.d.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            dm.d[static_cast<std::size_t>(i) * n + j] =
                std::hypot(pts[i].first - pts[j].first, pts[i].second - pts[j].second);
    return dm;
}

int brute_force(const DistMatrix& dm, double eps) {
    int n = dm.n;
    std::vector<std::uint32_t> ball(static_cast<std::size_t>(n), 0);
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < n; ++p)
            if (dm.at(c, p) < eps) ball[static_cast<std::size_t>(c)] |= 1u << p;
    int best = n + 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) >= best) continue;
        std::uint32_t cov = 0;
        for (int c = 0; c < n; ++c)
            if (mask & (1u << c)) cov |= ball[static_cast<std::size_t>(c)];
        if (std::popcount(cov) == n) best = std::popcount(mask);
    }
    return best;
}

void criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(77);
    int bad = 0;
    for (int t = 0; t < 200; ++t) {
        int n = 4 + static_cast<int>(rng.uniform_int(9));
        auto dm = random_metric(rng, n);
        double eps = 0.08 + 0.5 * rng.uniform();
        auto exact = cover_exact(dm, eps, 1 << 22);
        if (!exact.size) { ++bad; continue; }
        if (*exact.size != brute_force(dm, eps)) ++bad;
        auto greedy = cover_greedy(dm, eps);
        if (separated_lower(dm, 2.0 * eps) > *exact.size) ++bad;
        if (*exact.size > greedy.size) ++bad;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream d;
    d << "200 instances, " << bad << " mismatches, " << secs << "s";
    report(2, "covering solver soundness", bad == 0 && secs < 120, d.str());
}

// ---------------------------------------------------------------- criterion 3

struct Cell3 {
    std::string name;
    std::shared_ptr<ActionSystem> sys;
    Direction dir;
    bool expect_bounded;
};

void criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<int> ks = {1, 2, 4, 8, 16, 32};
    const std::vector<double> eps = {0.5, 0.25, 0.125};
    const std::vector<double> deltas = {0.25, 0.125, 0.0625, 0.03125};
    int radius = 64;
    std::vector<Cell3> cells = {
        {"rotation", std::make_shared<RotationSystem>(0.3819660112501051, 0.5412658773652741),
         Direction(Slope::from_rational(1, 2), 1.0), true},
        {"skewshift beta=1", std::make_shared<SkewShift>(2, radius),
         Direction(Slope::from_rational(1, 1), 1.0), true},
        {"skewshift beta=0", std::make_shared<SkewShift>(2, radius),
         Direction(Slope::from_rational(0, 1), 1.0), false},
        {"fullshift", std::make_shared<FullShift>(2, radius),
         Direction(Slope::from_rational(0, 1), 1.0), false},
    };
    bool ok = true;
    std::ostringstream detail;
    for (const auto& cell : cells) {
        auto sample = sample_measure(*cell.sys, 384, 97);
        for (auto fam : {Family::bowen, Family::maxmean}) {
            MetricSeq ms(*cell.sys, cell.dir, fam);
            auto prof = classify(ms, sample, ks, eps, 0, false);
            bool cov_bounded = true, cov_growing = false;
            for (const auto& v : prof.verdicts) {
                if (v.kind != VerdictKind::bounded) cov_bounded = false;
                if (v.kind == VerdictKind::growing) cov_growing = true;
            }
            ProbeFamily pf = fam == Family::bowen ? ProbeFamily::bowen : ProbeFamily::maxmean;
            auto pairs = make_close_pairs(*cell.sys, deltas, 16, 97);
            bool mod_positive = modulus(*cell.sys, cell.dir, pf, pairs, ks, eps, deltas).positive();
            bool match = cell.expect_bounded ? (cov_bounded && mod_positive)
                                             : (cov_growing && !mod_positive);
            if (!match) {
                ok = false;
                detail << cell.name << "/" << family_name(fam) << " cov_bounded=" << cov_bounded
                       << " cov_growing=" << cov_growing << " modulus=" << mod_positive << "; ";
            }
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    detail << secs << "s";
    report(3, "covering vs equicontinuity modulus", ok && secs < 600, detail.str());
}

// ---------------------------------------------------------------- criterion 4

void criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<int> ks = {1, 2, 4, 8, 16, 32};
    const std::vector<int> deep = {1, 2, 4, 8, 16, 32, 64, 128};
    const std::vector<double> eps = {0.25};
    bool ok = true;
    std::ostringstream detail;
    for (const auto& sys : make_zoo(224))
        for (const auto& beta : kBetas) {
            auto sample = sample_measure(*sys, 512, 41);
            std::vector<VerdictKind> kinds;
            for (double b : {0.5, 1.0, 2.0}) {
                MetricSeq ms(*sys, Direction(beta, b), Family::mean);
                kinds.push_back(classify(ms, sample, ks, eps, 0, true).verdicts[0].kind);
            }
            bool same_b = kinds[0] == kinds[1] && kinds[1] == kinds[2];
            auto sv = spectrum_verdict(*sys, Direction(beta, 1.0), test_battery(*sys),
                                       {0.5, 0.25}, deep, 256, 41);
            bool match = (kinds[1] == VerdictKind::bounded) ==
                         (sv.kind == SpectrumKind::discrete_like);
            bool decided = kinds[1] != VerdictKind::inconclusive &&
                           sv.kind != SpectrumKind::inconclusive;
            if (!(same_b && match && decided)) {
                ok = false;
                detail << sys->kind() << "/" << beta.to_string() << " same_b=" << same_b
                       << " spectral=" << sv.to_string() << "; ";
            }
        }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    detail << secs << "s";
    report(4, "measure complexity across b vs spectral verdict", ok && secs < 600, detail.str());
}

// ---------------------------------------------------------------- criterion 5

void criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream detail;
    for (const auto& sys : make_zoo(96))
        for (const auto& beta : kBetas) {
            auto cv = cross_validate(sys, beta, {0.25}, {1, 2, 4, 8, 16, 32}, 320, 53);
            if (!cv.all_agree) {
                ok = false;
                detail << sys->kind() << "/" << beta.to_string() << " disagrees (";
                for (const auto& v : cv.verdict_rows[0]) detail << v << " ";
                detail << "); ";
            }
        }
    // shared-fiber domination on 10^3 pairs
    long long violations = 0, pairs = 0;
    for (const auto& sys : make_zoo(96)) {
        SuspensionSystem ss(sys, Slope::from_double(1.4142135623730951));
        Rng rng(59);
        for (int t = 0; t < 250; ++t) {
            Point x = sys->sample(rng), y = sys->sample(rng);
            double u = rng.uniform(), v = rng.uniform();
            auto mk = [&](const Point& bp) {
                auto p = std::make_shared<SuspensionPoint>();
                p->x = bp;
                p->u = u;
                p->v0 = v;
                return Point(p);
            };
            int k = 1 + static_cast<int>(rng.uniform_int(16));
            double lhs = suspension_mean_metric(ss, mk(x), mk(y), k);
            double rhs = 0.0;
            for (int i = 0; i < k; ++i) {
                long long fl = static_cast<long long>(std::floor(1.4142135623730951 * i + v));
                rhs += sys->base_metric(sys->action({i, fl}, x), sys->action({i, fl}, y));
            }
            rhs /= k;
            if (lhs < rhs - 1e-12) ++violations;
            ++pairs;
        }
    }
    if (violations != 0) ok = false;
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    detail << pairs << " fiber pairs, " << violations << " violations, " << secs << "s";
    report(5, "suspension cross-validation and domination", ok && secs < 600, detail.str());
}

// ---------------------------------------------------------------- criterion 6

void criterion6() {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<int> ks = {1, 2, 4, 8, 16};
    bool ok = true;
    std::ostringstream detail;
    for (const auto& sys : make_zoo(64))
        for (const auto& beta : kBetas) {
            auto sample = sample_measure(*sys, 512, 67);
            Direction dir(beta, 1.0);
            MetricSeq mm(*sys, dir, Family::maxmean);
            MetricSeq me(*sys, dir, Family::mean);
            auto va = classify(mm, sample, ks, {0.25}, 0, true).verdicts[0];
            auto vb = classify(me, sample, ks, {0.25}, 0, true).verdicts[0];
            if (va.kind != vb.kind) {
                ok = false;
                detail << sys->kind() << "/" << beta.to_string() << " " << va.to_string()
                       << " vs " << vb.to_string() << "; ";
            }
        }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    detail << secs << "s";
    report(6, "maxmean and mean measure verdicts agree", ok && secs < 600, detail.str());
}

// ---------------------------------------------------------------- criterion 7

void criterion7() {
    bool ok = true;
    std::ostringstream detail;

    RotationSystem rot(0.3819660112501051, 0.5412658773652741);
    Direction rd(Slope::from_rational(1, 2), 1.0);
    MetricSeq ms(rot, rd, Family::mean);
    auto sample = sample_measure(rot, 256, 71);
    for (int k : {1, 2, 4, 8, 16}) {
        auto r = span_measure(ms, sample, k, 0.25, 1 << 22);
        if (!r.exact || *r.exact != 2) {
            ok = false;
            detail << "rotation span_mu k=" << k << " exact="
                   << (r.exact ? std::to_string(*r.exact) : std::string("?")) << "; ";
        }
    }

    SkewShift sk(2, 160);
    Direction diag(Slope::from_rational(1, 1), 1.0);
    auto sk_sample = sample_measure(sk, 128, 73);
    for (const auto& f : test_battery(sk))
        for (int k : {1, 4, 16, 64}) {
            auto r = orbit_cover_number(sk, f, sk_sample, diag, k, 0.05, 0);
            if (r.greedy_upper > 3) {
                ok = false;
                detail << "skewshift orbit cover " << f.id << " k=" << k << " -> "
                       << r.greedy_upper << "; ";
            }
        }

    FullShift fsh(2, 32);
    Direction axis(Slope::from_rational(0, 1), 1.0);
    MetricSeq fms(fsh, axis, Family::bowen);
    auto f_sample = sample_measure(fsh, 512, 79);
    int prev = 0;
    for (int k : {1, 2, 4, 8}) {
        auto r = span_topological(fms, f_sample, k, 0.5, 0);
        if (r.separated_lower <= prev) {
            ok = false;
            detail << "fullshift lower k=" << k << " " << r.separated_lower
                   << " after " << prev << "; ";
        }
        prev = r.separated_lower;
    }

    report(7, "quantitative spot values", ok, detail.str());
}

// ---------------------------------------------------------------- criterion 8

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion8(const std::string& cli) {
    namespace fs = std::filesystem;
    fs::path work = fs::temp_directory_path() / "dircomplex_accept";
    fs::create_directories(work);
    fs::path cfg = work / "zoo.json";
    {
        std::ofstream out(cfg);
        out << "{\n"
               "  \"system\": {},\n"
               "  \"directions\": [{\"q\": 2, \"beta\": [\"0/1\"], \"b\": [1.0]}],\n"
               "  \"families\": [\"mean\"],\n"
               "  \"eps_grid\": [0.25],\n"
               "  \"k_grid\": [1, 2, 4, 8, 16],\n"
               "  \"n_samples\": 512,\n"
               "  \"exact_cap\": 0\n"
               "}\n";
    }
    auto run = [&](const std::string& out_dir) {
        std::string cmd = "\"" + cli + "\" zoo-check --config \"" + cfg.string() +
                          "\" --seed 3 --out \"" + out_dir + "\"";
        return std::system(cmd.c_str());
    };
    fs::path a = work / "run_a", b = work / "run_b";
    int rc1 = run(a.string());
    int rc2 = run(b.string());
    bool ok = rc1 == 0 && rc2 == 0;
    std::ostringstream detail;
    if (!ok) detail << "cli exit codes " << rc1 << "/" << rc2 << "; ";
    for (const char* f : {"zoo.csv", "summary.json", "manifest.json"}) {
        std::string ca = slurp(a / f), cb = slurp(b / f);
        if (ca.empty() || ca != cb) {
            ok = false;
            detail << f << " differs or empty; ";
        }
    }
    // the ground-truth matrix should also fully match
    if (slurp(a / "summary.json").find("\"all_match\": true") == std::string::npos) {
        ok = false;
        detail << "zoo verdict matrix mismatch; ";
    }
    report(8, "deterministic zoo-check", ok, detail.str());
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <cli-binary>\n");
        return 2;
    }
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8(argv[1]);
    return g_failures == 0 ? 0 : 1;
}
