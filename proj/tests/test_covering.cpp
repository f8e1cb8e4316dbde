#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>
#include <memory>

#include "dircomplex/covering.hpp"
#include "dircomplex/rng.hpp"

using namespace dircx;

namespace {

DistMatrix line_matrix(const std::vector<double>& xs) {
    DistMatrix dm;
    dm.n = static_cast<int>(xs.size());
    dm.d.assign(xs.size() * xs.size(), 0.0);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j) dm.d[i * xs.size() + j] = std::fabs(xs[i] - xs[j]);
    return dm;
}

DistMatrix discrete_matrix(int n) {
    DistMatrix dm;
    dm.n = n;
    dm.d.assign(static_cast<std::size_t>(n) * n, 1.0);
    for (int i = 0; i < n; ++i) dm.d[static_cast<std::size_t>(i) * n + i] = 0.0;
    return dm;
}

DistMatrix random_matrix(Rng& rng, int n) {
    // random points in the unit square; a genuine metric so the sandwich holds
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

// Exhaustive oracle: smallest set of centers whose open eps-balls cover at
// least `threshold` points (threshold < 0 means all n).
int brute_force_cover(const DistMatrix& dm, double eps, int threshold = -1) {
    int n = dm.n;
    int target = threshold < 0 ? n : threshold;
    std::vector<std::uint32_t> ball(static_cast<std::size_t>(n), 0);
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < n; ++p)
            if (dm.at(c, p) < eps) ball[static_cast<std::size_t>(c)] |= 1u << p;
    int best = n + 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size >= best) continue;
        std::uint32_t cov = 0;
        for (int c = 0; c < n; ++c)
            if (mask & (1u << c)) cov |= ball[static_cast<std::size_t>(c)];
        if (std::popcount(cov) >= target) best = size;
    }
    return best;
}

} // namespace

TEST_CASE("four point line frozen examples") {
    auto dm = line_matrix({0.0, 0.3, 0.6, 0.9});

    auto exact = cover_exact(dm, 0.35, 1 << 20);
    REQUIRE(exact.size.has_value());
    CHECK(*exact.size == 2);

    auto greedy = cover_greedy(dm, 0.35);
    CHECK(greedy.size == 2);

    CHECK(separated_lower(dm, 0.7) == 2); // greedy by index keeps {0, 0.9}

    auto one = cover_exact(dm, 1.0, 1 << 20);
    REQUIRE(one.size.has_value());
    CHECK(*one.size == 1); // eps beyond the diameter

    auto all = cover_exact(dm, 0.2, 1 << 20);
    REQUIRE(all.size.has_value());
    CHECK(*all.size == 4); // eps below the minimum positive distance
}

TEST_CASE("discrete metric spot values") {
    auto dm = discrete_matrix(7);
    CHECK(cover_greedy(dm, 0.5).size == 7);
    CHECK(separated_lower(dm, 0.5) == 7);
    auto exact = cover_exact(dm, 0.5, 1 << 20);
    REQUIRE(exact.size.has_value());
    CHECK(*exact.size == 7);
    CHECK(cover_greedy(dm, 1.5).size == 1);
}

TEST_CASE("exact solver equals exhaustive enumeration on 200 random instances") {
    Rng rng(2024);
    for (int t = 0; t < 200; ++t) {
        int n = 4 + static_cast<int>(rng.uniform_int(9)); // 4..12
        auto dm = random_matrix(rng, n);
        double eps = 0.08 + 0.5 * rng.uniform();
        auto exact = cover_exact(dm, eps, 1 << 22);
        REQUIRE(exact.size.has_value());
        CHECK(*exact.size == brute_force_cover(dm, eps));

        // sandwich on the same instance
        auto greedy = cover_greedy(dm, eps);
        CHECK(separated_lower(dm, 2.0 * eps) <= *exact.size);
        CHECK(*exact.size <= greedy.size);

        // partial cover against the oracle
        int target = (3 * n + 3) / 4;
        auto part = cover_exact(dm, eps, 1 << 22, target);
        REQUIRE(part.size.has_value());
        CHECK(*part.size == brute_force_cover(dm, eps, target));
        CHECK(*part.size <= *exact.size);
    }
}

TEST_CASE("exact centers really cover") {
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        int n = 6 + static_cast<int>(rng.uniform_int(7));
        auto dm = random_matrix(rng, n);
        double eps = 0.15 + 0.3 * rng.uniform();
        auto exact = cover_exact(dm, eps, 1 << 22);
        REQUIRE(exact.size.has_value());
        for (int p = 0; p < n; ++p) {
            bool covered = false;
            for (int c : exact.centers) covered = covered || dm.at(c, p) < eps;
            CHECK(covered);
        }
    }
}

TEST_CASE("budget exhaustion reports unknown, never a wrong number") {
    Rng rng(77);
    int unknowns = 0;
    for (int t = 0; t < 40; ++t) {
        auto dm = random_matrix(rng, 12);
        double eps = 0.12 + 0.2 * rng.uniform();
        auto tight = cover_exact(dm, eps, 3);
        if (!tight.size) {
            ++unknowns;
        } else {
            CHECK(*tight.size == brute_force_cover(dm, eps));
        }
    }
    CHECK(unknowns > 0);
}

TEST_CASE("counts are nonincreasing in eps") {
    Rng rng(31);
    for (int t = 0; t < 25; ++t) {
        auto dm = random_matrix(rng, 11);
        int prev_exact = 1 << 20, prev_sep = 1 << 20;
        for (double eps : {0.1, 0.2, 0.35, 0.6, 1.0}) {
            auto exact = cover_exact(dm, eps, 1 << 22);
            REQUIRE(exact.size.has_value());
            CHECK(*exact.size <= prev_exact);
            prev_exact = *exact.size;
            int sep = separated_lower(dm, eps);
            CHECK(sep <= prev_sep);
            prev_sep = sep;
        }
    }
}

TEST_CASE("partial cover is never harder than the full cover") {
    Rng rng(91);
    for (int t = 0; t < 25; ++t) {
        auto dm = random_matrix(rng, 12);
        double eps = 0.1 + 0.3 * rng.uniform();
        auto full = cover_result_full(dm, 1, eps, 1 << 22);
        auto part = cover_result_partial(dm, 1, eps, 1 << 22);
        REQUIRE(full.exact.has_value());
        REQUIRE(part.exact.has_value());
        CHECK(*part.exact <= *full.exact);
        CHECK(part.greedy_upper <= full.greedy_upper);
    }
}

TEST_CASE("greedy tie break picks the lowest index") {
    // two symmetric clusters; both cluster centers cover 3 points each
    auto dm = line_matrix({0.0, 0.1, 0.2, 1.0, 1.1, 1.2});
    auto greedy = cover_greedy(dm, 0.15);
    REQUIRE(greedy.size >= 2);
    CHECK(greedy.centers[0] == 1); // ball at 0.1 covers {0,0.1,0.2}; lowest such index
}

TEST_CASE("verdict classification on synthetic count tables") {
    auto mk = [](std::vector<std::pair<int, int>> lu) {
        std::vector<CoverResult> rs;
        int k = 1;
        for (auto [lo, up] : lu) {
            CoverResult r;
            r.k = k++;
            r.eps = 0.25;
            r.separated_lower = lo;
            r.greedy_upper = up;
            rs.push_back(r);
        }
        return rs;
    };

    auto bounded = classify_counts(mk({{2, 5}, {3, 6}, {3, 6}, {3, 6}}), 100);
    CHECK(bounded.kind == VerdictKind::bounded);
    CHECK(bounded.bound == 6);

    auto growing = classify_counts(mk({{4, 8}, {8, 16}, {16, 32}, {32, 64}}), 1000);
    CHECK(growing.kind == VerdictKind::growing);

    auto saturated = classify_counts(mk({{40, 70}, {80, 90}, {95, 96}, {95, 96}}), 100);
    CHECK(saturated.kind == VerdictKind::growing);

    auto mixed = classify_counts(mk({{2, 5}, {2, 10}, {2, 20}, {2, 40}}), 1000);
    CHECK(mixed.kind == VerdictKind::inconclusive);
}

TEST_CASE("classify demands a usable k grid") {
    RotationSystem sys(0.3819660112501051, 0.5412658773652741);
    Direction dir(Slope::from_rational(0, 1), 1.0);
    MetricSeq ms(sys, dir, Family::mean);
    auto sample = sample_measure(sys, 32, 1);
    CHECK_THROWS(classify(ms, sample, {1, 2, 3}, {0.25}, 0, true));
    CHECK_THROWS(classify(ms, sample, {1, 2, 4, 8}, {0.25}, 0, true));
    CHECK_NOTHROW(classify(ms, sample, {1, 2, 4, 16}, {0.25}, 0, true));
}

TEST_CASE("span wrappers agree with the matrix path") {
    RotationSystem sys(0.3819660112501051, 0.5412658773652741);
    Direction dir(Slope::from_rational(1, 2), 1.0);
    MetricSeq ms(sys, dir, Family::bowen);
    auto sample = sample_measure(sys, 64, 9);
    auto top = span_topological(ms, sample, 4, 0.25, 1 << 22);
    REQUIRE(top.exact.has_value());
    // two open arcs of radius 0.25 cover the circle up to boundary points
    CHECK(*top.exact >= 2);
    CHECK(*top.exact <= 3);
    auto meas = span_measure(ms, sample, 4, 0.25, 1 << 22);
    REQUIRE(meas.exact.has_value());
    CHECK(*meas.exact == 2); // arcs of length 0.5 cover 3/4 of the sample easily
    CHECK(meas.greedy_upper <= top.greedy_upper);
}
