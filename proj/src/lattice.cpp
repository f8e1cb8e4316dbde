#include "dircomplex/lattice.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace dircx {

Slope Slope::from_rational(long long p, long long r) {
    if (r == 0) throw std::invalid_argument("slope denominator is zero");
    if (r < 0) { p = -p; r = -r; }
    long long g = std::gcd(p < 0 ? -p : p, r);
    if (g > 1) { p /= g; r /= g; }
    Slope s;
    s.rational = true;
    s.num = p;
    s.den = r;
    s.value = static_cast<double>(p) / static_cast<double>(r);
    return s;
}

Slope Slope::from_double(double v) {
    Slope s;
    s.rational = false;
    s.value = v;
    return s;
}

Slope Slope::parse(const std::string& str) {
    auto pos = str.find('/');
    if (pos != std::string::npos) {
        long long p = std::stoll(str.substr(0, pos));
        long long r = std::stoll(str.substr(pos + 1));
        return from_rational(p, r);
    }
    // Integer literals stay exact rationals.
    bool integral = !str.empty();
    for (std::size_t i = 0; i < str.size(); ++i) {
        char c = str[i];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && (c == '-' || c == '+'))))
            integral = false;
    }
    if (integral) return from_rational(std::stoll(str), 1);
    return from_double(std::stod(str));
}

std::string Slope::to_string() const {
    if (rational) {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

Direction::Direction(Slope beta2, double b2) : q(2), beta{beta2}, b{b2} { validate(); }

Direction::Direction(int q_, std::vector<Slope> beta_, std::vector<double> b_)
    : q(q_), beta(std::move(beta_)), b(std::move(b_)) {
    validate();
}

void Direction::validate() const {
    if (q < 2) throw std::invalid_argument("direction requires q >= 2");
    if (static_cast<int>(beta.size()) != q - 1 || static_cast<int>(b.size()) != q - 1)
        throw std::invalid_argument("direction: beta and b must have length q-1");
    for (double w : b)
        if (!(w > 0.0)) throw std::invalid_argument("direction: half-widths must be positive");
}

Direction Direction::with_b(double b2) const {
    Direction d = *this;
    for (auto& w : d.b) w = b2;
    d.validate();
    return d;
}

namespace {

// beta*m - b <= n <= beta*m + b, cross-multiplied for rational slopes.
bool column_contains(const Slope& s, double b, long long m, long long n) {
    if (s.rational) {
        double t = static_cast<double>(s.num * m); // exact for the ranges used
        double br = b * static_cast<double>(s.den);
        double nr = static_cast<double>(n * s.den);
        return t - br <= nr && nr <= t + br;
    }
    double c = s.value * static_cast<double>(m);
    return c - b <= static_cast<double>(n) && static_cast<double>(n) <= c + b;
}

} // namespace

void strip_column_range(const Direction& d, int axis, long long m1,
                        long long& lo, long long& hi) {
    const Slope& s = d.beta[axis - 2];
    double b = d.b[axis - 2];
    double c = s.as_double() * static_cast<double>(m1);
    lo = static_cast<long long>(std::ceil(c - b));
    hi = static_cast<long long>(std::floor(c + b));
    // Fix up float rounding at the boundary with the membership predicate.
    while (column_contains(s, b, m1, lo - 1)) --lo;
    while (!column_contains(s, b, m1, lo) && lo <= hi) ++lo;
    while (column_contains(s, b, m1, hi + 1)) ++hi;
    while (!column_contains(s, b, m1, hi) && hi >= lo) --hi;
}

StripWindow strip_window(const Direction& d, int k) {
    d.validate();
    if (k < 1) throw std::invalid_argument("strip_window: k must be >= 1");
    StripWindow w;
    w.direction = d;
    w.k = k;
    std::vector<std::pair<long long, long long>> ranges(d.q - 1);
    for (long long m1 = 0; m1 < k; ++m1) {
        bool empty = false;
        for (int axis = 2; axis <= d.q; ++axis) {
            auto& [lo, hi] = ranges[axis - 2];
            strip_column_range(d, axis, m1, lo, hi);
            if (lo > hi) { empty = true; break; }
        }
        if (empty) continue; // allowed when b < 0.5
        LatticeVec pt(d.q);
        pt[0] = m1;
        // Cartesian product in lexicographic order.
        for (int i = 0; i < d.q - 1; ++i) pt[i + 1] = ranges[i].first;
        for (;;) {
            w.points.push_back(pt);
            int i = d.q - 2;
            while (i >= 0) {
                if (pt[i + 1] < ranges[i].second) { ++pt[i + 1]; break; }
                pt[i + 1] = ranges[i].first;
                --i;
            }
            if (i < 0) break;
        }
    }
    return w;
}

bool strip_contains(const Direction& d, const LatticeVec& w) {
    d.validate();
    if (static_cast<int>(w.size()) != d.q)
        throw std::invalid_argument("strip_contains: dimension mismatch");
    for (int axis = 2; axis <= d.q; ++axis)
        if (!column_contains(d.beta[axis - 2], d.b[axis - 2], w[0], w[axis - 1]))
            return false;
    return true;
}

double strip_ratio(const Direction& d, double b_small, int k) {
    if (d.q != 2) throw std::invalid_argument("strip_ratio: q = 2 only");
    if (!(b_small > 0.0 && b_small <= 1.0))
        throw std::invalid_argument("strip_ratio: b_small must be in (0, 1]");
    auto denom = strip_window(d.with_b(1.0), k);
    if (denom.points.empty()) throw std::runtime_error("strip_ratio: empty denominator window");
    auto numer = strip_window(d.with_b(b_small), k);
    return static_cast<double>(numer.points.size()) / static_cast<double>(denom.points.size());
}

} // namespace dircx
