#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dircx {

using LatticeVec = std::vector<long long>;

// A slope is either an exact rational p/r (reduced, r > 0) or a float tagged
// irrational. Rational slopes keep strip membership exact via cross-multiplied
// integer inequalities; float slopes use plain floor/ceil on beta*m +- b, so
// results near exact boundaries depend on float rounding.
struct Slope {
    bool rational = true;
    long long num = 0;
    long long den = 1;
    double value = 0.0; // float slope when !rational; num/den otherwise

    static Slope from_rational(long long p, long long r);
    static Slope from_double(double v);
    // Parses "p/r" as rational, anything else as a float slope.
    static Slope parse(const std::string& s);

    double as_double() const { return rational ? static_cast<double>(num) / static_cast<double>(den) : value; }
    std::string to_string() const;
};

// Direction vector v = (1, beta_2, ..., beta_q) with strip half-widths b.
struct Direction {
    int q = 2;
    std::vector<Slope> beta; // size q-1
    std::vector<double> b;   // size q-1, all > 0

    Direction() = default;
    Direction(Slope beta2, double b2); // q = 2 convenience
    Direction(int q_, std::vector<Slope> beta_, std::vector<double> b_);

    void validate() const; // throws std::invalid_argument on bad shape
    Direction with_b(double b2) const; // q = 2, replace half-width
};

struct StripWindow {
    Direction direction;
    int k = 0;
    std::vector<LatticeVec> points; // lexicographically sorted, unique
};

// Integer range [lo, hi] of coordinate axis (2-based) in column m1; may be
// empty (lo > hi) when b < 0.5.
void strip_column_range(const Direction& d, int axis, long long m1,
                        long long& lo, long long& hi);

StripWindow strip_window(const Direction& d, int k);

// Membership in the untruncated strip.
bool strip_contains(const Direction& d, const LatticeVec& w);

// #window(b_small) / #window(b=1) at depth k; q = 2 only.
double strip_ratio(const Direction& d, double b_small, int k);

} // namespace dircx
