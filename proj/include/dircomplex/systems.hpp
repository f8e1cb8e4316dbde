#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "dircomplex/lattice.hpp"
#include "dircomplex/rng.hpp"

namespace dircx {

// Circle / torus point, coordinates in [0,1).
struct TorusPoint {
    std::vector<double> x;
};

// Point of a 2D subshift, represented by its restriction to a square window
// of the given radius. Translations only move the offset into the shared
// grid; the usable radius shrinks as the offset grows.
struct GridPoint {
    std::shared_ptr<const std::vector<std::uint8_t>> grid; // (2R+1)^2 row-major
    int radius = 0;
    long long om = 0, on = 0;

    int remaining() const;
    std::uint8_t at(long long i, long long j) const; // relative to current origin
};

// Point of a 1D subshift (window of radius R on a line).
struct LinePoint {
    std::shared_ptr<const std::vector<std::uint8_t>> line; // 2R+1 symbols
    int radius = 0;
    long long off = 0;

    int remaining() const;
    std::uint8_t at(long long i) const;
};

// Finite-state point.
struct StatePoint {
    int state = 0;
};

struct SuspensionPoint; // defined in suspension.hpp

using Point = std::variant<TorusPoint, GridPoint, LinePoint, StatePoint,
                           std::shared_ptr<SuspensionPoint>>;

// Abstract Z^q-action: immutable after construction, shareable across tasks.
class ActionSystem {
public:
    virtual ~ActionSystem() = default;

    virtual int q() const { return 2; }
    virtual double diameter() const = 0;
    virtual std::string kind() const = 0;

    virtual Point action(const LatticeVec& w, const Point& x) const = 0;
    virtual double base_metric(const Point& x, const Point& y) const = 0;

    // One draw from the designated invariant measure.
    virtual Point sample(Rng& rng) const = 0;

    // A companion point at base distance < target (close-pair kernel for the
    // equicontinuity probes). May return a copy of x when no closer
    // perturbation is representable.
    virtual Point perturb(const Point& x, double target, Rng& rng) const = 0;
};

// X = circle, T^(m,n)x = x + m*alpha + n*gamma mod 1, mu = Lebesgue.
class RotationSystem final : public ActionSystem {
public:
    RotationSystem(double alpha, double gamma);

    double diameter() const override { return 0.5; }
    std::string kind() const override { return "rotation"; }
    Point action(const LatticeVec& w, const Point& x) const override;
    double base_metric(const Point& x, const Point& y) const override;
    Point sample(Rng& rng) const override;
    Point perturb(const Point& x, double target, Rng& rng) const override;

    double alpha() const { return alpha_; }
    double gamma() const { return gamma_; }

private:
    double alpha_, gamma_;
};

// X = {0..a-1}^{Z^2}, T^(m,n) = translation, mu = uniform Bernoulli,
// d(x,y) = 2^-r with r the least Chebyshev radius of disagreement.
class FullShift final : public ActionSystem {
public:
    FullShift(int alphabet, int radius, int resolution = 24);

    double diameter() const override { return 1.0; }
    std::string kind() const override { return "fullshift"; }
    Point action(const LatticeVec& w, const Point& x) const override;
    double base_metric(const Point& x, const Point& y) const override;
    Point sample(Rng& rng) const override;
    Point perturb(const Point& x, double target, Rng& rng) const override;

    int alphabet() const { return alphabet_; }
    int radius() const { return radius_; }

private:
    int alphabet_, radius_, resolution_;
};

// X = {0..a-1}^Z, T^(m,n) = sigma^(m-n), mu = uniform Bernoulli.
class SkewShift final : public ActionSystem {
public:
    SkewShift(int alphabet, int radius, int resolution = 24);

    double diameter() const override { return 1.0; }
    std::string kind() const override { return "skewshift"; }
    Point action(const LatticeVec& w, const Point& x) const override;
    double base_metric(const Point& x, const Point& y) const override;
    Point sample(Rng& rng) const override;
    Point perturb(const Point& x, double target, Rng& rng) const override;

    int alphabet() const { return alphabet_; }
    int radius() const { return radius_; }

private:
    int alphabet_, radius_, resolution_;
};

// Finite X of N states, two commuting permutations, discrete metric,
// uniform measure.
class PermutationSystem final : public ActionSystem {
public:
    PermutationSystem(std::vector<int> pi1, std::vector<int> pi2);

    // Identity first generator is allowed; pi2 = pi1 rotated, etc.
    static PermutationSystem cyclic(int n, int step1, int step2);

    double diameter() const override { return 1.0; }
    std::string kind() const override { return "permutation"; }
    Point action(const LatticeVec& w, const Point& x) const override;
    double base_metric(const Point& x, const Point& y) const override;
    Point sample(Rng& rng) const override;
    Point perturb(const Point& x, double target, Rng& rng) const override;

    int size() const { return n_; }

private:
    int apply_power(const std::vector<std::vector<int>>& powers, long long e, int s) const;

    int n_;
    std::vector<std::vector<int>> pow1_, pow2_; // powers 0..order-1
};

// T^w x for every w in the window, in window enumeration order.
std::vector<Point> orbit_segment(const ActionSystem& sys, const Point& x,
                                 const StripWindow& window);

// n independent draws from the invariant measure, deterministic given seed.
std::vector<Point> sample_measure(const ActionSystem& sys, int n, std::uint64_t seed);

} // namespace dircx
