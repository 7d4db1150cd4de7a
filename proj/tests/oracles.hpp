#pragma once

// Test-side oracles computed from plain Euclidean geometry, independent of the
// matrix machinery under test.

#include <cmath>
#include <complex>
#include <random>

#include "moebius/cycle.hpp"

namespace oracle {

using cplx = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

// Inner product of two oriented circles from centers and signed radii.
inline double circle_cos(cplx ca, double ra, cplx cb, double rb) {
    double d2 = std::norm(ca - cb);
    return (ra * ra + rb * rb - d2) / (2.0 * ra * rb);
}

// Inner product of an oriented circle and an oriented line: signed distance of
// the center over the radius, positive when the center is left of the line.
inline double circle_line_cos(cplx c, double r, cplx p, cplx dir) {
    cplx u = dir / std::abs(dir);
    double sd = std::imag(std::conj(u) * (c - p));
    return sd / r;
}

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long long seed) : gen(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
    cplx point(double r = 3.0) { return {uniform(-r, r), uniform(-r, r)}; }
    double radius() {
        double r = uniform(0.2, 3.0);
        return uniform(0.0, 1.0) < 0.5 ? -r : r;
    }
    int sign() { return uniform(0.0, 1.0) < 0.5 ? -1 : 1; }
    moebius::OrientedCycle circle() { return moebius::from_circle(point(), radius()); }
    moebius::OrientedCycle line() {
        double t = uniform(0.0, 2.0 * kPi);
        return moebius::from_line(point(), std::polar(1.0, t));
    }
    moebius::OrientedCycle cycle() { return uniform(0.0, 1.0) < 0.2 ? line() : circle(); }
    // Random map, orientation-reversing with probability 1/3 when allowed.
    moebius::MoebiusMap map(bool allow_anti = true) {
        for (;;) {
            cplx a = point(2.0), b = point(2.0), c = point(2.0), d = point(2.0);
            cplx det = a * d - b * c;
            if (std::abs(det) < 0.3) continue;
            bool anti = allow_anti && uniform(0.0, 1.0) < 1.0 / 3.0;
            return moebius::MoebiusMap(a, b, c, d, anti);
        }
    }
};

// Euclidean reflection/inversion of a finite point in a circle or line.
inline cplx euclid_invert_circle(cplx z, cplx o, double r) { return o + r * r / std::conj(z - o); }

}  // namespace oracle
