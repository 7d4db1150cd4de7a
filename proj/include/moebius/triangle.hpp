#pragma once

#include <array>

#include "moebius/cycle.hpp"

namespace moebius {

// Walking the boundary with the triangle on the left visits A -> B -> C (ABC) or A -> C -> B (ACB).
enum class Orientation { ABC, ACB };
const char* to_string(Orientation o);

struct TriangleSpec {
    Point A, B, C;
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    Orientation orientation = Orientation::ABC;
};

struct DigonOffsets {
    double alpha0 = 0.0, beta0 = 0.0, gamma0 = 0.0;
};

struct TriangleSides {
    OrientedCycle a, b, c;  // a through B, C; b through A, C; c through A, B
    OrientedCycle s;        // circumcircle, oriented against the triangle
    Point A, B, C;
    Orientation orientation = Orientation::ABC;
    // Some angle is pi and the other two are equal (a digon or a half-plane).
    bool degenerate = false;
};

struct Angles {
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

// -pi < beta + gamma - alpha < 3 pi and the two cyclic variants.
bool check_angles(double alpha, double beta, double gamma);

DigonOffsets digon_offsets(double alpha, double beta, double gamma);

TriangleSides synthesize(const TriangleSpec& spec);

// Inner angles in [0, 2 pi) from the oriented tangents at the stored vertices.
Angles measure_angles(const TriangleSides& sides);

enum class TriangleModel { Hyperbolic, Euclidean, Spherical, PureMoebius };
const char* to_string(TriangleModel m);

// Requires a proper triangle (every angle in [0, pi)).
TriangleModel classify_model(const Angles& angles, double tol = kEps);
TriangleModel classify_model(const TriangleSides& sides, double tol = 1e-7);

enum class SideSplit { NoSplit, OnCircumcircle, Splits };
const char* to_string(SideSplit s);

// which = 0, 1, 2 for sides a, b, c. Decided from the angles: side a splits iff alpha < beta + gamma - pi.
SideSplit side_split(const Angles& angles, int which, double tol = kEps);
SideSplit side_split(const TriangleSides& sides, int which, double tol = 1e-7);

// Same verdict read from the geometry: sign of the side's quadratic form at the opposite vertex.
SideSplit side_split_geometric(const TriangleSides& sides, int which, double tol = 1e-7);

}  // namespace moebius
