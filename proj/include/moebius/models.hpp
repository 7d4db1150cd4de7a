#pragma once

#include <array>
#include <optional>
#include <vector>

#include "moebius/theorems.hpp"

namespace moebius {

enum class ModelTag { Spherical, Euclidean, HyperbolicHalfPlane };
const char* to_string(ModelTag m);

// Spherical: trace k + n = 0. Euclidean: k = 0. Hyperbolic: real matrix (l_im = 0).
bool is_model_line(ModelTag model, const CycleVec& c, double tol = kEps);

// x + iy -> (-1, x, 0, -x^2 - y^2), a virtual real cycle.
CycleVec hyperbolic_point_to_cycle(cplx z);
// -l/k + i sqrt(det)/|k| for a real matrix with det > 0.
cplx cycle_to_hyperbolic_point(const CycleVec& m, double tol = kEps);

struct PencilInterpretation {
    ModelTag model = ModelTag::Euclidean;
    PencilType type = PencilType::Elliptic;
    std::vector<Point> points;          // pole pair, common point, or ideal point
    std::optional<cplx> direction;      // Euclidean parallel lines, unit and modulo sign
    std::optional<OrientedCycle> line;  // hyperbolic: the line orthogonal to every member
};
PencilInterpretation interpret_pencil(ModelTag model, const Pencil& P, double tol = kEps);

// The real elliptic cycle orthogonal to a, b and the real axis.
OrientedCycle common_perpendicular(const OrientedCycle& a, const OrientedCycle& b, double tol = kEps);
// Distance between disjoint hyperbolic lines, 2 pi |mu(a, b)|.
double line_distance(const OrientedCycle& a, const OrientedCycle& b, double tol = kEps);

enum class MenelausCase { I = 1, II, III, IV, V, VI };
const char* to_string(MenelausCase c);

struct MenelausTaxonomy {
    MenelausCase tag = MenelausCase::I;
    std::array<std::optional<OrientedCycle>, 3> perpendiculars;  // p_a, p_b, p_c when they exist
    CycleVec n;
    CycleKind kind = CycleKind::Elliptic;
};
// Frame of hyperbolic lines with Menelaus cevians (lambda mu nu = -1).
MenelausTaxonomy menelaus_case(const TriangleFrame& f, const ProjectiveReal& lambda, const ProjectiveReal& mu,
                               const ProjectiveReal& nu, double tol = 1e-9);

}  // namespace moebius
