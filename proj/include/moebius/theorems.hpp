#pragma once

#include <array>
#include <optional>

#include "moebius/trilinear.hpp"

namespace moebius {

// ---------------------------------------------------------------- quadratic forms

struct PencilTypeX {
    double X = 0.0;
    double scale = 0.0;  // largest monomial magnitude, sets the parabolic band
    PencilType type = PencilType::Elliptic;
};
PencilTypeX pencil_type_X(const TriangleFrame& f, const PencilTrilinear& p, double tol = kEps);

struct CycleTypeY {
    double Y = 0.0;
    double scale = 0.0;
    CycleKind kind = CycleKind::Elliptic;  // from the sign of Y
    CycleClass direct;                     // classify() of the assembled matrix
};
CycleTypeY cycle_type_Y(const TriangleFrame& f, const Trilinear& t, double tol = kEps);

// ---------------------------------------------------------------- cevians

// Cevian at vertex i (0, 1, 2) with splitting factor lambda against the two other basis
// cycles taken cyclically: n = q basis(i+1) - p basis(i+2).
Trilinear cevian(int vertex, const ProjectiveReal& lambda);
// The cevian as an oriented cycle: positive scaling of q basis(i+1) - p basis(i+2).
OrientedCycle cevian_cycle(const TriangleFrame& f, int vertex, const ProjectiveReal& lambda);

struct CevaResult {
    bool collinear = false;
    double det = 0.0;  // q1 q2 q3 - p1 p2 p3 on unit-length factors
    std::array<Trilinear, 3> cevians;
    std::optional<PencilTrilinear> pencil;
    PencilTypeX type;                        // of the pencil, when collinear
    std::optional<ProjectiveReal> mutual;    // (n_a, c; b)(c, n_b; a), when n_a, n_b are elliptic
};
CevaResult ceva(const TriangleFrame& f, const ProjectiveReal& lambda, const ProjectiveReal& mu,
                const ProjectiveReal& nu, double tol = 1e-9);

struct MenelausResult {
    bool concurrent = false;
    double det = 0.0;  // p1 p2 p3 + q1 q2 q3 on unit-length factors
    std::array<PencilTrilinear, 3> pencils;  // G(a, n_a), G(b, n_b), G(c, n_c)
    std::optional<Trilinear> common;
    CycleTypeY type;                          // of the common cycle, when concurrent
    std::optional<ProjectiveReal> factor;     // nu (b, n_a; c), when n_a is elliptic
};
MenelausResult menelaus(const TriangleFrame& f, const ProjectiveReal& lambda, const ProjectiveReal& mu,
                        const ProjectiveReal& nu, double tol = 1e-9);

struct SplittingCevian {
    PencilType type = PencilType::Elliptic;
    std::optional<int> splitter;   // index of the cevian splitting the other two
    std::array<double, 3> values{};  // a, b, c
};
// Reads the values off the cevians of the pencil through direct splitting factors.
SplittingCevian splitting_cevian(const TriangleFrame& f, const PencilTrilinear& p, double tol = 1e-9);
// Closed form for a proper triangle with the given angles.
SplittingCevian splitting_cevian(const Angles& g, const PencilTrilinear& p, double tol = 1e-9);
// Verdict from three magnitudes: elliptic under strict triangle inequalities.
SplittingCevian triangle_inequality_verdict(const std::array<double, 3>& values, double tol = 1e-9);

struct CevianCos {
    double formula = 0.0;  // (n,b;c)<a,b> + (n,c;b)<a,c> with factors from the normalization
    double direct = 0.0;   // <a, n>
};
CevianCos cevian_cos(const TriangleFrame& f, int vertex, const ProjectiveReal& lambda);

// ---------------------------------------------------------------- centers

// (b, c; h_a) = <a,b> : <a,c>; nullopt when both vanish.
std::optional<ProjectiveReal> altitude(const TriangleFrame& f, int vertex, double tol = 1e-9);

struct Orthocenter {
    PencilTrilinear pencil;           // product form (cos b cos c : cos a cos c : cos a cos b)
    PencilTypeX type;
    std::optional<double> X_display;  // X at the reciprocal coordinates, when no cosine vanishes
};
std::optional<Orthocenter> orthocenter(const TriangleFrame& f, double tol = 1e-9);
// tan^2 a + tan^2 b + tan^2 c + 6 + 2 (cos^2 a + cos^2 b + cos^2 c) / (cos a cos b cos c).
double orthocenter_X_display(const Angles& g);

struct Center {
    PencilTrilinear pencil;
    PencilTypeX type;                 // from the quadratic form
    PencilType predicted = PencilType::Elliptic;  // from the half-angle inequalities
    std::optional<int> splitter;
};
struct Centers {
    Center incenter;
    std::array<Center, 3> excenters;
};
// Requires a proper triangle frame (|<.,.>| < 1 with angles read as arccos(-<.,.>)).
Centers incenter_excenters(const TriangleFrame& f, double tol = 1e-9);
Angles frame_angles(const TriangleFrame& f);

enum class Excircle { Circle, Horocycle, Equidistant };
const char* to_string(Excircle e);
Excircle excircle_class(const Angles& g, int side, double tol = 1e-9);

// ---------------------------------------------------------------- duality and conjugation

struct DualityMap {
    Eigen::Matrix3d T;
    Eigen::Matrix3d gram;
};
DualityMap duality(const TriangleFrame& f);
Trilinear complement_pencil(const DualityMap& d, const PencilTrilinear& p);
PencilTrilinear complement_cycle(const DualityMap& d, const Trilinear& t);

PencilTrilinear isogonal_pencil(const PencilTrilinear& p);
Trilinear isogonal_cycle(const Trilinear& t);

}  // namespace moebius
