#pragma once

#include <optional>
#include <vector>

#include "moebius/cycle.hpp"

namespace moebius {

// lambda = p / q on the extended real line; infinity is (1, 0).
struct ProjectiveReal {
    double p = 0.0;
    double q = 1.0;

    ProjectiveReal() = default;
    ProjectiveReal(double p_, double q_);

    static ProjectiveReal of(double value) { return {value, 1.0}; }
    static ProjectiveReal infinity() { return {1.0, 0.0}; }

    bool is_infinite(double tol = kEps) const;
    bool is_zero(double tol = kEps) const;
    double value() const { return p / q; }
    ProjectiveReal inverse() const { return {q, p}; }
    ProjectiveReal operator-() const { return {-p, q}; }
    // Unit length with q >= 0 (p > 0 at infinity).
    ProjectiveReal normalized() const;
};

ProjectiveReal operator*(const ProjectiveReal& a, const ProjectiveReal& b);
// Sine of the angle between the two lines through the origin; 0 iff equal.
double projective_distance(const ProjectiveReal& a, const ProjectiveReal& b);
bool same(const ProjectiveReal& a, const ProjectiveReal& b, double tol = 1e-9);

enum class PencilType { Elliptic, Parabolic, Hyperbolic };
const char* to_string(PencilType t);

class Pencil {
public:
    Pencil(const OrientedCycle& a, const OrientedCycle& b, double tol = kEps);

    const OrientedCycle& a() const { return a_; }
    const OrientedCycle& b() const { return b_; }
    double xi() const { return xi_; }              // <a,b>
    double gram_det() const { return 1.0 - xi_ * xi_; }
    PencilType type() const { return type_; }

private:
    OrientedCycle a_, b_;
    double xi_;
    PencilType type_;
};

Pencil span(const OrientedCycle& a, const OrientedCycle& b, double tol = kEps);
// Pencil spanned by two independent generalized cycles, with an elliptic basis chosen inside it.
Pencil span_vectors(const CycleVec& u, const CycleVec& v, double tol = kEps);

// Type of the 2-space spanned by two generalized cycles, by the sign of its Gram determinant.
PencilType subspace_type(const CycleVec& u, const CycleVec& v, double tol = kEps);

struct Member {
    CycleVec vec;
    CycleClass cls;
};
// q M - p N for lambda = p / q.
Member member(const Pencil& P, const ProjectiveReal& lambda, double tol = kEps);

inline constexpr double kMembershipTol = 1e-8;

// lambda with c ~ M - lambda N, from a least-squares fit of c in span(M, N).
ProjectiveReal splitting_factor(const OrientedCycle& a, const OrientedCycle& b, const CycleVec& c,
                                double tol = kMembershipTol);
// Relative residual of projecting c onto span(a, b).
double membership_residual(const OrientedCycle& a, const OrientedCycle& b, const CycleVec& c);

Pencil orthogonal_pencil(const Pencil& P, double tol = kEps);

std::vector<Point> distinguished_points(const Pencil& P, double tol = kEps);

struct CevianRange {
    PencilType type = PencilType::Elliptic;
    double xi = 0.0;
    // Hyperbolic: closed forbidden interval [gap_lo, gap_hi]. Parabolic: the single forbidden value xi.
    std::optional<double> gap_lo, gap_hi;
    std::optional<double> forbidden;
    ProjectiveReal bisector;
    std::optional<ProjectiveReal> external_bisector;  // elliptic only
};

CevianRange cevian_range(const OrientedCycle& a, const OrientedCycle& b, double tol = kEps);
// True when lambda gives an elliptic member (lies outside the forbidden set).
bool admissible(const CevianRange& range, const ProjectiveReal& lambda, double tol = kEps);

OrientedCycle bisector(const OrientedCycle& a, const OrientedCycle& b, double tol = kEps);
std::optional<OrientedCycle> external_bisector(const OrientedCycle& a, const OrientedCycle& b,
                                               double tol = kEps);

struct Collinearity {
    bool collinear = false;
    double residual = 0.0;        // smallest / largest singular value of the row-normalized 3x4 matrix
    double gram_identity = 0.0;   // ab^2 + bc^2 + ac^2 - 2 ab bc ac - 1
};

Collinearity collinear3(const CycleVec& a, const CycleVec& b, const CycleVec& c, double tol = 1e-8);
inline Collinearity collinear3(const OrientedCycle& a, const OrientedCycle& b, const OrientedCycle& c,
                               double tol = 1e-8) {
    return collinear3(a.vec(), b.vec(), c.vec(), tol);
}

}  // namespace moebius
