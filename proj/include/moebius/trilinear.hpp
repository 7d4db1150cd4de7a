#pragma once

#include <Eigen/Core>
#include <optional>
#include <utility>

#include "moebius/pencil.hpp"
#include "moebius/triangle.hpp"

namespace moebius {

enum class FrameType { Spherical, Euclidean, Hyperbolic };
const char* to_string(FrameType t);

// Cycle [u:v:w] ~ u L + v M + w N in the span of the frame.
struct Trilinear {
    double u = 0.0, v = 0.0, w = 0.0;
    Eigen::Vector3d vec() const { return {u, v, w}; }
    static Trilinear of(const Eigen::Vector3d& t) { return {t(0), t(1), t(2)}; }
};

// Pencil (x:y:z) holding every cycle with u x + v y + w z = 0.
struct PencilTrilinear {
    double x = 0.0, y = 0.0, z = 0.0;
    Eigen::Vector3d vec() const { return {x, y, z}; }
    static PencilTrilinear of(const Eigen::Vector3d& t) { return {t(0), t(1), t(2)}; }
};

// Sine of the angle between the lines through the origin spanned by two triples.
double triple_distance(const Eigen::Vector3d& p, const Eigen::Vector3d& q);
inline bool same(const Trilinear& p, const Trilinear& q, double tol = 1e-9) {
    return triple_distance(p.vec(), q.vec()) <= tol;
}
inline bool same(const PencilTrilinear& p, const PencilTrilinear& q, double tol = 1e-9) {
    return triple_distance(p.vec(), q.vec()) <= tol;
}

class TriangleFrame {
public:
    const OrientedCycle& a() const { return a_; }
    const OrientedCycle& b() const { return b_; }
    const OrientedCycle& c() const { return c_; }
    const OrientedCycle& basis(int i) const { return i == 0 ? a_ : (i == 1 ? b_ : c_); }
    const Eigen::Matrix3d& gram() const { return gram_; }
    double det() const { return det_; }
    FrameType type() const { return type_; }
    double ab() const { return gram_(0, 1); }
    double ac() const { return gram_(0, 2); }
    double bc() const { return gram_(1, 2); }

    friend TriangleFrame frame(const OrientedCycle& a, const OrientedCycle& b, const OrientedCycle& c, double tol);

private:
    TriangleFrame(const OrientedCycle& a, const OrientedCycle& b, const OrientedCycle& c) : a_(a), b_(b), c_(c) {}
    OrientedCycle a_, b_, c_;
    Eigen::Matrix3d gram_;
    double det_ = 0.0;
    FrameType type_ = FrameType::Spherical;
};

// det Gamma within tol (scaled by the largest entry cubed) counts as Euclidean.
TriangleFrame frame(const OrientedCycle& a, const OrientedCycle& b, const OrientedCycle& c, double tol = kEps);
inline TriangleFrame frame(const TriangleSides& t, double tol = kEps) { return frame(t.a, t.b, t.c, tol); }

// Least-squares coordinates of n by orthogonal projection onto the frame's span.
Trilinear coords(const TriangleFrame& f, const CycleVec& n, double tol = kMembershipTol);

struct FrameCycle {
    CycleVec vec;
    CycleClass cls;
    double Y = 0.0;  // t^T Gamma t, equal to -det(vec)
};
FrameCycle cycle_at(const TriangleFrame& f, const Trilinear& t, double tol = kEps);

// Transposed cofactor matrix; adj(G) G = det(G) I.
Eigen::Matrix3d adjugate(const Eigen::Matrix3d& G);

// t^T Gamma t.
double quadratic_Y(const TriangleFrame& f, const Trilinear& t);
// x^T adj(Gamma) x.
double quadratic_X(const TriangleFrame& f, const PencilTrilinear& p);

PencilTrilinear join(const Trilinear& n1, const Trilinear& n2);
Trilinear meet(const PencilTrilinear& p1, const PencilTrilinear& p2);

// 3x3 determinant of the stacked triples, rows scaled to unit max-norm first.
double stacked_det(const Eigen::Vector3d& r1, const Eigen::Vector3d& r2, const Eigen::Vector3d& r3);
bool collinear_det(const Trilinear& n1, const Trilinear& n2, const Trilinear& n3, double tol = 1e-9);
bool concurrent_det(const PencilTrilinear& p1, const PencilTrilinear& p2, const PencilTrilinear& p3,
                    double tol = 1e-9);

// Two independent cycles of a pencil in coordinates.
std::pair<Trilinear, Trilinear> pencil_members(const PencilTrilinear& p);
// The pencil as a pair of cycles (with an elliptic basis).
Pencil pencil_at(const TriangleFrame& f, const PencilTrilinear& p, double tol = kEps);
PencilTrilinear pencil_coords(const TriangleFrame& f, const Pencil& P, double tol = kMembershipTol);

// A point shared by all three frame cycles, searched among the distinguished
// points of the side pencils. Exists iff the frame is Euclidean.
std::optional<Point> common_point(const TriangleFrame& f, double tol = 1e-7);

}  // namespace moebius
