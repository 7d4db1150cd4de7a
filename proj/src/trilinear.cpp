#include "moebius/trilinear.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace moebius {

namespace {

Eigen::Matrix<double, 4, 3> basis_matrix(const TriangleFrame& f) {
    Eigen::Matrix<double, 4, 3> A;
    for (int i = 0; i < 3; ++i) {
        const CycleVec& v = f.basis(i).vec();
        A.col(i) << v.k, v.l_re, v.l_im, v.n;
    }
    return A;
}

Eigen::Vector3d cross_checked(const Eigen::Vector3d& p, const Eigen::Vector3d& q) {
    Eigen::Vector3d r = p.cross(q);
    if (r.norm() <= 1e-12 * p.norm() * q.norm())
        fail(ErrorCode::ProportionalArguments, "triples are proportional");
    return r;
}

}  // namespace

const char* to_string(FrameType t) {
    switch (t) {
        case FrameType::Spherical: return "spherical";
        case FrameType::Euclidean: return "euclidean";
        case FrameType::Hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

double triple_distance(const Eigen::Vector3d& p, const Eigen::Vector3d& q) {
    double np = p.norm(), nq = q.norm();
    if (np == 0.0 || nq == 0.0) return 1.0;
    return p.cross(q).norm() / (np * nq);
}

TriangleFrame frame(const OrientedCycle& a, const OrientedCycle& b, const OrientedCycle& c, double tol) {
    if (collinear3(a, b, c).collinear) fail(ErrorCode::CollinearCycles, "frame cycles are collinear");
    TriangleFrame f(a, b, c);
    f.gram_ << 1.0, inner(a, b), inner(a, c),
               inner(a, b), 1.0, inner(b, c),
               inner(a, c), inner(b, c), 1.0;
    f.det_ = f.gram_.determinant();
    double scale = std::max(1.0, f.gram_.cwiseAbs().maxCoeff());
    double band = tol * scale * scale * scale;
    f.type_ = f.det_ > band ? FrameType::Spherical : (f.det_ < -band ? FrameType::Hyperbolic : FrameType::Euclidean);
    return f;
}

Trilinear coords(const TriangleFrame& f, const CycleVec& n, double tol) {
    Eigen::Matrix<double, 4, 3> A = basis_matrix(f);
    Eigen::Vector4d y(n.k, n.l_re, n.l_im, n.n);
    if (y.norm() == 0.0) fail(ErrorCode::ZeroMatrix, "coordinates of the zero matrix");
    Eigen::Vector3d x = A.colPivHouseholderQr().solve(y);
    if ((A * x - y).norm() > tol * y.norm()) fail(ErrorCode::OutsidePlane, "cycle is outside the frame's span");
    return Trilinear::of(x);
}

double quadratic_Y(const TriangleFrame& f, const Trilinear& t) {
    Eigen::Vector3d v = t.vec();
    return v.dot(f.gram() * v);
}

Eigen::Matrix3d adjugate(const Eigen::Matrix3d& G) {
    Eigen::Matrix3d adj;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            adj(i, j) = G(r0, c0) * G(r1, c1) - G(r0, c1) * G(r1, c0);
        }
    return adj;
}

double quadratic_X(const TriangleFrame& f, const PencilTrilinear& p) {
    Eigen::Vector3d v = p.vec();
    return v.dot(adjugate(f.gram()) * v);
}

FrameCycle cycle_at(const TriangleFrame& f, const Trilinear& t, double tol) {
    if (t.vec().norm() == 0.0) fail(ErrorCode::PreconditionViolated, "trilinear coordinates are all zero");
    CycleVec v = t.u * f.a().vec() + t.v * f.b().vec() + t.w * f.c().vec();
    return {v, classify(v, tol), quadratic_Y(f, t)};
}

PencilTrilinear join(const Trilinear& n1, const Trilinear& n2) {
    return PencilTrilinear::of(cross_checked(n1.vec(), n2.vec()));
}

Trilinear meet(const PencilTrilinear& p1, const PencilTrilinear& p2) {
    return Trilinear::of(cross_checked(p1.vec(), p2.vec()));
}

double stacked_det(const Eigen::Vector3d& r1, const Eigen::Vector3d& r2, const Eigen::Vector3d& r3) {
    Eigen::Matrix3d m;
    m.row(0) = r1 / std::max(r1.cwiseAbs().maxCoeff(), 1e-300);
    m.row(1) = r2 / std::max(r2.cwiseAbs().maxCoeff(), 1e-300);
    m.row(2) = r3 / std::max(r3.cwiseAbs().maxCoeff(), 1e-300);
    return m.determinant();
}

bool collinear_det(const Trilinear& n1, const Trilinear& n2, const Trilinear& n3, double tol) {
    return std::abs(stacked_det(n1.vec(), n2.vec(), n3.vec())) <= tol;
}

bool concurrent_det(const PencilTrilinear& p1, const PencilTrilinear& p2, const PencilTrilinear& p3, double tol) {
    return std::abs(stacked_det(p1.vec(), p2.vec(), p3.vec())) <= tol;
}

std::pair<Trilinear, Trilinear> pencil_members(const PencilTrilinear& p) {
    Eigen::Vector3d v = p.vec();
    if (v.norm() == 0.0) fail(ErrorCode::PreconditionViolated, "pencil coordinates are all zero");
    // Cross with the axis least aligned with v, then complete the null space.
    Eigen::Index i;
    v.cwiseAbs().minCoeff(&i);
    Eigen::Vector3d e = Eigen::Vector3d::Unit(i);
    Eigen::Vector3d t1 = v.cross(e).normalized();
    Eigen::Vector3d t2 = v.cross(t1).normalized();
    return {Trilinear::of(t1), Trilinear::of(t2)};
}

Pencil pencil_at(const TriangleFrame& f, const PencilTrilinear& p, double tol) {
    auto [t1, t2] = pencil_members(p);
    return span_vectors(cycle_at(f, t1).vec, cycle_at(f, t2).vec, tol);
}

PencilTrilinear pencil_coords(const TriangleFrame& f, const Pencil& P, double tol) {
    return join(coords(f, P.a().vec(), tol), coords(f, P.b().vec(), tol));
}

std::optional<Point> common_point(const TriangleFrame& f, double tol) {
    for (int i = 0; i < 3; ++i) {
        const OrientedCycle& p = f.basis(i);
        const OrientedCycle& q = f.basis((i + 1) % 3);
        const OrientedCycle& r = f.basis((i + 2) % 3);
        for (const Point& z : distinguished_points(span(p, q, tol), tol))
            if (on_cycle(r.vec(), z, tol)) return z;
    }
    return std::nullopt;
}

}  // namespace moebius
