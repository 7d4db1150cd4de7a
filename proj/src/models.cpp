#include "moebius/models.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace moebius {

namespace {

const CycleVec kRealAxis{0.0, 0.0, 1.0, 0.0};

// Row r with r . x = <x, v> for x = (k, l_re, l_im, n).
Eigen::RowVector4d inner_row(const CycleVec& v) { return {-v.n / 2, v.l_re, v.l_im, -v.k / 2}; }

// The line orthogonal to two real cycles and the real axis.
OrientedCycle real_orthogonal(const CycleVec& a, const CycleVec& b, double tol) {
    Eigen::Matrix<double, 3, 4> A;
    A.row(0) = inner_row(a) / a.norm();
    A.row(1) = inner_row(b) / b.norm();
    A.row(2) = inner_row(kRealAxis);
    Eigen::JacobiSVD<Eigen::Matrix<double, 3, 4>> svd(A, Eigen::ComputeFullV);
    Eigen::Vector4d x = svd.matrixV().col(3);
    CycleVec v{x(0), x(1), 0.0, x(3)};
    if (classify(v, tol).kind != CycleKind::Elliptic)
        fail(ErrorCode::NotDisjoint, "no real orthogonal line: the cycles meet");
    return normalize(v, tol);
}

cplx canonical_direction(cplx d) {
    d /= std::abs(d);
    if (d.real() < -1e-12 || (std::abs(d.real()) <= 1e-12 && d.imag() < 0)) d = -d;
    return d;
}

}  // namespace

const char* to_string(ModelTag m) {
    switch (m) {
        case ModelTag::Spherical: return "spherical";
        case ModelTag::Euclidean: return "euclidean";
        case ModelTag::HyperbolicHalfPlane: return "hyperbolic";
    }
    return "unknown";
}

const char* to_string(MenelausCase c) {
    switch (c) {
        case MenelausCase::I: return "i";
        case MenelausCase::II: return "ii";
        case MenelausCase::III: return "iii";
        case MenelausCase::IV: return "iv";
        case MenelausCase::V: return "v";
        case MenelausCase::VI: return "vi";
    }
    return "unknown";
}

bool is_model_line(ModelTag model, const CycleVec& c, double tol) {
    double s = std::max(c.max_abs(), 1e-300);
    switch (model) {
        case ModelTag::Spherical: return std::abs(c.k + c.n) <= tol * s;
        case ModelTag::Euclidean: return std::abs(c.k) <= tol * s;
        case ModelTag::HyperbolicHalfPlane: return std::abs(c.l_im) <= tol * s;
    }
    return false;
}

CycleVec hyperbolic_point_to_cycle(cplx z) {
    if (!(z.imag() > 0)) fail(ErrorCode::NotUpperHalfPlane, "point is not in the upper half-plane");
    return {-1.0, z.real(), 0.0, -std::norm(z)};
}

cplx cycle_to_hyperbolic_point(const CycleVec& m, double tol) {
    double s = m.max_abs();
    if (s == 0.0 || std::abs(m.l_im) > tol * s || !(m.det() > tol * s * s))
        fail(ErrorCode::NotVirtualReal, "cycle is not a virtual real matrix");
    return {-m.l_re / m.k, std::sqrt(m.det()) / std::abs(m.k)};
}

PencilInterpretation interpret_pencil(ModelTag model, const Pencil& P, double tol) {
    if (!is_model_line(model, P.a().vec(), tol) || !is_model_line(model, P.b().vec(), tol))
        fail(ErrorCode::NotModelPencil, std::string("pencil is not made of ") + to_string(model) + " lines");
    PencilInterpretation r;
    r.model = model;
    r.type = P.type();
    std::vector<Point> pts = distinguished_points(P, tol);
    switch (model) {
        case ModelTag::Spherical:
            r.points = pts;
            break;
        case ModelTag::Euclidean:
            if (r.type == PencilType::Parabolic) {
                // Travel direction d of a line has l = i conj(d).
                r.direction = canonical_direction(cplx(0, 1) * std::conj(P.a().l()));
            } else {
                for (const Point& p : pts)
                    if (!p.is_infinite(tol)) r.points.push_back(p);
            }
            break;
        case ModelTag::HyperbolicHalfPlane:
            if (r.type == PencilType::Hyperbolic) {
                r.line = real_orthogonal(P.a().vec(), P.b().vec(), tol);
            } else if (r.type == PencilType::Parabolic) {
                r.points = pts;
            } else {
                for (const Point& p : pts)
                    if (!p.is_infinite(tol) && p.value().imag() > 0) r.points.push_back(p);
            }
            break;
    }
    return r;
}

OrientedCycle common_perpendicular(const OrientedCycle& a, const OrientedCycle& b, double tol) {
    if (!is_model_line(ModelTag::HyperbolicHalfPlane, a.vec(), tol) ||
        !is_model_line(ModelTag::HyperbolicHalfPlane, b.vec(), tol))
        fail(ErrorCode::NotHyperbolicLines, "common perpendicular needs real-matrix lines");
    if (!(std::abs(inner(a, b)) > 1.0 + tol)) fail(ErrorCode::NotDisjoint, "hyperbolic lines meet or are parallel");
    return real_orthogonal(a.vec(), b.vec(), tol);
}

double line_distance(const OrientedCycle& a, const OrientedCycle& b, double tol) {
    return 2.0 * kPi * std::abs(modulus(a, b, tol));
}

MenelausTaxonomy menelaus_case(const TriangleFrame& f, const ProjectiveReal& lambda, const ProjectiveReal& mu,
                               const ProjectiveReal& nu, double tol) {
    for (int i = 0; i < 3; ++i)
        if (!is_model_line(ModelTag::HyperbolicHalfPlane, f.basis(i).vec()))
            fail(ErrorCode::NotHyperbolicLines, "frame cycles must be real-matrix lines");
    MenelausResult m = menelaus(f, lambda, mu, nu, tol);
    if (!m.concurrent) fail(ErrorCode::PreconditionViolated, "cevians do not satisfy the Menelaus condition");
    MenelausTaxonomy r;
    const ProjectiveReal factors[3] = {lambda, mu, nu};
    int count = 0;
    for (int i = 0; i < 3; ++i) {
        OrientedCycle n = cevian_cycle(f, i, factors[i]);
        if (std::abs(inner(f.basis(i), n)) > 1.0 + tol) {
            r.perpendiculars[i] = common_perpendicular(f.basis(i), n);
            ++count;
        }
    }
    r.n = cycle_at(f, *m.common).vec;
    r.kind = m.type.kind;
    switch (count) {
        case 0: r.tag = MenelausCase::I; break;
        case 1: r.tag = MenelausCase::II; break;
        case 2: r.tag = MenelausCase::III; break;
        default:
            r.tag = r.kind == CycleKind::Elliptic
                        ? MenelausCase::IV
                        : (r.kind == CycleKind::Parabolic ? MenelausCase::V : MenelausCase::VI);
    }
    return r;
}

}  // namespace moebius
