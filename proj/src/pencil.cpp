#include "moebius/pencil.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace moebius {

namespace {

Eigen::Vector4d as_eigen(const CycleVec& v) { return {v.k, v.l_re, v.l_im, v.n}; }
CycleVec from_eigen(const Eigen::Vector4d& v) { return {v(0), v(1), v(2), v(3)}; }

// Row r with inner(x, a) = r . x.
Eigen::RowVector4d inner_row(const CycleVec& a) { return {-0.5 * a.n, a.l_re, a.l_im, -0.5 * a.k}; }

}  // namespace

// ---------------------------------------------------------------- ProjectiveReal

ProjectiveReal::ProjectiveReal(double p_, double q_) : p(p_), q(q_) {
    if (p == 0.0 && q == 0.0) fail(ErrorCode::PreconditionViolated, "projective real (0, 0)");
}

bool ProjectiveReal::is_infinite(double tol) const { return std::abs(q) <= tol * std::abs(p); }
bool ProjectiveReal::is_zero(double tol) const { return std::abs(p) <= tol * std::abs(q); }

ProjectiveReal ProjectiveReal::normalized() const {
    double s = std::hypot(p, q);
    if (q < 0.0 || (q == 0.0 && p < 0.0)) s = -s;
    return {p / s, q / s};
}

ProjectiveReal operator*(const ProjectiveReal& a, const ProjectiveReal& b) {
    return ProjectiveReal(a.p * b.p, a.q * b.q).normalized();
}

double projective_distance(const ProjectiveReal& a, const ProjectiveReal& b) {
    return std::abs(a.p * b.q - a.q * b.p) / (std::hypot(a.p, a.q) * std::hypot(b.p, b.q));
}

bool same(const ProjectiveReal& a, const ProjectiveReal& b, double tol) { return projective_distance(a, b) <= tol; }

const char* to_string(PencilType t) {
    switch (t) {
        case PencilType::Elliptic: return "elliptic";
        case PencilType::Parabolic: return "parabolic";
        case PencilType::Hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

// ---------------------------------------------------------------- Pencil

Pencil::Pencil(const OrientedCycle& a, const OrientedCycle& b, double tol) : a_(a), b_(b) {
    if (same_cycle(a, b)) fail(ErrorCode::SameCycle, "pencil needs two distinct cycles");
    xi_ = inner(a, b);
    double m = std::abs(xi_);
    type_ = m < 1.0 - tol ? PencilType::Elliptic : (m <= 1.0 + tol ? PencilType::Parabolic : PencilType::Hyperbolic);
}

Pencil span(const OrientedCycle& a, const OrientedCycle& b, double tol) { return Pencil(a, b, tol); }

PencilType subspace_type(const CycleVec& u, const CycleVec& v, double tol) {
    double uu = inner(u, u), vv = inner(v, v), uv = inner(u, v);
    double g = uu * vv - uv * uv;
    double band = tol * (std::abs(uu * vv) + uv * uv);
    return g > band ? PencilType::Elliptic : (g < -band ? PencilType::Hyperbolic : PencilType::Parabolic);
}

Pencil span_vectors(const CycleVec& u0, const CycleVec& v0, double tol) {
    // Orthonormalize in R^4, then diagonalize the Minkowski Gram matrix of the plane.
    Eigen::Matrix<double, 4, 2> A;
    A.col(0) = as_eigen(u0);
    A.col(1) = as_eigen(v0);
    Eigen::HouseholderQR<Eigen::Matrix<double, 4, 2>> qr(A);
    Eigen::Matrix<double, 4, 2> Q = qr.householderQ() * Eigen::Matrix<double, 4, 2>::Identity();
    Eigen::Matrix2d R = qr.matrixQR().topRows<2>().triangularView<Eigen::Upper>();
    if (std::abs(R(1, 1)) <= 1e-12 * std::abs(R(0, 0)))
        fail(ErrorCode::ProportionalArguments, "pencil needs two independent cycles");
    CycleVec u = from_eigen(Q.col(0)), v = from_eigen(Q.col(1));

    Eigen::Matrix2d G;
    G << inner(u, u), inner(u, v), inner(u, v), inner(v, v);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(G);
    double d_lo = es.eigenvalues()(0), d_hi = es.eigenvalues()(1);
    auto combo = [&](int i) {
        return es.eigenvectors()(0, i) * u + es.eigenvectors()(1, i) * v;
    };
    CycleVec e1 = (1.0 / std::sqrt(d_hi)) * combo(1);
    CycleVec e2;
    if (d_lo > tol) {
        e2 = (1.0 / std::sqrt(d_lo)) * combo(0);
    } else if (d_lo < -tol) {
        CycleVec t = (1.0 / std::sqrt(-d_lo)) * combo(0);
        e2 = std::cosh(1.0) * e1 + std::sinh(1.0) * t;
    } else {
        e2 = e1 + combo(0);
    }
    return Pencil(normalize(e1), normalize(e2), tol);
}

Member member(const Pencil& P, const ProjectiveReal& lambda, double tol) {
    CycleVec v = lambda.q * P.a().vec() - lambda.p * P.b().vec();
    return {v, classify(v, tol)};
}

double membership_residual(const OrientedCycle& a, const OrientedCycle& b, const CycleVec& c) {
    Eigen::Matrix<double, 4, 2> A;
    A.col(0) = as_eigen(a.vec());
    A.col(1) = as_eigen(b.vec());
    Eigen::Vector4d y = as_eigen(c);
    Eigen::Vector2d x = A.colPivHouseholderQr().solve(y);
    return (A * x - y).norm() / y.norm();
}

ProjectiveReal splitting_factor(const OrientedCycle& a, const OrientedCycle& b, const CycleVec& c, double tol) {
    if (c.is_zero()) fail(ErrorCode::ZeroMatrix, "splitting factor of the zero matrix");
    if (same_cycle(a, b)) fail(ErrorCode::SameCycle, "splitting factor needs distinct cycles");
    Eigen::Matrix<double, 4, 2> A;
    A.col(0) = as_eigen(a.vec());
    A.col(1) = as_eigen(b.vec());
    Eigen::Vector4d y = as_eigen(c);
    Eigen::Vector2d x = A.colPivHouseholderQr().solve(y);
    if ((A * x - y).norm() > tol * y.norm()) fail(ErrorCode::NotInPencil, "cycle does not lie in the pencil");
    // c = x0 M + x1 N = x0 (M - lambda N) with lambda = -x1 / x0.
    return ProjectiveReal(-x(1), x(0)).normalized();
}

Pencil orthogonal_pencil(const Pencil& P, double tol) {
    Eigen::Matrix<double, 2, 4> C;
    C.row(0) = inner_row(P.a().vec());
    C.row(1) = inner_row(P.b().vec());
    Eigen::JacobiSVD<Eigen::Matrix<double, 2, 4>> svd(C, Eigen::ComputeFullV);
    Eigen::Matrix4d V = svd.matrixV();
    return span_vectors(from_eigen(V.col(2)), from_eigen(V.col(3)), tol);
}

std::vector<Point> distinguished_points(const Pencil& P, double tol) {
    const CycleVec& m = P.a().vec();
    const CycleVec& n = P.b().vec();
    double c = P.xi();
    switch (P.type()) {
        case PencilType::Elliptic:
            return intersect(P.a(), P.b(), tol);
        case PencilType::Parabolic:
            return {rank_one_point(m - (c < 0 ? -1.0 : 1.0) * n)};
        case PencilType::Hyperbolic: {
            // Parabolic members M - lambda N: lambda^2 - 2 lambda c + 1 = 0.
            double l1 = c + std::copysign(std::sqrt(c * c - 1.0), c);
            double l2 = 1.0 / l1;
            return {rank_one_point(m - l1 * n), rank_one_point(m - l2 * n)};
        }
    }
    return {};
}

CevianRange cevian_range(const OrientedCycle& a, const OrientedCycle& b, double tol) {
    Pencil P(a, b, tol);
    CevianRange r;
    r.type = P.type();
    r.xi = P.xi();
    switch (r.type) {
        case PencilType::Elliptic:
            r.bisector = ProjectiveReal::of(1.0);
            r.external_bisector = ProjectiveReal::of(-1.0);
            break;
        case PencilType::Hyperbolic: {
            double m = std::sqrt(r.xi * r.xi - 1.0);  // |sinh 2 pi mu|
            r.gap_lo = r.xi - m;
            r.gap_hi = r.xi + m;
            r.bisector = ProjectiveReal::of(r.xi < 0 ? 1.0 : -1.0);
            break;
        }
        case PencilType::Parabolic: {
            double xi = r.xi < 0 ? -1.0 : 1.0;
            r.forbidden = xi;
            r.bisector = ProjectiveReal::of(-xi);
            break;
        }
    }
    return r;
}

bool admissible(const CevianRange& range, const ProjectiveReal& lambda, double tol) {
    if (range.type == PencilType::Elliptic || lambda.is_infinite(tol)) return true;
    double v = lambda.value();
    if (range.type == PencilType::Parabolic) return std::abs(v - *range.forbidden) > tol * std::max(1.0, std::abs(v));
    double slack = tol * std::max(1.0, std::abs(v));
    return v < *range.gap_lo - slack || v > *range.gap_hi + slack;
}

OrientedCycle bisector(const OrientedCycle& a, const OrientedCycle& b, double tol) {
    CevianRange r = cevian_range(a, b, tol);
    return normalize(r.bisector.q * a.vec() - r.bisector.p * b.vec());
}

std::optional<OrientedCycle> external_bisector(const OrientedCycle& a, const OrientedCycle& b, double tol) {
    CevianRange r = cevian_range(a, b, tol);
    if (!r.external_bisector) return std::nullopt;
    return normalize(a.vec() + b.vec());
}

Collinearity collinear3(const CycleVec& a, const CycleVec& b, const CycleVec& c, double tol) {
    Eigen::Matrix<double, 3, 4> A;
    A.row(0) = as_eigen(a).normalized().transpose();
    A.row(1) = as_eigen(b).normalized().transpose();
    A.row(2) = as_eigen(c).normalized().transpose();
    Eigen::JacobiSVD<Eigen::Matrix<double, 3, 4>> svd(A);
    auto s = svd.singularValues();
    Collinearity out;
    out.residual = s(2) / s(0);
    out.collinear = out.residual <= tol;
    double ab = inner(a, b), bc = inner(b, c), ac = inner(a, c);
    out.gram_identity = ab * ab + bc * bc + ac * ac - 2.0 * ab * bc * ac - 1.0;
    return out;
}

}  // namespace moebius
