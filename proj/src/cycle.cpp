#include "moebius/cycle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace moebius {

namespace {

using Mat2 = std::array<std::array<cplx, 2>, 2>;

Mat2 mul(const Mat2& x, const Mat2& y) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return r;
}

Mat2 hermitian(const CycleVec& m) { return {{{cplx(m.k), m.l()}, {std::conj(m.l()), cplx(m.n)}}}; }

cplx det2(const Point& x, const Point& y) { return x.z1 * y.z2 - x.z2 * y.z1; }

double sq(double x) { return x * x; }

// Probe candidates for orienting lines.
const std::array<cplx, 3> kProbes = {cplx(0.0), cplx(1.0), cplx(0.0, 1.0)};

}  // namespace

// ---------------------------------------------------------------- Point

Point::Point(cplx a, cplx b) : z1(a), z2(b) {
    if (a == 0.0 && b == 0.0) fail(ErrorCode::PreconditionViolated, "point with both components zero");
}

bool Point::is_infinite(double tol) const { return std::abs(z2) <= tol * std::abs(z1); }

Point Point::normalized() const {
    double s = std::max(std::abs(z1), std::abs(z2));
    return Point(z1 / s, z2 / s);
}

double chordal_distance(const Point& p, const Point& q) {
    double np = std::hypot(std::abs(p.z1), std::abs(p.z2));
    double nq = std::hypot(std::abs(q.z1), std::abs(q.z2));
    return std::abs(det2(p, q)) / (np * nq);
}

bool same_point(const Point& p, const Point& q, double tol) { return chordal_distance(p, q) <= tol; }

// ---------------------------------------------------------------- CycleVec

double CycleVec::max_abs() const {
    return std::max({std::abs(k), std::abs(l_re), std::abs(l_im), std::abs(n)});
}

double CycleVec::norm() const { return std::sqrt(k * k + l_re * l_re + l_im * l_im + n * n); }

bool CycleVec::is_zero(double tol) const { return max_abs() <= tol; }

CycleVec& CycleVec::operator+=(const CycleVec& o) {
    k += o.k;
    l_re += o.l_re;
    l_im += o.l_im;
    n += o.n;
    return *this;
}

CycleVec& CycleVec::operator-=(const CycleVec& o) {
    k -= o.k;
    l_re -= o.l_re;
    l_im -= o.l_im;
    n -= o.n;
    return *this;
}

CycleVec& CycleVec::operator*=(double s) {
    k *= s;
    l_re *= s;
    l_im *= s;
    n *= s;
    return *this;
}

CycleVec operator+(CycleVec a, const CycleVec& b) { return a += b; }
CycleVec operator-(CycleVec a, const CycleVec& b) { return a -= b; }
CycleVec operator*(double s, CycleVec a) { return a *= s; }
CycleVec operator*(CycleVec a, double s) { return a *= s; }

double inner(const CycleVec& a, const CycleVec& b) {
    return a.l_re * b.l_re + a.l_im * b.l_im - 0.5 * (a.k * b.n + b.k * a.n);
}

double quad_form(const CycleVec& m, const Point& p) {
    return m.k * std::norm(p.z1) + 2.0 * std::real(m.l() * p.z1 * std::conj(p.z2)) + m.n * std::norm(p.z2);
}

CycleVec point_cycle(const Point& p) {
    // |z2|^2 |z|^2 - conj(z1) z2 z - z1 conj(z2) conj(z) + |z1|^2
    cplx l = -std::conj(p.z1) * p.z2;
    return {std::norm(p.z2), l.real(), l.imag(), std::norm(p.z1)};
}

CycleVec transpose(const CycleVec& m) { return {m.k, m.l_re, -m.l_im, m.n}; }

bool on_cycle(const CycleVec& m, const Point& p, double tol) {
    return std::abs(quad_form(m, p.normalized())) <= tol * m.max_abs();
}

bool proportional(const CycleVec& a, const CycleVec& b, double tol) {
    double na = a.norm(), nb = b.norm();
    if (na == 0.0 || nb == 0.0) return false;
    CycleVec ua = (1.0 / na) * a, ub = (1.0 / nb) * b;
    return std::min((ua - ub).norm(), (ua + ub).norm()) <= tol;
}

// ---------------------------------------------------------------- OrientedCycle

bool OrientedCycle::is_line(double tol) const { return std::abs(v_.k) <= tol * v_.max_abs(); }

bool same_cycle(const OrientedCycle& a, const OrientedCycle& b, double tol) {
    return proportional(a.vec(), b.vec(), tol);
}

OrientedCycle normalize(const CycleVec& raw, double tol) {
    double scale = raw.max_abs();
    if (scale == 0.0) fail(ErrorCode::ZeroMatrix, "zero matrix");
    CycleVec u = (1.0 / scale) * raw;
    double det = u.det();
    if (det >= -tol * (u.k * u.k + u.l_re * u.l_re + u.l_im * u.l_im + u.n * u.n))
        fail(ErrorCode::NonElliptic, "matrix is not elliptic (det >= 0)");
    return OrientedCycle::from_normalized((1.0 / std::sqrt(-det)) * u);
}

OrientedCycle normalize(const CycleVec& raw, const OrientationHint& hint, double tol) {
    OrientedCycle c = normalize(raw, tol);
    int want = hint.sign >= 0 ? 1 : -1;
    const CycleVec& v = c.vec();
    if (std::abs(v.k) > tol * v.max_abs()) return (v.k > 0) == (want > 0) ? c : c.reversed();

    std::optional<Point> probe = hint.probe;
    if (!probe) {
        for (cplx z : kProbes) {
            if (std::abs(quad_form(v, Point::finite(z))) > 1e-6 * v.max_abs()) {
                probe = Point::finite(z);
                break;
            }
        }
    }
    if (!probe) return c;
    bool left = quad_form(v, probe->normalized()) < 0.0;
    return left == (want > 0) ? c : c.reversed();
}

OrientedCycle from_circle(cplx center, double signed_radius) {
    if (signed_radius == 0.0 || !std::isfinite(signed_radius))
        fail(ErrorCode::ZeroRadius, "circle radius must be nonzero and finite");
    double k = 1.0 / signed_radius;
    cplx l = -k * std::conj(center);
    double n = k * (std::norm(center) - signed_radius * signed_radius);
    return normalize({k, l.real(), l.imag(), n});
}

OrientedCycle from_line(cplx point, cplx direction) {
    double m = std::abs(direction);
    if (m == 0.0) fail(ErrorCode::PreconditionViolated, "line direction must be nonzero");
    cplx d = direction / m;
    cplx l = cplx(0.0, 1.0) * std::conj(d);
    double n = 2.0 * std::imag(std::conj(d) * point);
    return normalize({0.0, l.real(), l.imag(), n});
}

OrientedCycle from_points(const Point& p, const Point& q, const Point& r) {
    MoebiusMap h = MoebiusMap::to_zero_one_inf(p, q, r);
    CycleVec real_axis{0.0, 0.0, 1.0, 0.0};
    return normalize(apply_map(h.inverse(), real_axis));
}

const char* to_string(CycleKind kind) {
    switch (kind) {
        case CycleKind::Elliptic: return "elliptic";
        case CycleKind::Parabolic: return "parabolic";
        case CycleKind::Hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

CycleClass classify(const CycleVec& raw, double tol) {
    if (raw.is_zero()) fail(ErrorCode::ZeroMatrix, "zero matrix");
    CycleClass out;
    out.det = raw.det();
    out.band = tol * (sq(raw.k) + sq(raw.l_re) + sq(raw.l_im) + sq(raw.n));
    if (out.det < -out.band) {
        out.kind = CycleKind::Elliptic;
    } else if (out.det > out.band) {
        out.kind = CycleKind::Hyperbolic;
        out.center = -std::conj(raw.l()) / raw.k;
        out.radius_sq = -out.det / (raw.k * raw.k);
    } else {
        out.kind = CycleKind::Parabolic;
        out.point = rank_one_point(raw);
    }
    return out;
}

Point rank_one_point(const CycleVec& m) {
    if (std::abs(m.k) >= std::abs(m.n)) return Point(-std::conj(m.l()), m.k).normalized();
    return Point(m.n, -m.l()).normalized();
}

// ---------------------------------------------------------------- MoebiusMap

MoebiusMap::MoebiusMap() : a_(1.0), b_(0.0), c_(0.0), d_(1.0), anti_(false) {}

MoebiusMap::MoebiusMap(cplx a, cplx b, cplx c, cplx d, bool anti) : anti_(anti) {
    double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    cplx det = a * d - b * c;
    if (scale == 0.0 || std::abs(det) <= 1e-13 * scale * scale)
        fail(ErrorCode::SingularMap, "Moebius map with vanishing determinant");
    cplx s = std::sqrt(det);
    a_ = a / s;
    b_ = b / s;
    c_ = c / s;
    d_ = d / s;
}

MoebiusMap MoebiusMap::to_zero_one_inf(const Point& p0, const Point& q0, const Point& r0) {
    Point p = p0.normalized(), q = q0.normalized(), r = r0.normalized();
    if (same_point(p, q, 1e-12) || same_point(q, r, 1e-12) || same_point(p, r, 1e-12))
        fail(ErrorCode::CoincidentPoints, "points must be pairwise distinct");
    cplx c1 = det2(q, r), c2 = det2(q, p);
    return MoebiusMap(c1 * p.z2, -c1 * p.z1, c2 * r.z2, -c2 * r.z1);
}

Point MoebiusMap::operator()(const Point& p) const {
    cplx z1 = anti_ ? std::conj(p.z1) : p.z1;
    cplx z2 = anti_ ? std::conj(p.z2) : p.z2;
    return Point(a_ * z1 + b_ * z2, c_ * z1 + d_ * z2).normalized();
}

MoebiusMap MoebiusMap::inverse() const {
    if (!anti_) return MoebiusMap(d_, -b_, -c_, a_);
    return MoebiusMap(std::conj(d_), -std::conj(b_), -std::conj(c_), std::conj(a_), true);
}

MoebiusMap MoebiusMap::operator*(const MoebiusMap& g) const {
    Mat2 f{{{a_, b_}, {c_, d_}}};
    Mat2 h{{{g.a_, g.b_}, {g.c_, g.d_}}};
    if (anti_)
        for (auto& row : h)
            for (auto& x : row) x = std::conj(x);
    Mat2 r = mul(f, h);
    return MoebiusMap(r[0][0], r[0][1], r[1][0], r[1][1], anti_ != g.anti_);
}

CycleVec apply_map(const MoebiusMap& g, const CycleVec& m0) {
    CycleVec m = g.anti() ? transpose(m0) : m0;
    cplx a = g.a(), b = g.b(), c = g.c(), d = g.d();
    Mat2 inv_t{{{d, -c}, {-b, a}}};
    Mat2 inv_bar{{{std::conj(d), -std::conj(b)}, {-std::conj(c), std::conj(a)}}};
    Mat2 r = mul(mul(inv_t, hermitian(m)), inv_bar);
    cplx l = 0.5 * (r[0][1] + std::conj(r[1][0]));
    return {r[0][0].real(), l.real(), l.imag(), r[1][1].real()};
}

OrientedCycle apply_map(const MoebiusMap& g, const OrientedCycle& a) {
    return normalize(apply_map(g, a.vec()));
}

MoebiusMap inversion_map(const OrientedCycle& a) {
    return MoebiusMap(-std::conj(a.l()), -a.n(), a.k(), a.l(), true);
}

Point invert(const OrientedCycle& a, const Point& z) { return inversion_map(a)(z); }

MoebiusMap chart(const OrientedCycle& a) {
    // Unitary diagonalization M = U diag(l1, l2) U*, l1 > 0 > l2, then
    // g = conj(U) diag(1/sqrt(l1), 1/sqrt(-l2)) carries the unit circle onto a.
    const CycleVec& v = a.vec();
    double h = 0.5 * (v.k + v.n);
    double delta = std::sqrt(sq(0.5 * (v.k - v.n)) + std::norm(v.l()));
    double l1 = h + delta, l2 = h - delta;
    cplx u0, u1;
    if (v.k <= v.n) {
        u0 = v.l();
        u1 = l1 - v.k;
    } else {
        u0 = l1 - v.n;
        u1 = std::conj(v.l());
    }
    double nu = std::sqrt(std::norm(u0) + std::norm(u1));
    u0 /= nu;
    u1 /= nu;
    // Second column (-conj(u1), conj(u0)) is the l2 eigenvector.
    double s1 = std::sqrt(l1), s2 = std::sqrt(-l2);
    MoebiusMap g(std::conj(u0) / s1, -u1 / s2, std::conj(u1) / s1, u0 / s2);
    MoebiusMap cayley(1.0, cplx(0.0, -1.0), 1.0, cplx(0.0, 1.0));
    return g * cayley;
}

std::vector<Point> intersect(const OrientedCycle& a, const OrientedCycle& b, double tol) {
    if (same_cycle(a, b)) fail(ErrorCode::SameCycle, "intersect of a cycle with itself");
    double c = inner(a, b);
    int count = std::abs(c) < 1.0 - tol ? 2 : (std::abs(c) <= 1.0 + tol ? 1 : 0);
    if (count == 0) return {};

    MoebiusMap ch = chart(a);
    CycleVec m = apply_map(ch.inverse(), b.vec());
    // Real homogeneous quadratic k t1^2 + 2 l_re t1 t2 + n t2^2 on the real axis.
    double kk = m.k, lr = m.l_re, nn = m.n;
    if (count == 1) {
        Point t = std::abs(kk) >= std::abs(nn) ? Point(-lr, kk) : Point(nn, -lr);
        return {ch(t)};
    }
    double disc = std::max(0.0, lr * lr - kk * nn);
    double q = -(lr + std::copysign(std::sqrt(disc), lr));
    return {ch(Point(q, kk)), ch(Point(nn, q))};
}

cplx tangent(const CycleVec& a, cplx p) { return cplx(0.0, 1.0) * (a.k * p + std::conj(a.l())); }

double oriented_angle(const OrientedCycle& a, const OrientedCycle& b, const Point& p0, double tol) {
    Point p = p0.normalized();
    if (!on_cycle(a.vec(), p, tol) || !on_cycle(b.vec(), p, tol))
        fail(ErrorCode::PointNotOnCycle, "point does not lie on both cycles");
    CycleVec va = a.vec(), vb = b.vec();
    cplx z;
    if (std::abs(p.z2) < std::abs(p.z1)) {
        MoebiusMap flip(0.0, 1.0, 1.0, 0.0);
        va = apply_map(flip, va);
        vb = apply_map(flip, vb);
        z = p.z2 / p.z1;
    } else {
        z = p.z1 / p.z2;
    }
    cplx ta = tangent(va, z), tb = tangent(vb, z);
    return std::arg(tb * std::conj(ta));
}

double modulus(const OrientedCycle& a, const OrientedCycle& b, double tol) {
    double c = inner(a, b);
    if (std::abs(c) <= 1.0 + tol) fail(ErrorCode::NotDisjoint, "modulus needs disjoint cycles");
    double mu = std::acosh(std::abs(c)) / (2.0 * kPi);
    Point probe = chart(b)(Point::finite(0.0));
    return a.q(probe) < 0.0 ? mu : -mu;
}

std::vector<OrientedCycle> midcycles(const OrientedCycle& a, const OrientedCycle& b, double tol) {
    if (same_cycle(a, b)) fail(ErrorCode::SameCycle, "midcycles of a cycle with itself");
    double c = inner(a, b);
    std::vector<OrientedCycle> out;
    if (c < 1.0 - tol) out.push_back(normalize(a.vec() - b.vec()));
    if (c > -1.0 + tol) out.push_back(normalize(a.vec() + b.vec()));
    return out;
}

const char* to_string(Regime r) {
    switch (r) {
        case Regime::Intersecting: return "intersecting";
        case Regime::Tangent: return "tangent";
        case Regime::Disjoint: return "disjoint";
    }
    return "unknown";
}

RegimeReport cosine_regime(const OrientedCycle& a, const OrientedCycle& b, double tol) {
    if (same_cycle(a, b)) fail(ErrorCode::SameCycle, "regime of a cycle with itself");
    RegimeReport r;
    r.xi = inner(a, b);
    double m = std::abs(r.xi);
    if (m < 1.0 - tol) {
        r.regime = Regime::Intersecting;
        r.points = intersect(a, b, tol);
        r.angle = oriented_angle(a, b, r.points.front());
    } else if (m <= 1.0 + tol) {
        r.regime = Regime::Tangent;
        r.points = intersect(a, b, tol);
        r.side_sign = r.xi < 0 ? -1 : 1;
    } else {
        r.regime = Regime::Disjoint;
        r.mu = modulus(a, b, tol);
        r.side_sign = r.xi < 0 ? -1 : 1;
    }
    return r;
}

}  // namespace moebius
