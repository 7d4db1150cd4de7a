#pragma once

// Cycles on the Moebius plane as 2x2 Hermitian matrices M = [[k, l], [conj(l), n]],
// stored as real 4-vectors. An oriented cycle is a normalized matrix (det = -1)
// whose left half-plane is {z : Q(z) < 0}, Q(z) = k|z|^2 + l z + conj(l) conj(z) + n.

#include <complex>
#include <optional>
#include <vector>

#include "moebius/error.hpp"

namespace moebius {

using cplx = std::complex<double>;

// Relative tolerance for classification bands.
inline constexpr double kEps = 1e-9;
// Relative tolerance for incidence and membership preconditions.
inline constexpr double kIncidenceTol = 1e-7;

inline constexpr double kPi = 3.14159265358979323846;

// Homogeneous point of C u {inf}; value z1/z2, infinity is (1, 0).
struct Point {
    cplx z1{0.0};
    cplx z2{1.0};

    Point() = default;
    Point(cplx a, cplx b);

    static Point finite(cplx z) { return Point(z, 1.0); }
    static Point infinity() { return Point(1.0, 0.0); }

    bool is_infinite(double tol = kEps) const;
    cplx value() const { return z1 / z2; }
    // Rescaled so that max(|z1|, |z2|) = 1.
    Point normalized() const;
};

// Chordal distance on the Riemann sphere; 0 for equal points, at most 1.
double chordal_distance(const Point& p, const Point& q);
bool same_point(const Point& p, const Point& q, double tol = 1e-9);

struct CycleVec {
    double k = 0.0;
    double l_re = 0.0;
    double l_im = 0.0;
    double n = 0.0;

    cplx l() const { return {l_re, l_im}; }
    double det() const { return k * n - (l_re * l_re + l_im * l_im); }
    double max_abs() const;
    double norm() const;  // Euclidean norm in R^4
    bool is_zero(double tol = 0.0) const;

    CycleVec operator-() const { return {-k, -l_re, -l_im, -n}; }
    CycleVec& operator+=(const CycleVec& o);
    CycleVec& operator-=(const CycleVec& o);
    CycleVec& operator*=(double s);
};

CycleVec operator+(CycleVec a, const CycleVec& b);
CycleVec operator-(CycleVec a, const CycleVec& b);
CycleVec operator*(double s, CycleVec a);
CycleVec operator*(CycleVec a, double s);

// Minkowski inner product <M,N> = (tr MN - tr M tr N) / 2, signature (3,1).
double inner(const CycleVec& a, const CycleVec& b);

// Quadratic form at a homogeneous point, k|z1|^2 + 2 Re(l z1 conj(z2)) + n|z2|^2.
double quad_form(const CycleVec& m, const Point& p);

// Rank-one cycle of a point, (0,0,0,1) for infinity.
CycleVec point_cycle(const Point& p);

// Action of complex conjugation z -> conj(z): swaps l and conj(l).
CycleVec transpose(const CycleVec& m);

// True when p lies on the zero set of m within a scale-aware tolerance.
bool on_cycle(const CycleVec& m, const Point& p, double tol = kIncidenceTol);

// Proportionality of two cycle vectors up to a nonzero real factor of either sign.
bool proportional(const CycleVec& a, const CycleVec& b, double tol = 1e-9);

class OrientedCycle {
public:
    const CycleVec& vec() const { return v_; }
    double k() const { return v_.k; }
    cplx l() const { return v_.l(); }
    double n() const { return v_.n; }

    bool is_line(double tol = kEps) const;
    // Circle data; only meaningful when !is_line().
    cplx center() const { return -std::conj(v_.l()) / v_.k; }
    double signed_radius() const { return 1.0 / v_.k; }

    OrientedCycle reversed() const { return OrientedCycle(-v_); }
    double q(const Point& p) const { return quad_form(v_, p); }
    bool left_of(const Point& p) const { return q(p) < 0.0; }

    // Wraps a vector already known to be normalized (det = -1 up to rounding).
    static OrientedCycle from_normalized(const CycleVec& v) { return OrientedCycle(v); }

private:
    explicit OrientedCycle(const CycleVec& v) : v_(v) {}
    CycleVec v_;
};

inline double inner(const OrientedCycle& a, const OrientedCycle& b) { return inner(a.vec(), b.vec()); }
inline double mobius_cos(const OrientedCycle& a, const OrientedCycle& b) { return inner(a, b); }

// Same point set, either orientation.
bool same_cycle(const OrientedCycle& a, const OrientedCycle& b, double tol = 1e-9);

// sign = +1: k > 0 for circles; for lines the probe point lies in the left half-plane.
// The probe defaults to the first of 0, 1, i that is not on the cycle.
struct OrientationHint {
    int sign = +1;
    std::optional<Point> probe;
};

// Scales by a positive factor, keeping the left half-plane of the raw matrix.
OrientedCycle normalize(const CycleVec& raw, double tol = kEps);
OrientedCycle normalize(const CycleVec& raw, const OrientationHint& hint, double tol = kEps);

// Positive radius gives counter-clockwise orientation (interior on the left).
OrientedCycle from_circle(cplx center, double signed_radius);
// Line through point with travel direction (nonzero complex); left of travel is the left half-plane.
OrientedCycle from_line(cplx point, cplx direction);
// Cycle through three distinct points, traversed P -> Q -> R.
OrientedCycle from_points(const Point& p, const Point& q, const Point& r);

enum class CycleKind { Elliptic, Parabolic, Hyperbolic };
const char* to_string(CycleKind kind);

struct CycleClass {
    CycleKind kind = CycleKind::Elliptic;
    double det = 0.0;   // raw discriminant
    double band = 0.0;  // half-width of the parabolic band used
    std::optional<Point> point;    // parabolic: the point
    std::optional<cplx> center;    // hyperbolic: center of the virtual cycle
    double radius_sq = 0.0;        // hyperbolic: negative radius squared
};

CycleClass classify(const CycleVec& raw, double tol = kEps);

// Point of a (near) rank-one matrix, read off the better-conditioned row.
Point rank_one_point(const CycleVec& m);

// z -> (a z + b) / (c z + d), or with conj(z) in place of z when anti. Stored with det 1.
class MoebiusMap {
public:
    MoebiusMap();
    MoebiusMap(cplx a, cplx b, cplx c, cplx d, bool anti = false);

    static MoebiusMap identity() { return MoebiusMap(); }
    // Sends p, q, r to 0, 1, infinity.
    static MoebiusMap to_zero_one_inf(const Point& p, const Point& q, const Point& r);

    cplx a() const { return a_; }
    cplx b() const { return b_; }
    cplx c() const { return c_; }
    cplx d() const { return d_; }
    bool anti() const { return anti_; }

    Point operator()(const Point& p) const;
    MoebiusMap inverse() const;
    // (f * g)(z) = f(g(z))
    MoebiusMap operator*(const MoebiusMap& g) const;

private:
    cplx a_, b_, c_, d_;
    bool anti_;
};

// g^{-T} M conj(g)^{-1}; anti maps transpose M first.
CycleVec apply_map(const MoebiusMap& g, const CycleVec& m);
OrientedCycle apply_map(const MoebiusMap& g, const OrientedCycle& a);

// Inversion in a as an anti-holomorphic map.
MoebiusMap inversion_map(const OrientedCycle& a);
Point invert(const OrientedCycle& a, const Point& z);

// Holomorphic map carrying the real axis (traversed left to right) onto a with its orientation.
MoebiusMap chart(const OrientedCycle& a);

std::vector<Point> intersect(const OrientedCycle& a, const OrientedCycle& b, double tol = kEps);

// Oriented tangent i (k P + conj(l)) at a finite point.
cplx tangent(const CycleVec& a, cplx p);

// arg(t_b / t_a) at a common point, in (-pi, pi].
double oriented_angle(const OrientedCycle& a, const OrientedCycle& b, const Point& p,
                      double tol = kIncidenceTol);

// Oriented modulus of the annulus between disjoint cycles, positive when the
// annulus is in the left half-plane of a.
double modulus(const OrientedCycle& a, const OrientedCycle& b, double tol = kEps);

std::vector<OrientedCycle> midcycles(const OrientedCycle& a, const OrientedCycle& b, double tol = kEps);

enum class Regime { Intersecting, Tangent, Disjoint };
const char* to_string(Regime r);

struct RegimeReport {
    Regime regime = Regime::Intersecting;
    double xi = 0.0;                 // <a,b>
    std::vector<Point> points;       // intersection or tangency points
    double angle = 0.0;              // Intersecting: oriented angle at points[0]
    double mu = 0.0;                 // Disjoint: oriented modulus
    int side_sign = 0;               // Tangent/Disjoint: -1 when the monogon/annulus is on the same side of both
};

RegimeReport cosine_regime(const OrientedCycle& a, const OrientedCycle& b, double tol = kEps);

}  // namespace moebius
