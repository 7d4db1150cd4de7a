#include "moebius/triangle.hpp"

#include <cmath>

namespace moebius {

namespace {

struct Traversal {
    Point p[3];
};

Traversal traversal(const Point& A, const Point& B, const Point& C, Orientation o) {
    if (o == Orientation::ABC) return {{A, B, C}};
    return {{A, C, B}};
}

// Side running from u to v with third vertex w, at signed digon angle theta to the
// circumcircle. In the chart v -> 0, w -> -1, u -> inf the circumcircle is the real
// axis and the side is a line through 0.
OrientedCycle side_from_offset(const Point& u, const Point& v, const Point& w, double theta) {
    MoebiusMap phi = MoebiusMap(-1.0, 0.0, 0.0, 1.0) * MoebiusMap::to_zero_one_inf(v, w, u);
    OrientedCycle line = from_line(0.0, -std::polar(1.0, -theta));
    return apply_map(phi.inverse(), line);
}

bool near(double x, double y, double tol) { return std::abs(x - y) <= tol; }

void require_proper(const Angles& g, double tol) {
    for (double x : {g.alpha, g.beta, g.gamma})
        if (x < -tol || x >= kPi - tol) fail(ErrorCode::NotProper, "triangle is not proper");
}

}  // namespace

const char* to_string(Orientation o) { return o == Orientation::ABC ? "ABC" : "ACB"; }

const char* to_string(TriangleModel m) {
    switch (m) {
        case TriangleModel::Hyperbolic: return "hyperbolic";
        case TriangleModel::Euclidean: return "euclidean";
        case TriangleModel::Spherical: return "spherical";
        case TriangleModel::PureMoebius: return "pure-moebius";
    }
    return "unknown";
}

const char* to_string(SideSplit s) {
    switch (s) {
        case SideSplit::NoSplit: return "no-split";
        case SideSplit::OnCircumcircle: return "on-circumcircle";
        case SideSplit::Splits: return "splits";
    }
    return "unknown";
}

bool check_angles(double alpha, double beta, double gamma) {
    auto ok = [](double x) { return -kPi < x && x < 3 * kPi; };
    for (double x : {alpha, beta, gamma})
        if (!(x >= 0.0 && x <= 2 * kPi)) return false;
    return ok(beta + gamma - alpha) && ok(alpha + gamma - beta) && ok(alpha + beta - gamma);
}

DigonOffsets digon_offsets(double alpha, double beta, double gamma) {
    if (!check_angles(alpha, beta, gamma)) fail(ErrorCode::Infeasible, "angles violate the triangle inequalities");
    return {(kPi + alpha - beta - gamma) / 2, (kPi - alpha + beta - gamma) / 2, (kPi - alpha - beta + gamma) / 2};
}

TriangleSides synthesize(const TriangleSpec& spec) {
    if (same_point(spec.A, spec.B) || same_point(spec.B, spec.C) || same_point(spec.A, spec.C))
        fail(ErrorCode::CoincidentVertices, "triangle vertices must be distinct");
    DigonOffsets off = digon_offsets(spec.alpha, spec.beta, spec.gamma);

    const Point& A = spec.A;
    const Point& B = spec.B;
    const Point& C = spec.C;
    bool abc = spec.orientation == Orientation::ABC;
    OrientedCycle a = abc ? side_from_offset(B, C, A, off.alpha0) : side_from_offset(C, B, A, off.alpha0);
    OrientedCycle b = abc ? side_from_offset(C, A, B, off.beta0) : side_from_offset(A, C, B, off.beta0);
    OrientedCycle c = abc ? side_from_offset(A, B, C, off.gamma0) : side_from_offset(B, A, C, off.gamma0);
    Traversal t = traversal(A, B, C, spec.orientation);
    OrientedCycle s = from_points(t.p[0], t.p[2], t.p[1]);

    const double tol = 1e-9;
    bool degenerate = false;
    double g[3] = {spec.alpha, spec.beta, spec.gamma};
    for (int i = 0; i < 3; ++i)
        if (near(g[i], kPi, tol) && near(g[(i + 1) % 3], g[(i + 2) % 3], tol)) degenerate = true;
    return TriangleSides{a, b, c, s, A, B, C, spec.orientation, degenerate};
}

Angles measure_angles(const TriangleSides& t) {
    // Sides entering and leaving each vertex along the boundary walk.
    bool abc = t.orientation == Orientation::ABC;
    const OrientedCycle& inA = abc ? t.b : t.c;
    const OrientedCycle& outA = abc ? t.c : t.b;
    const OrientedCycle& inB = abc ? t.c : t.a;
    const OrientedCycle& outB = abc ? t.a : t.c;
    const OrientedCycle& inC = abc ? t.a : t.b;
    const OrientedCycle& outC = abc ? t.b : t.a;
    auto inner_angle = [](const OrientedCycle& in, const OrientedCycle& out, const Point& v) {
        double turn;
        try {
            turn = oriented_angle(in, out, v);
        } catch (const GeometryError&) {
            fail(ErrorCode::SidesDontMeet, "sides do not meet at the vertex");
        }
        return kPi - turn;
    };
    return {inner_angle(inA, outA, t.A), inner_angle(inB, outB, t.B), inner_angle(inC, outC, t.C)};
}

TriangleModel classify_model(const Angles& g, double tol) {
    require_proper(g, tol);
    double sum = g.alpha + g.beta + g.gamma;
    if (sum < kPi - tol) return TriangleModel::Hyperbolic;
    if (sum <= kPi + tol) return TriangleModel::Euclidean;
    for (int i = 0; i < 3; ++i)
        if (side_split(g, i, tol) != SideSplit::NoSplit) return TriangleModel::PureMoebius;
    return TriangleModel::Spherical;
}

TriangleModel classify_model(const TriangleSides& sides, double tol) {
    return classify_model(measure_angles(sides), tol);
}

SideSplit side_split(const Angles& g, int which, double tol) {
    require_proper(g, tol);
    double x[3] = {g.alpha, g.beta, g.gamma};
    if (which < 0 || which > 2) fail(ErrorCode::PreconditionViolated, "side index must be 0, 1 or 2");
    double margin = x[which] - (x[(which + 1) % 3] + x[(which + 2) % 3] - kPi);
    if (margin > tol) return SideSplit::NoSplit;
    if (margin >= -tol) return SideSplit::OnCircumcircle;
    return SideSplit::Splits;
}

SideSplit side_split(const TriangleSides& sides, int which, double tol) {
    return side_split(measure_angles(sides), which, tol);
}

SideSplit side_split_geometric(const TriangleSides& t, int which, double tol) {
    const OrientedCycle* side[3] = {&t.a, &t.b, &t.c};
    const Point* opposite[3] = {&t.A, &t.B, &t.C};
    if (which < 0 || which > 2) fail(ErrorCode::PreconditionViolated, "side index must be 0, 1 or 2");
    double q = side[which]->q(opposite[which]->normalized());
    if (q < -tol) return SideSplit::NoSplit;
    if (q <= tol) return SideSplit::OnCircumcircle;
    return SideSplit::Splits;
}

}  // namespace moebius
