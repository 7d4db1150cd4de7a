#include "moebius/theorems.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace moebius {

namespace {

ProjectiveReal checked_factor(const ProjectiveReal& l, const char* name) {
    ProjectiveReal n = l.normalized();
    if (n.is_zero(1e-12) || n.is_infinite(1e-12))
        fail(ErrorCode::DegenerateCevian, std::string(name) + " makes the cevian coincide with a frame cycle");
    return n;
}

// The pair of rows whose cross product is best conditioned.
Eigen::Vector3d best_cross(const std::array<Eigen::Vector3d, 3>& r) {
    Eigen::Vector3d best = r[0].cross(r[1]);
    double best_n = best.norm() / (r[0].norm() * r[1].norm());
    for (auto [i, j] : {std::pair{1, 2}, std::pair{0, 2}}) {
        Eigen::Vector3d c = r[i].cross(r[j]);
        double n = c.norm() / (r[i].norm() * r[j].norm());
        if (n > best_n) {
            best = c;
            best_n = n;
        }
    }
    return best;
}

PencilType sign_type(double v, double band) {
    return v > band ? PencilType::Elliptic : (v < -band ? PencilType::Hyperbolic : PencilType::Parabolic);
}

double quadratic_scale(const Eigen::Matrix3d& m, const Eigen::Vector3d& v) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s = std::max(s, std::abs(m(i, j) * v(i) * v(j)));
    return s;
}

std::array<double, 3> frame_cosines(const TriangleFrame& f) { return {-f.bc(), -f.ac(), -f.ab()}; }

double display_X(double ca, double cb, double cc) {
    auto tan2 = [](double c) { return (1.0 - c * c) / (c * c); };
    return tan2(ca) + tan2(cb) + tan2(cc) + 6.0 + 2.0 * (ca * ca + cb * cb + cc * cc) / (ca * cb * cc);
}

Center make_center(const TriangleFrame& f, const PencilTrilinear& p, const std::array<double, 3>& values,
                   double tol) {
    Center c;
    c.pencil = p;
    c.type = pencil_type_X(f, p, tol);
    SplittingCevian v = triangle_inequality_verdict(values, tol);
    c.predicted = v.type;
    c.splitter = v.splitter;
    return c;
}

}  // namespace

PencilTypeX pencil_type_X(const TriangleFrame& f, const PencilTrilinear& p, double tol) {
    PencilTypeX r;
    r.X = quadratic_X(f, p);
    r.scale = quadratic_scale(adjugate(f.gram()), p.vec());
    r.type = sign_type(r.X, tol * r.scale);
    return r;
}

CycleTypeY cycle_type_Y(const TriangleFrame& f, const Trilinear& t, double tol) {
    CycleTypeY r;
    r.Y = quadratic_Y(f, t);
    r.scale = quadratic_scale(f.gram(), t.vec());
    PencilType s = sign_type(r.Y, tol * r.scale);
    r.kind = s == PencilType::Elliptic ? CycleKind::Elliptic
                                       : (s == PencilType::Hyperbolic ? CycleKind::Hyperbolic : CycleKind::Parabolic);
    r.direct = cycle_at(f, t, tol).cls;
    return r;
}

Trilinear cevian(int vertex, const ProjectiveReal& lambda) {
    Eigen::Vector3d v = Eigen::Vector3d::Zero();
    v((vertex + 1) % 3) = lambda.q;
    v((vertex + 2) % 3) = -lambda.p;
    return Trilinear::of(v);
}

OrientedCycle cevian_cycle(const TriangleFrame& f, int vertex, const ProjectiveReal& lambda) {
    ProjectiveReal l = lambda.normalized();
    return normalize(l.q * f.basis((vertex + 1) % 3).vec() - l.p * f.basis((vertex + 2) % 3).vec());
}

CevaResult ceva(const TriangleFrame& f, const ProjectiveReal& lambda, const ProjectiveReal& mu,
                const ProjectiveReal& nu, double tol) {
    ProjectiveReal l = checked_factor(lambda, "lambda"), m = checked_factor(mu, "mu"), n = checked_factor(nu, "nu");
    CevaResult r;
    r.det = l.q * m.q * n.q - l.p * m.p * n.p;
    r.collinear = std::abs(r.det) <= tol;
    r.cevians = {cevian(0, l), cevian(1, m), cevian(2, n)};
    if (!r.collinear) return r;
    r.pencil = PencilTrilinear::of(best_cross({r.cevians[0].vec(), r.cevians[1].vec(), r.cevians[2].vec()}));
    r.type = pencil_type_X(f, *r.pencil);
    CycleVec va = l.q * f.b().vec() - l.p * f.c().vec();
    CycleVec vb = m.q * f.c().vec() - m.p * f.a().vec();
    if (classify(va).kind == CycleKind::Elliptic && classify(vb).kind == CycleKind::Elliptic) {
        OrientedCycle na = normalize(va), nb = normalize(vb);
        r.mutual = splitting_factor(na, f.c(), f.b().vec()) * splitting_factor(f.c(), nb, f.a().vec());
    }
    return r;
}

MenelausResult menelaus(const TriangleFrame& f, const ProjectiveReal& lambda, const ProjectiveReal& mu,
                        const ProjectiveReal& nu, double tol) {
    ProjectiveReal l = checked_factor(lambda, "lambda"), m = checked_factor(mu, "mu"), n = checked_factor(nu, "nu");
    MenelausResult r;
    r.det = l.p * m.p * n.p + l.q * m.q * n.q;
    r.concurrent = std::abs(r.det) <= tol;
    r.pencils = {PencilTrilinear{0, l.p, l.q}, PencilTrilinear{m.q, 0, m.p}, PencilTrilinear{n.p, n.q, 0}};
    if (!r.concurrent) return r;
    r.common = Trilinear::of(best_cross({r.pencils[0].vec(), r.pencils[1].vec(), r.pencils[2].vec()}));
    r.type = cycle_type_Y(f, *r.common);
    CycleVec va = l.q * f.b().vec() - l.p * f.c().vec();
    if (classify(va).kind == CycleKind::Elliptic) r.factor = n * splitting_factor(f.b(), normalize(va), f.c().vec());
    return r;
}

SplittingCevian triangle_inequality_verdict(const std::array<double, 3>& v, double tol) {
    SplittingCevian r;
    r.values = v;
    int m = static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
    double excess = v[m] - (v[(m + 1) % 3] + v[(m + 2) % 3]);
    double band = tol * std::max(1.0, v[m]);
    if (excess < -band) {
        r.type = PencilType::Elliptic;
    } else {
        r.type = excess <= band ? PencilType::Parabolic : PencilType::Hyperbolic;
        r.splitter = m;
    }
    return r;
}

SplittingCevian splitting_cevian(const TriangleFrame& f, const PencilTrilinear& p, double tol) {
    Eigen::Vector3d t = p.vec();
    double scale = t.cwiseAbs().maxCoeff();
    for (int i = 0; i < 3; ++i)
        if (std::abs(t(i)) <= 1e-12 * scale) fail(ErrorCode::ZeroCoordinate, "pencil has a zero trilinear coordinate");
    // n_a = [0 : z : -y], n_b = [-z : 0 : x], n_c = [y : -x : 0].
    std::array<double, 3> values;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        OrientedCycle n = cevian_cycle(f, i, ProjectiveReal(t(j), t(k)));
        ProjectiveReal s = splitting_factor(f.basis(j), n, f.basis(k).vec());
        values[i] = std::abs(s.value() / t(j));
    }
    return triangle_inequality_verdict(values, tol);
}

SplittingCevian splitting_cevian(const Angles& g, const PencilTrilinear& p, double tol) {
    Eigen::Vector3d t = p.vec();
    double scale = t.cwiseAbs().maxCoeff();
    for (int i = 0; i < 3; ++i)
        if (std::abs(t(i)) <= 1e-12 * scale) fail(ErrorCode::ZeroCoordinate, "pencil has a zero trilinear coordinate");
    double cs[3] = {std::cos(g.alpha), std::cos(g.beta), std::cos(g.gamma)};
    std::array<double, 3> values;
    for (int i = 0; i < 3; ++i) {
        double y = t((i + 1) % 3), z = t((i + 2) % 3);
        values[i] = std::sqrt(std::max(0.0, y * y + 2 * y * z * cs[i] + z * z)) / std::abs(y * z);
    }
    return triangle_inequality_verdict(values, tol);
}

CevianCos cevian_cos(const TriangleFrame& f, int vertex, const ProjectiveReal& lambda) {
    const OrientedCycle& a = f.basis(vertex);
    const OrientedCycle& b = f.basis((vertex + 1) % 3);
    const OrientedCycle& c = f.basis((vertex + 2) % 3);
    ProjectiveReal l = lambda.normalized();
    OrientedCycle n = cevian_cycle(f, vertex, l);
    // n = s (q b - p c): (n, b; c) = s q and (n, c; b) = -s p.
    double norm2 = l.q * l.q - 2 * l.p * l.q * inner(b, c) + l.p * l.p;
    double s = 1.0 / std::sqrt(norm2);
    CevianCos r;
    r.formula = s * l.q * inner(a, b) - s * l.p * inner(a, c);
    r.direct = inner(a, n);
    return r;
}

std::optional<ProjectiveReal> altitude(const TriangleFrame& f, int vertex, double tol) {
    const OrientedCycle& a = f.basis(vertex);
    double ab = inner(a, f.basis((vertex + 1) % 3)), ac = inner(a, f.basis((vertex + 2) % 3));
    if (std::abs(ab) <= tol && std::abs(ac) <= tol) return std::nullopt;
    return ProjectiveReal(ab, ac).normalized();
}

double orthocenter_X_display(const Angles& g) {
    return display_X(std::cos(g.alpha), std::cos(g.beta), std::cos(g.gamma));
}

std::optional<Orthocenter> orthocenter(const TriangleFrame& f, double tol) {
    auto [ca, cb, cc] = frame_cosines(f);
    int right = (std::abs(ca) <= tol) + (std::abs(cb) <= tol) + (std::abs(cc) <= tol);
    if (right >= 2) return std::nullopt;
    Orthocenter h;
    h.pencil = PencilTrilinear{cb * cc, ca * cc, ca * cb};
    h.type = pencil_type_X(f, h.pencil);
    if (right == 0) h.X_display = display_X(ca, cb, cc);
    return h;
}

Angles frame_angles(const TriangleFrame& f) {
    auto [ca, cb, cc] = frame_cosines(f);
    auto ac = [](double c) { return std::acos(std::clamp(c, -1.0, 1.0)); };
    return {ac(ca), ac(cb), ac(cc)};
}

Centers incenter_excenters(const TriangleFrame& f, double tol) {
    std::array<double, 3> cs = frame_cosines(f);
    for (double c : cs)
        if (!(std::abs(c) < 1.0)) fail(ErrorCode::NotProper, "frame is not a proper triangle");
    std::array<double, 3> half_cos, half_sin;
    for (int i = 0; i < 3; ++i) {
        half_cos[i] = std::sqrt((1.0 + cs[i]) / 2.0);
        half_sin[i] = std::sqrt((1.0 - cs[i]) / 2.0);
    }
    Centers out;
    out.incenter = make_center(f, {1, 1, 1}, half_cos, tol);
    for (int i = 0; i < 3; ++i) {
        Eigen::Vector3d p(-1, -1, -1);
        p(i) = 1;
        std::array<double, 3> v = half_sin;
        v[i] = half_cos[i];
        out.excenters[i] = make_center(f, PencilTrilinear::of(p), v, tol);
    }
    return out;
}

const char* to_string(Excircle e) {
    switch (e) {
        case Excircle::Circle: return "circle";
        case Excircle::Horocycle: return "horocycle";
        case Excircle::Equidistant: return "equidistant";
    }
    return "unknown";
}

Excircle excircle_class(const Angles& g, int side, double tol) {
    double x[3] = {g.alpha, g.beta, g.gamma};
    if (side < 0 || side > 2) fail(ErrorCode::PreconditionViolated, "side index must be 0, 1 or 2");
    if (!(x[0] > 0 && x[1] > 0 && x[2] > 0 && x[0] + x[1] + x[2] < kPi))
        fail(ErrorCode::NotHyperbolicTriangle, "excircle classes need a hyperbolic triangle");
    double d = std::cos(x[side] / 2) - std::sin(x[(side + 1) % 3] / 2) - std::sin(x[(side + 2) % 3] / 2);
    if (d < -tol) return Excircle::Circle;
    if (d <= tol) return Excircle::Horocycle;
    return Excircle::Equidistant;
}

DualityMap duality(const TriangleFrame& f) {
    if (f.type() == FrameType::Euclidean)
        fail(ErrorCode::DegenerateFrame, "complement is undefined on a Euclidean frame");
    return {adjugate(f.gram()), f.gram()};
}

Trilinear complement_pencil(const DualityMap& d, const PencilTrilinear& p) { return Trilinear::of(d.T * p.vec()); }

PencilTrilinear complement_cycle(const DualityMap& d, const Trilinear& t) {
    return PencilTrilinear::of(d.gram * t.vec());
}

namespace {
Eigen::Vector3d reciprocal(const Eigen::Vector3d& t) {
    Eigen::Vector3d r(t(1) * t(2), t(0) * t(2), t(0) * t(1));
    double s = t.cwiseAbs().maxCoeff();
    if (r.cwiseAbs().maxCoeff() <= 1e-12 * s * s)
        fail(ErrorCode::UndefinedOnFrameAxes, "isogonal conjugation is undefined on the frame axes");
    return r;
}
}  // namespace

PencilTrilinear isogonal_pencil(const PencilTrilinear& p) { return PencilTrilinear::of(reciprocal(p.vec())); }
Trilinear isogonal_cycle(const Trilinear& t) { return Trilinear::of(reciprocal(t.vec())); }

}  // namespace moebius
