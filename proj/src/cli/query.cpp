#include <cmath>
#include <cstdio>
#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

#include "moebius/cli.hpp"

namespace moebius::cli {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
    fail(ErrorCode::SchemaError, where + ": " + what);
}

// ---------------------------------------------------------------- serialization

json num(double x) { return rounded(x); }

json cplx_json(cplx z) { return json::array({num(z.real()), num(z.imag())}); }

json point_json(const Point& p) {
    if (p.is_infinite()) return "infinity";
    return cplx_json(p.value());
}

json points_json(const std::vector<Point>& ps) {
    json a = json::array();
    for (const Point& p : ps) a.push_back(point_json(p));
    return a;
}

// Full precision: emitted cycles are meant to be fed back as scene input.
json cycle_json(const CycleVec& v) { return {{"k", v.k}, {"l", json::array({v.l_re, v.l_im})}, {"n", v.n}}; }

json lambda_json(const ProjectiveReal& l) {
    ProjectiveReal n = l.normalized();
    return json::array({num(n.p), num(n.q)});
}

json triple_json(const Eigen::Vector3d& v) {
    // Scale to unit max-norm with a positive leading nonzero entry.
    double s = v.cwiseAbs().maxCoeff();
    Eigen::Vector3d w = s > 0 ? Eigen::Vector3d(v / s) : v;
    for (int i = 0; i < 3; ++i)
        if (std::abs(w(i)) > 1e-12) {
            if (w(i) < 0) w = -w;
            break;
        }
    return json::array({num(w(0)), num(w(1)), num(w(2))});
}

json matrix_json(const Eigen::Matrix3d& m) {
    json a = json::array();
    for (int i = 0; i < 3; ++i) a.push_back(json::array({num(m(i, 0)), num(m(i, 1)), num(m(i, 2))}));
    return a;
}

const char* side_name(int i) { return i == 0 ? "a" : (i == 1 ? "b" : "c"); }

json splitter_json(const std::optional<int>& s) { return s ? json(side_name(*s)) : json(nullptr); }

// ---------------------------------------------------------------- argument parsing

struct Args {
    const Scene& scene;
    const json& q;
    const Context& ctx;
    std::string where;

    const json& at(const char* key) const {
        if (!q.contains(key)) schema(where, std::string("missing field '") + key + "'");
        return q.at(key);
    }
    bool has(const char* key) const { return q.contains(key); }

    double number(const json& j, const std::string& w) const {
        if (!j.is_number()) schema(w, "expected a number");
        return j.get<double>();
    }

    OrientedCycle cycle(const json& j, const std::string& w) const {
        if (j.is_string()) {
            const OrientedCycle* c = scene.find_cycle(j.get<std::string>());
            if (!c) schema(w, "unknown cycle '" + j.get<std::string>() + "'");
            return *c;
        }
        return parse_cycle(j, w);
    }
    OrientedCycle cycle(const char* key) const { return cycle(at(key), where + "." + key); }

    std::vector<OrientedCycle> cycles(const char* key, std::size_t n) const {
        const json& a = at(key);
        if (!a.is_array() || a.size() != n) schema(where + "." + key, "expected " + std::to_string(n) + " cycles");
        std::vector<OrientedCycle> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(cycle(a[i], where + "." + key + "[" + std::to_string(i) + "]"));
        return out;
    }

    const NamedTriangle* triangle() const {
        if (!has("triangle")) return nullptr;
        const json& t = q.at("triangle");
        if (!t.is_string()) schema(where + ".triangle", "expected a triangle name");
        const NamedTriangle* nt = scene.find_triangle(t.get<std::string>());
        if (!nt) schema(where + ".triangle", "unknown triangle '" + t.get<std::string>() + "'");
        return nt;
    }

    TriangleFrame frame() const {
        if (const NamedTriangle* t = triangle()) return moebius::frame(t->sides, ctx.tol);
        auto c = cycles("frame", 3);
        return moebius::frame(c[0], c[1], c[2], ctx.tol);
    }

    Angles angles() const {
        if (has("angles")) {
            const json& a = q.at("angles");
            if (!a.is_array() || a.size() != 3) schema(where + ".angles", "expected three angles");
            return {number(a[0], where + ".angles"), number(a[1], where + ".angles"), number(a[2], where + ".angles")};
        }
        if (const NamedTriangle* t = triangle()) return {t->spec.alpha, t->spec.beta, t->spec.gamma};
        schema(where, "needs 'angles' or 'triangle'");
    }

    ProjectiveReal lambda(const json& j, const std::string& w) const {
        if (j.is_number()) return ProjectiveReal::of(j.get<double>());
        if (j == "inf") return ProjectiveReal::infinity();
        if (j.is_array() && j.size() == 2) return ProjectiveReal(number(j[0], w), number(j[1], w));
        schema(w, "expected a number, \"inf\" or [p, q]");
    }

    std::array<ProjectiveReal, 3> lambdas() const {
        const json& a = at("lambdas");
        std::string w = where + ".lambdas";
        if (!a.is_array() || a.size() != 3) schema(w, "expected three splitting factors");
        return {lambda(a[0], w), lambda(a[1], w), lambda(a[2], w)};
    }

    Eigen::Vector3d triple(const char* key) const {
        const json& a = at(key);
        std::string w = where + "." + key;
        if (!a.is_array() || a.size() != 3) schema(w, "expected a triple");
        Eigen::Vector3d v(number(a[0], w), number(a[1], w), number(a[2], w));
        if (v.isZero(0.0)) schema(w, "triple must be nonzero");
        return v;
    }

    int side(const char* key) const {
        const json& s = at(key);
        if (s == "a" || s == 0) return 0;
        if (s == "b" || s == 1) return 1;
        if (s == "c" || s == 2) return 2;
        schema(where + "." + key, "expected \"a\", \"b\" or \"c\"");
    }

    ModelTag model() const {
        const json& m = at("model");
        if (m == "spherical") return ModelTag::Spherical;
        if (m == "euclidean") return ModelTag::Euclidean;
        if (m == "hyperbolic") return ModelTag::HyperbolicHalfPlane;
        schema(where + ".model", "expected \"spherical\", \"euclidean\" or \"hyperbolic\"");
    }
};

struct Sink {
    std::vector<RenderPrimitive>* out;
    const Viewport& vp;
    void cycle(const CycleVec& c, const char* style) const {
        if (out) add_cycle(*out, c, vp, style);
    }
};

// ---------------------------------------------------------------- operations

using Handler = std::function<void(const Args&, json&, const Sink&)>;

json center_json(const Center& c) {
    return {{"pencil", triple_json(c.pencil.vec())}, {"X", num(c.type.X)}, {"type", to_string(c.type.type)},
            {"predicted", to_string(c.predicted)}, {"splitter", splitter_json(c.splitter)}};
}

void op_classify_cycle(const Args& a, json& r, const Sink& s) {
    CycleVec v;
    if (a.has("matrix")) {
        const json& m = a.at("matrix");
        std::string w = a.where + ".matrix";
        if (!m.is_object() || !m.contains("k") || !m.contains("l") || !m.contains("n"))
            schema(w, "expected {\"k\", \"l\", \"n\"}");
        const json& l = m["l"];
        if (!l.is_array() || l.size() != 2) schema(w + ".l", "expected [re, im]");
        v = {a.number(m["k"], w), a.number(l[0], w), a.number(l[1], w), a.number(m["n"], w)};
    } else {
        v = a.cycle("cycle").vec();
    }
    CycleClass c = classify(v, a.ctx.tol);
    r["kind"] = to_string(c.kind);
    r["det"] = num(c.det);
    if (c.point) r["point"] = point_json(*c.point);
    if (c.center) {
        r["center"] = cplx_json(*c.center);
        r["radius_sq"] = num(c.radius_sq);
    }
    s.cycle(v, "cycle");
}

void op_inner(const Args& a, json& r, const Sink&) {
    auto c = a.cycles("cycles", 2);
    RegimeReport rep = cosine_regime(c[0], c[1], a.ctx.tol);
    r["inner"] = num(rep.xi);
    r["regime"] = to_string(rep.regime);
    r["points"] = points_json(rep.points);
    if (rep.regime == Regime::Intersecting) r["angle"] = num(rep.angle);
    if (rep.regime == Regime::Disjoint) r["mu"] = num(rep.mu);
}

void op_pencil(const Args& a, json& r, const Sink& s) {
    auto c = a.cycles("cycles", 2);
    Pencil P = span(c[0], c[1], a.ctx.tol);
    r["type"] = to_string(P.type());
    r["xi"] = num(P.xi());
    std::vector<Point> pts = distinguished_points(P, a.ctx.tol);
    r["points"] = points_json(pts);
    CevianRange range = cevian_range(c[0], c[1], a.ctx.tol);
    r["bisector"] = lambda_json(range.bisector);
    if (range.external_bisector) r["external_bisector"] = lambda_json(*range.external_bisector);
    if (range.gap_lo) r["gap"] = json::array({num(*range.gap_lo), num(*range.gap_hi)});
    if (range.forbidden) r["forbidden"] = num(*range.forbidden);
    s.cycle(bisector(c[0], c[1], a.ctx.tol).vec(), "cevian");
    for (const Point& p : pts)
        if (s.out && !p.is_infinite()) s.out->push_back({PointPrim{p.value().real(), p.value().imag()}, "center"});
}

void op_split(const Args& a, json& r, const Sink&) {
    auto c = a.cycles("cycles", 3);
    r["lambda"] = lambda_json(splitting_factor(c[0], c[1], c[2].vec()));
    r["residual"] = num(membership_residual(c[0], c[1], c[2].vec()));
}

void op_triangle(const Args& a, json& r, const Sink&) {
    const NamedTriangle* t = a.triangle();
    if (!t) schema(a.where, "missing field 'triangle'");
    const TriangleSides& s = t->sides;
    Angles g = measure_angles(s);
    DigonOffsets off = digon_offsets(t->spec.alpha, t->spec.beta, t->spec.gamma);
    r["orientation"] = to_string(s.orientation);
    r["angles"] = json::array({num(g.alpha), num(g.beta), num(g.gamma)});
    r["offsets"] = json::array({num(off.alpha0), num(off.beta0), num(off.gamma0)});
    r["degenerate"] = s.degenerate;
    bool proper = std::max({t->spec.alpha, t->spec.beta, t->spec.gamma}) < kPi;
    r["model"] = proper ? json(to_string(classify_model(g))) : json(nullptr);
    r["sides"] = {{"a", cycle_json(s.a.vec())}, {"b", cycle_json(s.b.vec())}, {"c", cycle_json(s.c.vec())},
                  {"s", cycle_json(s.s.vec())}};
    if (proper) {
        json split = json::array();
        for (int i = 0; i < 3; ++i) split.push_back(to_string(side_split(g, i)));
        r["side_split"] = split;
    }
}

void op_frame(const Args& a, json& r, const Sink&) {
    TriangleFrame f = a.frame();
    r["gram"] = matrix_json(f.gram());
    r["det"] = num(f.det());
    r["type"] = to_string(f.type());
    if (auto p = common_point(f)) r["common_point"] = point_json(*p);
}

void draw_cevians(const TriangleFrame& f, const std::array<ProjectiveReal, 3>& l, const Sink& s) {
    for (int i = 0; i < 3; ++i) {
        ProjectiveReal n = l[i].normalized();
        CycleVec v = n.q * f.basis((i + 1) % 3).vec() - n.p * f.basis((i + 2) % 3).vec();
        if (classify(v).kind == CycleKind::Elliptic) s.cycle(v, "cevian");
    }
}

void op_ceva(const Args& a, json& r, const Sink& s) {
    TriangleFrame f = a.frame();
    auto l = a.lambdas();
    CevaResult c = ceva(f, l[0], l[1], l[2]);
    r["collinear"] = c.collinear;
    r["det"] = num(c.det);
    json cev = json::array();
    for (const Trilinear& t : c.cevians) cev.push_back(triple_json(t.vec()));
    r["cevians"] = cev;
    if (c.pencil) {
        r["pencil"] = triple_json(c.pencil->vec());
        r["X"] = num(c.type.X);
        r["type"] = to_string(c.type.type);
    }
    if (c.mutual) r["mutual"] = lambda_json(*c.mutual);
    draw_cevians(f, l, s);
}

void op_type_x(const Args& a, json& r, const Sink&) {
    PencilTypeX x = pencil_type_X(a.frame(), PencilTrilinear::of(a.triple("pencil")), a.ctx.tol);
    r["X"] = num(x.X);
    r["type"] = to_string(x.type);
}

void op_splitting_cevian(const Args& a, json& r, const Sink&) {
    PencilTrilinear p = PencilTrilinear::of(a.triple("pencil"));
    SplittingCevian c = a.has("angles") ? splitting_cevian(a.angles(), p) : splitting_cevian(a.frame(), p);
    r["values"] = json::array({num(c.values[0]), num(c.values[1]), num(c.values[2])});
    r["type"] = to_string(c.type);
    r["splitter"] = splitter_json(c.splitter);
}

void op_menelaus(const Args& a, json& r, const Sink& s) {
    TriangleFrame f = a.frame();
    auto l = a.lambdas();
    MenelausResult m = menelaus(f, l[0], l[1], l[2]);
    r["concurrent"] = m.concurrent;
    r["det"] = num(m.det);
    json ps = json::array();
    for (const PencilTrilinear& p : m.pencils) ps.push_back(triple_json(p.vec()));
    r["pencils"] = ps;
    if (m.common) {
        r["common"] = triple_json(m.common->vec());
        r["Y"] = num(m.type.Y);
        r["kind"] = to_string(m.type.kind);
        s.cycle(cycle_at(f, *m.common).vec, "common");
    }
    if (m.factor) r["factor"] = lambda_json(*m.factor);
    draw_cevians(f, l, s);
}

void op_type_y(const Args& a, json& r, const Sink&) {
    CycleTypeY y = cycle_type_Y(a.frame(), Trilinear::of(a.triple("cycle")), a.ctx.tol);
    r["Y"] = num(y.Y);
    r["kind"] = to_string(y.kind);
    r["direct"] = to_string(y.direct.kind);
}

void op_centers(const Args& a, json& r, const Sink& s) {
    TriangleFrame f = a.frame();
    Centers c = incenter_excenters(f);
    r["incenter"] = center_json(c.incenter);
    json ex = json::array();
    for (const Center& e : c.excenters) ex.push_back(center_json(e));
    r["excenters"] = ex;
    draw_cevians(f, {ProjectiveReal::of(1), ProjectiveReal::of(1), ProjectiveReal::of(1)}, s);
}

void op_orthocenter(const Args& a, json& r, const Sink& s) {
    TriangleFrame f = a.frame();
    auto h = orthocenter(f);
    r["defined"] = h.has_value();
    if (!h) return;
    r["pencil"] = triple_json(h->pencil.vec());
    r["X"] = num(h->type.X);
    r["type"] = to_string(h->type.type);
    r["X_display"] = h->X_display ? num(*h->X_display) : json(nullptr);
    for (int i = 0; i < 3; ++i) {
        auto l = altitude(f, i);
        if (!l) continue;
        ProjectiveReal n = l->normalized();
        s.cycle(n.q * f.basis((i + 1) % 3).vec() - n.p * f.basis((i + 2) % 3).vec(), "cevian");
    }
}

void op_altitude(const Args& a, json& r, const Sink&) {
    auto l = altitude(a.frame(), a.side("vertex"));
    r["lambda"] = l ? lambda_json(*l) : json(nullptr);
}

void op_excircle(const Args& a, json& r, const Sink&) {
    r["class"] = to_string(excircle_class(a.angles(), a.side("side"), a.ctx.tol));
}

void op_cevian_cos(const Args& a, json& r, const Sink&) {
    CevianCos c = cevian_cos(a.frame(), a.side("vertex"), a.lambda(a.at("lambda"), a.where + ".lambda"));
    r["formula"] = num(c.formula);
    r["direct"] = num(c.direct);
}

void op_dual(const Args& a, json& r, const Sink&) {
    TriangleFrame f = a.frame();
    DualityMap d = duality(f);
    r["det"] = num(f.det());
    r["T"] = matrix_json(d.T);
    if (a.has("pencil")) {
        r["complement"] = triple_json(complement_pencil(d, PencilTrilinear::of(a.triple("pencil"))).vec());
        r["complement_of"] = "pencil";
    } else {
        r["complement"] = triple_json(complement_cycle(d, Trilinear::of(a.triple("cycle"))).vec());
        r["complement_of"] = "cycle";
    }
}

void op_isogonal(const Args& a, json& r, const Sink&) {
    if (a.has("pencil")) {
        r["image"] = triple_json(isogonal_pencil(PencilTrilinear::of(a.triple("pencil"))).vec());
        r["image_of"] = "pencil";
    } else {
        r["image"] = triple_json(isogonal_cycle(Trilinear::of(a.triple("cycle"))).vec());
        r["image_of"] = "cycle";
    }
}

void op_model_line(const Args& a, json& r, const Sink&) {
    r["is_line"] = is_model_line(a.model(), a.cycle("cycle").vec(), a.ctx.tol);
}

void op_hyperbolic_point(const Args& a, json& r, const Sink& s) {
    const json& p = a.at("point");
    if (!p.is_array() || p.size() != 2) schema(a.where + ".point", "expected [x, y]");
    cplx z(a.number(p[0], a.where + ".point"), a.number(p[1], a.where + ".point"));
    CycleVec v = hyperbolic_point_to_cycle(z);
    r["cycle"] = cycle_json(v);
    r["round_trip"] = cplx_json(cycle_to_hyperbolic_point(v));
    if (s.out) s.out->push_back({PointPrim{z.real(), z.imag()}, "center"});
}

void op_interpret_pencil(const Args& a, json& r, const Sink& s) {
    auto c = a.cycles("cycles", 2);
    PencilInterpretation p = interpret_pencil(a.model(), span(c[0], c[1], a.ctx.tol), a.ctx.tol);
    r["model"] = to_string(p.model);
    r["type"] = to_string(p.type);
    r["points"] = points_json(p.points);
    if (p.direction) r["direction"] = cplx_json(*p.direction);
    if (p.line) {
        r["line"] = cycle_json(p.line->vec());
        s.cycle(p.line->vec(), "perpendicular");
    }
}

void op_perpendicular(const Args& a, json& r, const Sink& s) {
    auto c = a.cycles("cycles", 2);
    OrientedCycle p = common_perpendicular(c[0], c[1], a.ctx.tol);
    r["line"] = cycle_json(p.vec());
    r["distance"] = num(line_distance(c[0], c[1], a.ctx.tol));
    s.cycle(p.vec(), "perpendicular");
}

void op_menelaus_case(const Args& a, json& r, const Sink& s) {
    TriangleFrame f = a.frame();
    auto l = a.lambdas();
    MenelausTaxonomy t = menelaus_case(f, l[0], l[1], l[2]);
    r["case"] = to_string(t.tag);
    r["kind"] = to_string(t.kind);
    json ps = json::array();
    for (const auto& p : t.perpendiculars) {
        ps.push_back(p ? cycle_json(p->vec()) : json(nullptr));
        if (p) s.cycle(p->vec(), "perpendicular");
    }
    r["perpendiculars"] = ps;
    s.cycle(t.n, "common");
    draw_cevians(f, l, s);
}

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> h = {
        {"classify-cycle", op_classify_cycle},
        {"inner", op_inner},
        {"pencil", op_pencil},
        {"split", op_split},
        {"triangle", op_triangle},
        {"frame", op_frame},
        {"ceva", op_ceva},
        {"type-x", op_type_x},
        {"splitting-cevian", op_splitting_cevian},
        {"menelaus", op_menelaus},
        {"type-y", op_type_y},
        {"centers", op_centers},
        {"orthocenter", op_orthocenter},
        {"altitude", op_altitude},
        {"excircle", op_excircle},
        {"cevian-cos", op_cevian_cos},
        {"dual", op_dual},
        {"isogonal", op_isogonal},
        {"model-line", op_model_line},
        {"hyperbolic-point", op_hyperbolic_point},
        {"interpret-pencil", op_interpret_pencil},
        {"perpendicular", op_perpendicular},
        {"menelaus-case", op_menelaus_case},
    };
    return h;
}

}  // namespace

double rounded(double x) {
    if (!std::isfinite(x)) return x;
    // Round-off residue of exact zeros would otherwise leak platform noise into the goldens.
    if (std::abs(x) < 1e-13) return 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    double y = std::strtod(buf, nullptr);
    return y == 0.0 ? 0.0 : y;
}

std::vector<std::string> ops_for_command(const std::string& command) {
    static const std::map<std::string, std::vector<std::string>> groups = {
        {"classify", {"classify-cycle", "inner"}},
        {"pencil", {"pencil"}},
        {"split", {"split"}},
        {"triangle", {"triangle", "frame"}},
        {"ceva", {"ceva", "type-x", "splitting-cevian"}},
        {"menelaus", {"menelaus", "type-y"}},
        {"centers", {"centers", "orthocenter", "altitude", "excircle", "cevian-cos"}},
        {"dual", {"dual"}},
        {"isogonal", {"isogonal"}},
        {"model", {"model-line", "hyperbolic-point", "interpret-pencil", "perpendicular", "menelaus-case"}},
    };
    auto it = groups.find(command);
    return it == groups.end() ? std::vector<std::string>{} : it->second;
}

json run_query(const Scene& scene, const json& query, const Context& ctx, std::vector<RenderPrimitive>* out,
               const Viewport& vp) {
    std::string op = query.at("op").get<std::string>();
    auto it = handlers().find(op);
    if (it == handlers().end()) schema("query", "unknown op '" + op + "'");
    json r;
    r["op"] = op;
    if (query.contains("id")) r["id"] = query["id"];
    Args args{scene, query, ctx, "query(" + op + ")"};
    try {
        it->second(args, r, Sink{out, vp});
    } catch (const json::exception& e) {
        schema(args.where, e.what());
    }
    return r;
}

RunOutput run_scene(const Scene& scene, const Context& ctx, const std::vector<std::string>& ops,
                    std::optional<Viewport> viewport) {
    RunOutput o;
    o.viewport = viewport ? *viewport : scene.viewport.value_or(kDefaultViewport);
    json results = json::array();
    std::size_t index = 0;
    try {
        o.primitives = scene_primitives(scene, o.viewport);
        for (; index < scene.queries.size(); ++index) {
            const json& q = scene.queries[index];
            std::string op = q["op"].get<std::string>();
            if (!ops.empty() && std::find(ops.begin(), ops.end(), op) == ops.end()) continue;
            results.push_back(run_query(scene, q, ctx, &o.primitives, o.viewport));
        }
    } catch (const GeometryError& e) {
        json err = {{"tag", e.tag()}, {"message", e.what()}};
        if (index < scene.queries.size()) err["query"] = index;
        o.document = {{"error", err}};
        o.exit_code = e.code() == ErrorCode::SchemaError ? 2 : 3;
        return o;
    }
    o.document = {{"results", results}};
    return o;
}

json evaluate(const json& request) {
    try {
        Context ctx;
        json doc = request;
        if (doc.is_object() && doc.contains("tol")) {
            if (!doc["tol"].is_number() || !(doc["tol"].get<double>() > 0))
                fail(ErrorCode::SchemaError, "tol: expected a positive number");
            ctx.tol = doc["tol"].get<double>();
            doc.erase("tol");
        }
        RunOutput o = run_scene(scene_from_json(doc), ctx);
        if (o.exit_code != 0) return o.document;
        json prims = json::array();
        for (const RenderPrimitive& p : o.primitives) prims.push_back(primitive_json(p));
        json response = o.document;
        response["primitives"] = prims;
        response["viewport"] = json::array({num(o.viewport[0]), num(o.viewport[1]), num(o.viewport[2]), num(o.viewport[3])});
        return response;
    } catch (const GeometryError& e) {
        return {{"error", {{"tag", e.tag()}, {"message", e.what()}}}};
    }
}

}  // namespace moebius::cli
