#include <cmath>
#include <cstdio>
#include <sstream>

#include "moebius/cli.hpp"

namespace moebius::cli {

namespace {

constexpr double kMinArc = 1e-6;

void check_viewport(const Viewport& vp) {
    if (!(vp[2] > vp[0]) || !(vp[3] > vp[1]) || !std::isfinite(vp[0] + vp[1] + vp[2] + vp[3]))
        fail(ErrorCode::EmptyViewport, "viewport must have xmax > xmin and ymax > ymin");
}

// Liang-Barsky clip of z0 + t d, t in [lo, hi], to the viewport.
std::optional<LinePrim> clip(cplx z0, cplx d, double lo, double hi, const Viewport& vp) {
    double p[4] = {-d.real(), d.real(), -d.imag(), d.imag()};
    double q[4] = {z0.real() - vp[0], vp[2] - z0.real(), z0.imag() - vp[1], vp[3] - z0.imag()};
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0.0) {
            if (q[i] < 0) return std::nullopt;
            continue;
        }
        double t = q[i] / p[i];
        if (p[i] < 0) lo = std::max(lo, t);
        else hi = std::min(hi, t);
    }
    if (!(lo < hi)) return std::nullopt;
    cplx a = z0 + lo * d, b = z0 + hi * d;
    return LinePrim{a.real(), a.imag(), b.real(), b.imag()};
}

double span_of(const Viewport& vp) { return std::hypot(vp[2] - vp[0], vp[3] - vp[1]); }

bool is_line_vec(const CycleVec& c) { return std::abs(c.k) <= 1e-12 * std::max(1.0, c.max_abs()); }

// Point on the line and unit travel direction (left half-plane Q < 0 on the left).
std::pair<cplx, cplx> line_data(const CycleVec& c) {
    cplx l = c.l();
    cplx z0 = -c.n * std::conj(l) / (2.0 * std::norm(l));
    cplx d = cplx(0, 1) * std::conj(l);
    return {z0, d / std::abs(d)};
}

void push_line(std::vector<RenderPrimitive>& out, cplx z0, cplx d, double lo, double hi, const Viewport& vp,
               const std::string& style) {
    if (auto seg = clip(z0, d, lo, hi, vp)) out.push_back({*seg, style});
}

double wrap(double t) {
    double r = std::fmod(t, 2 * kPi);
    return r < 0 ? r + 2 * kPi : r;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

}  // namespace

void add_cycle(std::vector<RenderPrimitive>& out, const CycleVec& c, const Viewport& vp, const std::string& style) {
    check_viewport(vp);
    CycleClass cls = classify(c);
    if (cls.kind == CycleKind::Hyperbolic) return;
    if (cls.kind == CycleKind::Parabolic) {
        if (cls.point && !cls.point->is_infinite()) {
            cplx z = cls.point->value();
            out.push_back({PointPrim{z.real(), z.imag()}, style});
        }
        return;
    }
    if (is_line_vec(c)) {
        auto [z0, d] = line_data(c);
        double big = 4 * (span_of(vp) + std::abs(z0));
        push_line(out, z0, d, -big, big, vp, style);
        return;
    }
    cplx o = -std::conj(c.l()) / c.k;
    double r = std::sqrt(-c.det()) / std::abs(c.k);
    out.push_back({CirclePrim{o.real(), o.imag(), r}, style});
}

void add_arc(std::vector<RenderPrimitive>& out, const OrientedCycle& a, const Point& p, const Point& q,
             const Point& m, const Viewport& vp, const std::string& style) {
    check_viewport(vp);
    const CycleVec& c = a.vec();
    if (is_line_vec(c)) {
        auto [z0, d] = line_data(c);
        double big = 4 * (span_of(vp) + std::abs(z0));
        auto param = [&](const Point& z) { return std::real((z.value() - z0) * std::conj(d)); };
        bool pinf = p.is_infinite(), qinf = q.is_infinite();
        if (pinf && qinf) return;
        double tm = param(m);
        if (pinf || qinf) {
            double t = param(pinf ? q : p);
            if (tm > t) push_line(out, z0, d, t, big, vp, style);
            else push_line(out, z0, d, -big, t, vp, style);
            return;
        }
        double tp = param(p), tq = param(q);
        double lo = std::min(tp, tq), hi = std::max(tp, tq);
        if (tm > lo && tm < hi) {
            push_line(out, z0, d, lo, hi, vp, style);
        } else {
            // The segment through infinity.
            push_line(out, z0, d, -big, lo, vp, style);
            push_line(out, z0, d, hi, big, vp, style);
        }
        return;
    }
    cplx o = a.center();
    double r = std::abs(a.signed_radius());
    double tp = std::arg(p.value() - o), tq = std::arg(q.value() - o), tm = std::arg(m.value() - o);
    double s = wrap(tq - tp), t = wrap(tm - tp);
    bool ccw = t < s;
    double len = ccw ? s : 2 * kPi - s;
    if (len < kMinArc) {
        cplx z = p.value();
        out.push_back({PointPrim{z.real(), z.imag()}, style});
        return;
    }
    out.push_back({ArcPrim{o.real(), o.imag(), r, tp, tq, ccw}, style});
}

std::vector<RenderPrimitive> scene_primitives(const Scene& scene, const Viewport& vp) {
    check_viewport(vp);
    std::vector<RenderPrimitive> out;
    for (const auto& [name, c] : scene.cycles) {
        bool side = false;
        for (const auto& t : scene.triangles) side = side || name.rfind(t.name + ".", 0) == 0;
        if (!side) add_cycle(out, c.vec(), vp, "cycle");
    }
    for (const auto& t : scene.triangles) {
        const TriangleSides& s = t.sides;
        add_cycle(out, s.s.vec(), vp, "circumcycle");
        DigonOffsets off = digon_offsets(t.spec.alpha, t.spec.beta, t.spec.gamma);
        bool abc = s.orientation == Orientation::ABC;
        struct SideRef { const OrientedCycle& cyc; const Point& u; const Point& v; const Point& w; double theta; };
        SideRef refs[3] = {
            {s.a, abc ? s.B : s.C, abc ? s.C : s.B, s.A, off.alpha0},
            {s.b, abc ? s.C : s.A, abc ? s.A : s.C, s.B, off.beta0},
            {s.c, abc ? s.A : s.B, abc ? s.B : s.A, s.C, off.gamma0},
        };
        for (const SideRef& r : refs) {
            // Same chart as synthesis: v -> 0, w -> -1, u -> inf; the side runs along the ray through e^{-i theta}.
            MoebiusMap phi = MoebiusMap(-1.0, 0.0, 0.0, 1.0) * MoebiusMap::to_zero_one_inf(r.v, r.w, r.u);
            Point m = phi.inverse()(Point::finite(std::polar(1.0, -r.theta)));
            add_arc(out, r.cyc, r.u, r.v, m, vp, "side");
        }
        for (const Point* v : {&s.A, &s.B, &s.C}) {
            cplx z = v->value();
            out.push_back({PointPrim{z.real(), z.imag()}, "vertex"});
        }
    }
    return out;
}

json primitive_json(const RenderPrimitive& p) {
    json j;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CirclePrim>) {
                j = {{"type", "circle"}, {"cx", rounded(s.cx)}, {"cy", rounded(s.cy)}, {"r", rounded(s.r)}};
            } else if constexpr (std::is_same_v<T, LinePrim>) {
                j = {{"type", "line"}, {"x1", rounded(s.x1)}, {"y1", rounded(s.y1)},
                     {"x2", rounded(s.x2)}, {"y2", rounded(s.y2)}};
            } else if constexpr (std::is_same_v<T, ArcPrim>) {
                j = {{"type", "arc"}, {"cx", rounded(s.cx)}, {"cy", rounded(s.cy)}, {"r", rounded(s.r)},
                     {"theta1", rounded(s.theta1)}, {"theta2", rounded(s.theta2)}, {"ccw", s.ccw}};
            } else {
                j = {{"type", "point"}, {"x", rounded(s.x)}, {"y", rounded(s.y)}};
            }
        },
        p.shape);
    j["style"] = p.style;
    return j;
}

std::string render_svg(const std::vector<RenderPrimitive>& prims, const Viewport& vp) {
    check_viewport(vp);
    const double width = 600.0;
    double scale = width / (vp[2] - vp[0]);
    double height = (vp[3] - vp[1]) * scale;
    auto X = [&](double x) { return fmt((x - vp[0]) * scale); };
    auto Y = [&](double y) { return fmt((vp[3] - y) * scale); };
    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    o << "<style>\n"
         "  .cycle { stroke: #555555; stroke-width: 1; fill: none; }\n"
         "  .circumcycle { stroke: #999999; stroke-width: 1; stroke-dasharray: 4 3; fill: none; }\n"
         "  .side { stroke: #000000; stroke-width: 2.5; fill: none; }\n"
         "  .cevian { stroke: #1f5fbf; stroke-width: 1.2; fill: none; }\n"
         "  .perpendicular { stroke: #bf1f1f; stroke-width: 1.2; fill: none; }\n"
         "  .common { stroke: #2f9f2f; stroke-width: 1.5; fill: none; }\n"
         "  .vertex, .center { stroke: none; fill: #000000; }\n"
         "</style>\n";
    o << "<rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height) << "\" fill=\"#ffffff\"/>\n";
    for (const RenderPrimitive& p : prims) {
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, CirclePrim>) {
                    o << "<circle class=\"" << p.style << "\" cx=\"" << X(s.cx) << "\" cy=\"" << Y(s.cy) << "\" r=\""
                      << fmt(s.r * scale) << "\"/>\n";
                } else if constexpr (std::is_same_v<T, LinePrim>) {
                    o << "<line class=\"" << p.style << "\" x1=\"" << X(s.x1) << "\" y1=\"" << Y(s.y1) << "\" x2=\""
                      << X(s.x2) << "\" y2=\"" << Y(s.y2) << "\"/>\n";
                } else if constexpr (std::is_same_v<T, ArcPrim>) {
                    double len = wrap(s.ccw ? s.theta2 - s.theta1 : s.theta1 - s.theta2);
                    double x1 = s.cx + s.r * std::cos(s.theta1), y1 = s.cy + s.r * std::sin(s.theta1);
                    double x2 = s.cx + s.r * std::cos(s.theta2), y2 = s.cy + s.r * std::sin(s.theta2);
                    // y points down on screen, so counter-clockwise in the plane is sweep flag 0.
                    o << "<path class=\"" << p.style << "\" d=\"M " << X(x1) << " " << Y(y1) << " A "
                      << fmt(s.r * scale) << " " << fmt(s.r * scale) << " 0 " << (len > kPi ? 1 : 0) << " "
                      << (s.ccw ? 0 : 1) << " " << X(x2) << " " << Y(y2) << "\"/>\n";
                } else {
                    o << "<circle class=\"" << p.style << "\" cx=\"" << X(s.x) << "\" cy=\"" << Y(s.y)
                      << "\" r=\"3.000\"/>\n";
                }
            },
            p.shape);
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace moebius::cli
