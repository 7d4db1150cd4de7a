#pragma once

// Scene documents, query dispatch, SVG rendering and the single JSON entry point
// shared by the command-line tool and the interactive front end.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "moebius/models.hpp"

namespace moebius::cli {

using json = nlohmann::ordered_json;

struct NamedTriangle {
    std::string name;
    TriangleSpec spec;
    TriangleSides sides;
};

struct Scene {
    std::vector<std::pair<std::string, OrientedCycle>> cycles;  // declaration order; includes triangle sides
    std::vector<NamedTriangle> triangles;
    std::vector<json> queries;
    std::optional<std::array<double, 4>> viewport;

    const OrientedCycle* find_cycle(const std::string& name) const;
    const NamedTriangle* find_triangle(const std::string& name) const;
};

// Schema problems raise GeometryError with ErrorCode::SchemaError and a line or field diagnostic.
Scene parse_scene(const std::string& text);
Scene scene_from_json(const json& doc);
// Inline cycle: {"circle": {...}}, {"line": {...}} or a raw {"k", "l", "n"} matrix, normalized.
OrientedCycle parse_cycle(const json& j, const std::string& where);

struct Context {
    double tol = kEps;
};

// ---------------------------------------------------------------- rendering

struct CirclePrim { double cx, cy, r; };
struct LinePrim { double x1, y1, x2, y2; };
struct ArcPrim { double cx, cy, r, theta1, theta2; bool ccw; };
struct PointPrim { double x, y; };

struct RenderPrimitive {
    std::variant<CirclePrim, LinePrim, ArcPrim, PointPrim> shape;
    std::string style;
};

using Viewport = std::array<double, 4>;  // xmin, ymin, xmax, ymax
inline constexpr Viewport kDefaultViewport{-2.5, -2.5, 2.5, 2.5};

// Full cycle: circle, clipped line, or point. Virtual cycles draw nothing.
void add_cycle(std::vector<RenderPrimitive>& out, const CycleVec& c, const Viewport& vp, const std::string& style);
// The arc of a from p to q through the probe point m.
void add_arc(std::vector<RenderPrimitive>& out, const OrientedCycle& a, const Point& p, const Point& q,
             const Point& m, const Viewport& vp, const std::string& style);

// Named cycles as full cycles, triangles as side arcs with vertices.
std::vector<RenderPrimitive> scene_primitives(const Scene& scene, const Viewport& vp);
json primitive_json(const RenderPrimitive& p);
std::string render_svg(const std::vector<RenderPrimitive>& prims, const Viewport& vp);

// ---------------------------------------------------------------- queries

// One result document; primitives for the figure are appended when out is non-null.
json run_query(const Scene& scene, const json& query, const Context& ctx,
               std::vector<RenderPrimitive>* out = nullptr, const Viewport& vp = kDefaultViewport);

// Query operations grouped by command name ("classify", "pencil", ...). Empty for unknown commands.
std::vector<std::string> ops_for_command(const std::string& command);

struct RunOutput {
    json document;  // {"results": [...]} or {"error": {...}}
    std::vector<RenderPrimitive> primitives;
    Viewport viewport = kDefaultViewport;
    int exit_code = 0;  // 0 ok, 2 schema, 3 geometry
};

// Runs the queries whose op is in `ops` (all when empty).
RunOutput run_scene(const Scene& scene, const Context& ctx, const std::vector<std::string>& ops = {},
                    std::optional<Viewport> viewport = std::nullopt);

// Request: a scene document. Response: the result document plus a "primitives" list,
// or {"error": {"tag", "message"}}.
json evaluate(const json& request);

// 12 significant digits; magnitudes below 1e-13 and negative zero become zero.
double rounded(double x);

}  // namespace moebius::cli
