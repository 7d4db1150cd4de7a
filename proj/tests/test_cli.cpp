#include <gtest/gtest.h>

#include <cmath>
#include <regex>

#include "moebius/cli.hpp"

using namespace moebius;
using namespace moebius::cli;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const GeometryError& e) {
        return e.code();
    }
    return ErrorCode::PreconditionViolated;  // sentinel: nothing thrown
}

json run_one(const std::string& scene_text, const json& query) {
    Scene s = parse_scene(scene_text);
    return run_query(s, query, Context{});
}

const char* kTwoCircles = R"({"cycles": {
    "a": {"circle": {"center": [0, 0], "r": 1}},
    "b": {"circle": {"center": [1.5, 0], "r": 1}},
    "c": {"circle": {"center": [0.6, 1.3], "r": 0.8}},
    "u": {"circle": {"center": [0, 0], "r": 1, "ccw": true}}}})";

const char* kEquilateralChord = R"({"triangles": {"E": {
    "vertices": [[0, 1], [-0.8660254037844386, -0.5], [0.8660254037844386, -0.5]],
    "angles": [1.0471975511965976, 1.0471975511965976, 1.0471975511965976]}}})";

}  // namespace

// ---------------------------------------------------------------- parsing

TEST(ParseScene, CycleForms) {
    Scene s = parse_scene(R"({"cycles": {
        "u": {"circle": {"center": [0, 0], "r": 1, "ccw": true}},
        "r": {"line": {"point": [0, 0], "dir": [1, 0]}},
        "m": {"k": 1, "l": [-3, 0], "n": -1}}})");
    ASSERT_EQ(s.cycles.size(), 3u);
    const CycleVec& u = s.find_cycle("u")->vec();
    EXPECT_NEAR((u - from_circle(0.0, 1.0).vec()).norm(), 0.0, 1e-12);
    EXPECT_NEAR(u.det(), -1.0, 1e-12);

    // Real axis up to orientation.
    const CycleVec& r = s.find_cycle("r")->vec();
    EXPECT_NEAR(r.k, 0.0, 1e-15);
    EXPECT_NEAR(r.l_re, 0.0, 1e-15);
    EXPECT_NEAR(std::abs(r.l_im), 1.0, 1e-15);
    EXPECT_NEAR(r.n, 0.0, 1e-15);

    // <M, M> = 9 + 1, so the library divides by sqrt(10).
    const CycleVec& m = s.find_cycle("m")->vec();
    double k = 1 / std::sqrt(10.0);
    EXPECT_NEAR(std::abs(m.k), k, 1e-12);
    EXPECT_NEAR(m.l_re / m.k, -3.0, 1e-12);
    EXPECT_NEAR(m.n / m.k, -1.0, 1e-12);
    EXPECT_NEAR(m.det(), -1.0, 1e-12);
}

TEST(ParseScene, TrianglesExposeSides) {
    Scene s = parse_scene(kEquilateralChord);
    ASSERT_EQ(s.triangles.size(), 1u);
    for (const char* n : {"E.a", "E.b", "E.c", "E.s"}) EXPECT_NE(s.find_cycle(n), nullptr) << n;
    EXPECT_EQ(s.triangles[0].spec.orientation, Orientation::ABC);
}

TEST(ParseScene, SchemaErrors) {
    auto bad = [](const std::string& text) { return code_of([&] { parse_scene(text); }); };
    EXPECT_EQ(bad("{\"cycles\": {\n  \"u\": {\"circle\": }\n}}"), ErrorCode::SchemaError);
    EXPECT_EQ(bad(R"({"shapes": {}})"), ErrorCode::SchemaError);
    EXPECT_EQ(bad(R"({"cycles": {"u": {"circle": {"center": [0, 0], "r": -1}}}})"), ErrorCode::SchemaError);
    EXPECT_EQ(bad(R"({"cycles": {"u": {"circle": {"center": [0], "r": 1}}}})"), ErrorCode::SchemaError);
    EXPECT_EQ(bad(R"({"cycles": {"u": {"line": {"point": [0, 0], "dir": [0, 0]}}}})"), ErrorCode::SchemaError);
    EXPECT_EQ(bad(R"({"cycles": {"u": {"ellipse": {}}}})"), ErrorCode::SchemaError);
    EXPECT_EQ(bad(R"({"queries": [{"name": "x"}]})"), ErrorCode::SchemaError);
    EXPECT_EQ(bad(R"({"viewport": [0, 0, 1]})"), ErrorCode::SchemaError);
    // A triangle claims its side names.
    EXPECT_EQ(bad(R"({"cycles": {"T.a": {"circle": {"center": [0, 0], "r": 1}}},
                      "triangles": {"T": {"vertices": [[0, 1], [-1, 0], [1, 0]], "angles": [1, 1, 1]}}})"),
              ErrorCode::SchemaError);
}

TEST(ParseScene, JsonErrorsReportTheLine) {
    try {
        parse_scene("{\n  \"cycles\": {\n    \"u\": ,\n  }\n}");
        FAIL() << "expected a schema error";
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.code(), ErrorCode::SchemaError);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

// ---------------------------------------------------------------- queries

TEST(Query, CevaAtUnitFactorsIsTheIncenter) {
    json r = run_one(kTwoCircles, {{"op", "ceva"}, {"frame", {"a", "b", "c"}}, {"lambdas", {{1, 1}, {1, 1}, {1, 1}}}});
    EXPECT_EQ(r["op"], "ceva");
    EXPECT_EQ(r["collinear"], true);
    EXPECT_EQ(r["pencil"], json::array({1.0, 1.0, 1.0}));
    EXPECT_TRUE(r.contains("X"));
    EXPECT_TRUE(r.contains("type"));
}

TEST(Query, ClassifyCycle) {
    EXPECT_EQ(run_one(kTwoCircles, {{"op", "classify-cycle"}, {"cycle", "u"}})["kind"], "elliptic");
    json z = run_one("{}", {{"op", "classify-cycle"}, {"matrix", {{"k", 1}, {"l", {0, 0}}, {"n", 0}}}});
    EXPECT_EQ(z["kind"], "parabolic");
    EXPECT_EQ(z["point"], json::array({0.0, 0.0}));
    json v = run_one("{}", {{"op", "classify-cycle"}, {"matrix", {{"k", 1}, {"l", {0, 0}}, {"n", 1}}}});
    EXPECT_EQ(v["kind"], "hyperbolic");
}

TEST(Query, ExcircleOfTheThreeQuarterPiTriangle) {
    json r = run_one("{}", {{"op", "excircle"}, {"angles", {0.7854, 0.7854, 0.7854}}, {"side", "a"}});
    EXPECT_EQ(r["class"], "equidistant");
}

TEST(Query, LambdasAreHomogeneousPairs) {
    json r = run_one(kEquilateralChord, {{"op", "altitude"}, {"triangle", "E"}, {"vertex", "a"}});
    ASSERT_TRUE(r["lambda"].is_array());
    ASSERT_EQ(r["lambda"].size(), 2u);
    EXPECT_NEAR(r["lambda"][0].get<double>(), r["lambda"][1].get<double>(), 1e-9);
    // "inf" parses; the cevian at infinity is a side, which the library rejects.
    Scene s = parse_scene(kTwoCircles);
    json q = {{"op", "ceva"}, {"frame", {"a", "b", "c"}}, {"lambdas", {"inf", 1, 1}}};
    EXPECT_EQ(code_of([&] { run_query(s, q, Context{}); }), ErrorCode::DegenerateCevian);
    q["lambdas"] = {{1, 2}, 2, 1};
    EXPECT_EQ(run_query(s, q, Context{})["cevians"][0], json::array({0.0, 1.0, -0.5}));
}

TEST(Query, PointsAndIdsAreEchoed) {
    json r = run_one(R"({"cycles": {"p": {"line": {"point": [0, 0], "dir": [1, 0]}},
                                    "q": {"line": {"point": [0, 1], "dir": [1, 0]}}}})",
                     {{"op", "pencil"}, {"id", "parallel"}, {"cycles", {"p", "q"}}});
    EXPECT_EQ(r["id"], "parallel");
    EXPECT_EQ(r["type"], "parabolic");
    EXPECT_EQ(r["points"], json::array({"infinity"}));
}

TEST(Query, ModelOperations) {
    json line = run_one("{}", {{"op", "model-line"},
                               {"model", "hyperbolic"},
                               {"cycle", {{"circle", {{"center", {2, 0}}, {"r", 1}}}}}});
    EXPECT_EQ(line["is_line"], true);
    json d = run_one(R"({"cycles": {"a": {"circle": {"center": [0, 0], "r": 1}},
                                    "b": {"circle": {"center": [0, 0], "r": 2}}}})",
                     {{"op", "perpendicular"}, {"cycles", {"a", "b"}}});
    EXPECT_NEAR(d["distance"].get<double>(), std::log(2.0), 1e-9);
}

TEST(Query, SchemaAndGeometryFailures) {
    Scene s = parse_scene(kTwoCircles);
    EXPECT_EQ(code_of([&] { run_query(s, {{"op", "warp"}}, Context{}); }), ErrorCode::SchemaError);
    EXPECT_EQ(code_of([&] { run_query(s, {{"op", "classify-cycle"}, {"cycle", "zz"}}, Context{}); }),
              ErrorCode::SchemaError);
    EXPECT_EQ(code_of([&] { run_query(s, {{"op", "excircle"}, {"angles", {1, 1, 1}}, {"side", "d"}}, Context{}); }),
              ErrorCode::SchemaError);
    EXPECT_EQ(code_of([&] { run_query(s, {{"op", "perpendicular"}, {"cycles", {"a", "b"}}}, Context{}); }),
              ErrorCode::NotDisjoint);
}

TEST(RunScene, ExitCodesAndErrorDocuments) {
    Scene ok = parse_scene(kTwoCircles);
    ok.queries = {{{"op", "classify-cycle"}, {"cycle", "a"}}, {{"op", "frame"}, {"frame", {"a", "b", "c"}}}};
    RunOutput r = run_scene(ok, Context{});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.document["results"].size(), 2u);

    RunOutput only = run_scene(ok, Context{}, ops_for_command("triangle"));
    ASSERT_EQ(only.document["results"].size(), 1u);
    EXPECT_EQ(only.document["results"][0]["op"], "frame");

    Scene geo = ok;
    geo.queries.push_back({{"op", "perpendicular"}, {"cycles", {"a", "b"}}});
    RunOutput g = run_scene(geo, Context{});
    EXPECT_EQ(g.exit_code, 3);
    EXPECT_EQ(g.document["error"]["tag"], "not-disjoint");
    EXPECT_EQ(g.document["error"]["query"], 2);

    Scene sch = ok;
    sch.queries.push_back({{"op", "frame"}, {"frame", {"a", "b"}}});
    EXPECT_EQ(run_scene(sch, Context{}).exit_code, 2);
}

// ---------------------------------------------------------------- rendering

TEST(Render, UnitCircleIsOneCircleElement) {
    Scene s = parse_scene(R"({"cycles": {"u": {"circle": {"center": [0, 0], "r": 1, "ccw": true}}}})");
    Viewport vp{-2, -2, 2, 2};
    std::string svg = render_svg(scene_primitives(s, vp), vp);
    std::regex circle("<circle ");
    auto n = std::distance(std::sregex_iterator(svg.begin(), svg.end(), circle), std::sregex_iterator());
    EXPECT_EQ(n, 1);
    EXPECT_NE(svg.find("cx=\"300.000\" cy=\"300.000\" r=\"150.000\""), std::string::npos) << svg;
    EXPECT_EQ(svg.find("<path"), std::string::npos);
}

TEST(Render, EmptyViewport) {
    Scene s = parse_scene(kTwoCircles);
    EXPECT_EQ(code_of([&] { scene_primitives(s, {1, 0, 1, 2}); }), ErrorCode::EmptyViewport);
    EXPECT_EQ(code_of([&] { render_svg({}, {0, 3, 1, 2}); }), ErrorCode::EmptyViewport);
    s.viewport = Viewport{0, 0, 0, 0};
    EXPECT_EQ(run_scene(s, Context{}).exit_code, 3);
}

TEST(Render, LinesAreClippedToTheViewport) {
    std::vector<RenderPrimitive> out;
    add_cycle(out, from_line(cplx(0, 0.5), 1.0).vec(), {-1, -1, 1, 1}, "cycle");
    ASSERT_EQ(out.size(), 1u);
    const auto& l = std::get<LinePrim>(out[0].shape);
    EXPECT_NEAR(std::min(l.x1, l.x2), -1.0, 1e-12);
    EXPECT_NEAR(std::max(l.x1, l.x2), 1.0, 1e-12);
    EXPECT_NEAR(l.y1, 0.5, 1e-12);
    out.clear();
    add_cycle(out, from_line(cplx(0, 5), 1.0).vec(), {-1, -1, 1, 1}, "cycle");
    EXPECT_TRUE(out.empty());
}

// Straight sides of a Euclidean triangle must be the segments between the vertices,
// not the complementary rays through infinity.
TEST(Render, ChordTriangleSidesAreSegments) {
    Scene s = parse_scene(kEquilateralChord);
    Viewport vp{-2, -2, 2, 2};
    auto prims = scene_primitives(s, vp);
    int sides = 0;
    for (const auto& p : prims) {
        if (p.style != "side") continue;
        ++sides;
        const auto* l = std::get_if<LinePrim>(&p.shape);
        ASSERT_NE(l, nullptr);
        double len = std::hypot(l->x2 - l->x1, l->y2 - l->y1);
        EXPECT_NEAR(len, std::sqrt(3.0), 1e-9);
    }
    EXPECT_EQ(sides, 3);
}

// Curved sides: the arc runs between its two vertices and bulges to the side of the probe point.
TEST(Render, ArcsJoinVerticesAndAvoidTheCircumcycleInterior) {
    Scene s = parse_scene(R"({"triangles": {"T": {
        "vertices": [[0, 1], [-0.8660254037844386, -0.5], [0.8660254037844386, -0.5]],
        "angles": [0.4, 0.5, 0.6]}}})");
    const TriangleSides& t = s.triangles[0].sides;
    auto prims = scene_primitives(s, {-3, -3, 3, 3});
    int arcs = 0;
    for (const auto& p : prims) {
        const auto* a = std::get_if<ArcPrim>(&p.shape);
        if (!a || p.style != "side") continue;
        ++arcs;
        cplx e1 = std::polar(a->r, a->theta1) + cplx(a->cx, a->cy);
        cplx e2 = std::polar(a->r, a->theta2) + cplx(a->cx, a->cy);
        auto is_vertex = [&](cplx z) {
            return std::abs(z - t.A.value()) < 1e-9 || std::abs(z - t.B.value()) < 1e-9 ||
                   std::abs(z - t.C.value()) < 1e-9;
        };
        EXPECT_TRUE(is_vertex(e1));
        EXPECT_TRUE(is_vertex(e2));
        // Angle sum below pi: sides of an interior triangle stay inside the circumcircle.
        double span = a->ccw ? a->theta2 - a->theta1 : a->theta1 - a->theta2;
        span = std::fmod(span + 4 * kPi, 2 * kPi);
        double mid = a->ccw ? a->theta1 + span / 2 : a->theta1 - span / 2;
        cplx m = std::polar(a->r, mid) + cplx(a->cx, a->cy);
        EXPECT_LT(std::abs(m), 1.0) << "side arc leaves the circumcircle";
    }
    EXPECT_EQ(arcs, 3);
}

TEST(Render, OutputIsDeterministic) {
    std::string text = std::string(kTwoCircles);
    text.back() = ',';
    text += R"("queries": [{"op": "ceva", "frame": ["a", "b", "c"], "lambdas": [[1, 2], [2, 1], [1, 1]]}]})";
    auto once = [&] {
        RunOutput r = run_scene(parse_scene(text), Context{});
        return r.document.dump() + render_svg(r.primitives, r.viewport);
    };
    std::string first = once();
    for (int i = 0; i < 5; ++i) EXPECT_EQ(once(), first);
}

// ---------------------------------------------------------------- round trip and entry point

TEST(RoundTrip, DerivedSidesReevaluateIdentically) {
    const char* text = R"({"triangles": {"T": {
        "vertices": [[0, 1], [-0.8660254037844386, -0.5], [0.8660254037844386, -0.5]],
        "angles": [0.7853981633974483, 2.356194490192345, 2.356194490192345]}},
        "queries": [{"op": "triangle", "triangle": "T"},
                    {"op": "centers", "triangle": "T"},
                    {"op": "ceva", "triangle": "T", "lambdas": [[1, 2], [2, 1], [1, 1]]}]})";
    RunOutput first = run_scene(parse_scene(text), Context{});
    ASSERT_EQ(first.exit_code, 0);
    const json& sides = first.document["results"][0]["sides"];

    // Scene with the derived side matrices as plain cycles.
    json doc = {{"cycles", {{"a", sides["a"]}, {"b", sides["b"]}, {"c", sides["c"]}}},
                {"queries", json::array({{{"op", "centers"}, {"frame", {"a", "b", "c"}}},
                                         {{"op", "ceva"}, {"frame", {"a", "b", "c"}},
                                          {"lambdas", {{1, 2}, {2, 1}, {1, 1}}}}})}};
    RunOutput second = run_scene(parse_scene(doc.dump()), Context{});
    ASSERT_EQ(second.exit_code, 0);
    EXPECT_EQ(second.document["results"][0], first.document["results"][1]);
    EXPECT_EQ(second.document["results"][1], first.document["results"][2]);

    // And the derived scene itself re-parses to the same results.
    RunOutput third = run_scene(parse_scene(doc.dump(2)), Context{});
    EXPECT_EQ(third.document, second.document);
}

TEST(Evaluate, ResultsAndPrimitives) {
    json req = json::parse(kTwoCircles);
    req["queries"] = {{{"op", "ceva"}, {"frame", {"a", "b", "c"}}, {"lambdas", {{1, 1}, {1, 1}, {1, 1}}}}};
    json r = evaluate(req);
    ASSERT_TRUE(r.contains("results")) << r.dump();
    EXPECT_EQ(r["results"][0]["pencil"], json::array({1.0, 1.0, 1.0}));
    ASSERT_TRUE(r["primitives"].is_array());
    int cycles = 0, cevians = 0;
    for (const auto& p : r["primitives"]) {
        cycles += p["style"] == "cycle";
        cevians += p["style"] == "cevian";
    }
    EXPECT_EQ(cycles, 4);
    EXPECT_GE(cevians, 1);
    EXPECT_EQ(r["viewport"], json::array({-2.5, -2.5, 2.5, 2.5}));
}

TEST(Evaluate, ErrorsAreStructured) {
    json bad = evaluate(json::parse(R"({"cycles": {"u": {"circle": {"center": [0, 0], "r": 0}}}})"));
    EXPECT_EQ(bad["error"]["tag"], "schema-error");
    json geo = evaluate(json::parse(R"({"cycles": {"a": {"circle": {"center": [0, 0], "r": 1}},
        "b": {"circle": {"center": [0.5, 0], "r": 1}}}, "queries": [{"op": "perpendicular", "cycles": ["a", "b"]}]})"));
    EXPECT_EQ(geo["error"]["tag"], "not-disjoint");
    EXPECT_EQ(evaluate(json::parse(R"({"tol": -1})"))["error"]["tag"], "schema-error");
}

TEST(Evaluate, ToleranceReachesClassification) {
    // Circles at distance 2 + 1e-7: disjoint at the default tolerance, tangent at a coarse one.
    json req = json::parse(R"({"cycles": {"a": {"circle": {"center": [0, 0], "r": 1}},
        "b": {"circle": {"center": [2.0000001, 0], "r": 1}}}, "queries": [{"op": "pencil", "cycles": ["a", "b"]}]})");
    EXPECT_EQ(evaluate(req)["results"][0]["type"], "hyperbolic");
    req["tol"] = 1e-3;
    EXPECT_EQ(evaluate(req)["results"][0]["type"], "parabolic");
}

TEST(Rounding, TwelveDigitsAndNoNegativeZero) {
    EXPECT_EQ(rounded(1.0 / 3.0), 0.333333333333);
    EXPECT_EQ(rounded(-0.0), 0.0);
    EXPECT_FALSE(std::signbit(rounded(-1e-17)));
    EXPECT_EQ(rounded(2.0), 2.0);
}
