#include <cmath>
#include <set>

#include "moebius/cli.hpp"

namespace moebius::cli {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
    fail(ErrorCode::SchemaError, where + ": " + what);
}

double number(const json& j, const std::string& where) {
    if (!j.is_number()) schema(where, "expected a number");
    double v = j.get<double>();
    if (!std::isfinite(v)) schema(where, "expected a finite number");
    return v;
}

cplx pair(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) schema(where, "expected [x, y]");
    return {number(j[0], where + "[0]"), number(j[1], where + "[1]")};
}

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) schema(where, std::string("missing field '") + key + "'");
    return obj.at(key);
}

void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : keys) ok = ok || it.key() == k;
        if (!ok) schema(where, "unknown field '" + it.key() + "'");
    }
}

Orientation orientation(const json& j, const std::string& where) {
    if (j == "ABC") return Orientation::ABC;
    if (j == "ACB") return Orientation::ACB;
    schema(where, "orientation must be \"ABC\" or \"ACB\"");
}

}  // namespace

OrientedCycle parse_cycle(const json& j, const std::string& where) {
    if (!j.is_object()) schema(where, "expected a cycle object");
    if (j.contains("circle")) {
        only_keys(j, {"circle"}, where);
        const json& c = j["circle"];
        std::string w = where + ".circle";
        if (!c.is_object()) schema(w, "expected an object");
        only_keys(c, {"center", "r", "ccw"}, w);
        double r = number(field(c, "r", w), w + ".r");
        if (!(r > 0)) schema(w + ".r", "radius must be positive");
        bool ccw = true;
        if (c.contains("ccw")) {
            if (!c["ccw"].is_boolean()) schema(w + ".ccw", "expected a boolean");
            ccw = c["ccw"].get<bool>();
        }
        return from_circle(pair(field(c, "center", w), w + ".center"), ccw ? r : -r);
    }
    if (j.contains("line")) {
        only_keys(j, {"line"}, where);
        const json& l = j["line"];
        std::string w = where + ".line";
        if (!l.is_object()) schema(w, "expected an object");
        only_keys(l, {"point", "dir"}, w);
        cplx d = pair(field(l, "dir", w), w + ".dir");
        if (d == cplx(0)) schema(w + ".dir", "direction must be nonzero");
        return from_line(pair(field(l, "point", w), w + ".point"), d);
    }
    if (j.contains("k")) {
        only_keys(j, {"k", "l", "n"}, where);
        CycleVec v{number(field(j, "k", where), where + ".k"), 0, 0, number(field(j, "n", where), where + ".n")};
        cplx l = pair(field(j, "l", where), where + ".l");
        v.l_re = l.real();
        v.l_im = l.imag();
        return normalize(v);
    }
    schema(where, "cycle needs one of 'circle', 'line' or 'k'/'l'/'n'");
}

const OrientedCycle* Scene::find_cycle(const std::string& name) const {
    for (const auto& [n, c] : cycles)
        if (n == name) return &c;
    return nullptr;
}

const NamedTriangle* Scene::find_triangle(const std::string& name) const {
    for (const auto& t : triangles)
        if (t.name == name) return &t;
    return nullptr;
}

Scene scene_from_json(const json& doc) {
    if (!doc.is_object()) schema("scene", "expected an object");
    only_keys(doc, {"cycles", "triangles", "queries", "viewport"}, "scene");
    Scene s;
    std::set<std::string> names;
    auto claim = [&](const std::string& name, const std::string& where) {
        if (name.empty()) schema(where, "empty name");
        if (!names.insert(name).second) schema(where, "duplicate name '" + name + "'");
    };
    if (doc.contains("cycles")) {
        const json& cs = doc["cycles"];
        if (!cs.is_object()) schema("cycles", "expected an object of named cycles");
        for (auto it = cs.begin(); it != cs.end(); ++it) {
            std::string where = "cycles." + it.key();
            claim(it.key(), where);
            try {
                s.cycles.emplace_back(it.key(), parse_cycle(it.value(), where));
            } catch (const GeometryError& e) {
                if (e.code() == ErrorCode::SchemaError) throw;
                schema(where, e.what());
            }
        }
    }
    if (doc.contains("triangles")) {
        const json& ts = doc["triangles"];
        if (!ts.is_object()) schema("triangles", "expected an object of named triangles");
        for (auto it = ts.begin(); it != ts.end(); ++it) {
            std::string where = "triangles." + it.key();
            claim(it.key(), where);
            const json& t = it.value();
            if (!t.is_object()) schema(where, "expected an object");
            only_keys(t, {"vertices", "angles", "orientation"}, where);
            const json& v = field(t, "vertices", where);
            const json& a = field(t, "angles", where);
            if (!v.is_array() || v.size() != 3) schema(where + ".vertices", "expected three points");
            if (!a.is_array() || a.size() != 3) schema(where + ".angles", "expected three angles");
            NamedTriangle nt{it.key(), {}, {from_circle(0.0, 1.0), from_circle(0.0, 1.0), from_circle(0.0, 1.0),
                                            from_circle(0.0, 1.0), {}, {}, {}}};
            nt.spec.A = Point::finite(pair(v[0], where + ".vertices[0]"));
            nt.spec.B = Point::finite(pair(v[1], where + ".vertices[1]"));
            nt.spec.C = Point::finite(pair(v[2], where + ".vertices[2]"));
            nt.spec.alpha = number(a[0], where + ".angles[0]");
            nt.spec.beta = number(a[1], where + ".angles[1]");
            nt.spec.gamma = number(a[2], where + ".angles[2]");
            if (t.contains("orientation")) nt.spec.orientation = orientation(t["orientation"], where + ".orientation");
            nt.sides = synthesize(nt.spec);
            for (const char* side : {"a", "b", "c", "s"}) claim(it.key() + "." + side, where);
            s.cycles.emplace_back(it.key() + ".a", nt.sides.a);
            s.cycles.emplace_back(it.key() + ".b", nt.sides.b);
            s.cycles.emplace_back(it.key() + ".c", nt.sides.c);
            s.cycles.emplace_back(it.key() + ".s", nt.sides.s);
            s.triangles.push_back(std::move(nt));
        }
    }
    if (doc.contains("queries")) {
        const json& qs = doc["queries"];
        if (!qs.is_array()) schema("queries", "expected an array");
        for (std::size_t i = 0; i < qs.size(); ++i) {
            if (!qs[i].is_object() || !qs[i].contains("op") || !qs[i]["op"].is_string())
                schema("queries[" + std::to_string(i) + "]", "expected an object with a string 'op'");
            s.queries.push_back(qs[i]);
        }
    }
    if (doc.contains("viewport")) {
        const json& v = doc["viewport"];
        if (!v.is_array() || v.size() != 4) schema("viewport", "expected [xmin, ymin, xmax, ymax]");
        Viewport vp;
        for (int i = 0; i < 4; ++i) vp[i] = number(v[i], "viewport[" + std::to_string(i) + "]");
        s.viewport = vp;
    }
    return s;
}

Scene parse_scene(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, upto = std::min<std::size_t>(e.byte, text.size());
        for (std::size_t i = 0; i + 1 < upto; ++i) line += text[i] == '\n';
        fail(ErrorCode::SchemaError, "line " + std::to_string(line) + ": invalid JSON");
    }
    return scene_from_json(doc);
}

}  // namespace moebius::cli
