// Command-line front end: reads a scene document, runs its queries, writes JSON and SVG.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "moebius/cli.hpp"

using namespace moebius;
using moebius::cli::json;

namespace {

struct Options {
    std::string scene, out, svg;
    std::vector<double> viewport;
    std::optional<double> tol;
    std::uint64_t seed = 1;
    int tries = 20000;
};

int write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) {
        std::cerr << "cannot write " << path << "\n";
        return 2;
    }
    return 0;
}

int emit_error(const Options& o, const std::string& tag, const std::string& message, int code) {
    json doc = {{"error", {{"tag", tag}, {"message", message}}}};
    std::cerr << "error: " << tag << ": " << message << "\n";
    write_text(o.out, doc.dump(2) + "\n");
    return code;
}

std::optional<double> env_tol() {
    const char* s = std::getenv("MOEBIUS_TOL");
    if (!s || !*s) return std::nullopt;
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (*end != '\0' || !(v > 0)) fail(ErrorCode::SchemaError, "MOEBIUS_TOL must be a positive number");
    return v;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::SchemaError, "cannot read scene file '" + path + "'");
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

int run_command(const std::string& command, const Options& o) {
    cli::Context ctx;
    std::optional<cli::Viewport> vp;
    cli::Scene scene;
    try {
        if (auto t = env_tol()) ctx.tol = *t;
        if (o.tol) {
            if (!(*o.tol > 0)) fail(ErrorCode::SchemaError, "--tol must be positive");
            ctx.tol = *o.tol;
        }
        if (!o.viewport.empty()) vp = cli::Viewport{o.viewport[0], o.viewport[1], o.viewport[2], o.viewport[3]};
        if (o.scene.empty()) fail(ErrorCode::SchemaError, "--scene is required");
        scene = cli::parse_scene(read_file(o.scene));
    } catch (const GeometryError& e) {
        return emit_error(o, e.tag(), e.what(), e.code() == ErrorCode::SchemaError ? 2 : 3);
    }

    std::vector<std::string> ops;
    if (command != "run" && command != "render") ops = cli::ops_for_command(command);
    cli::RunOutput r = cli::run_scene(scene, ctx, ops, vp);
    if (r.exit_code != 0) {
        const json& e = r.document["error"];
        std::cerr << "error: " << e["tag"].get<std::string>() << ": " << e["message"].get<std::string>() << "\n";
        write_text(o.out, r.document.dump(2) + "\n");
        return r.exit_code;
    }

    std::string svg;
    try {
        if (command == "render" || !o.svg.empty()) svg = cli::render_svg(r.primitives, r.viewport);
    } catch (const GeometryError& e) {
        return emit_error(o, e.tag(), e.what(), 3);
    }

    if (command == "render") {
        json prims = json::array();
        for (const auto& p : r.primitives) prims.push_back(cli::primitive_json(p));
        if (!o.out.empty()) {
            json doc = r.document;
            doc["primitives"] = prims;
            if (int rc = write_text(o.out, doc.dump(2) + "\n")) return rc;
        }
        return write_text(o.svg.empty() ? "-" : o.svg, svg);
    }
    if (int rc = write_text(o.out, r.document.dump(2) + "\n")) return rc;
    if (!o.svg.empty()) return write_text(o.svg, svg);
    return 0;
}

// Randomized search for a three-circle frame and a pencil whose isogonal image has the
// opposite type, both with a clear margin. Prints a scene that reproduces the witness.
int run_search(const Options& o) {
    std::mt19937_64 gen(o.seed);
    std::uniform_real_distribution<double> pos(-2.0, 2.0), rad(0.3, 2.0), coord(-2.0, 2.0);
    for (int i = 0; i < o.tries; ++i) {
        cplx c[3];
        double r[3];
        for (int k = 0; k < 3; ++k) {
            c[k] = cplx(pos(gen), pos(gen));
            r[k] = rad(gen);
        }
        PencilTrilinear p{coord(gen), coord(gen), coord(gen)};
        try {
            TriangleFrame f = frame(from_circle(c[0], r[0]), from_circle(c[1], r[1]), from_circle(c[2], r[2]));
            if (f.type() == FrameType::Euclidean) continue;
            PencilTypeX before = pencil_type_X(f, p), after = pencil_type_X(f, isogonal_pencil(p));
            bool flip = (before.X > 0.05 * before.scale && after.X < -0.05 * after.scale) ||
                        (before.X < -0.05 * before.scale && after.X > 0.05 * after.scale);
            if (!flip) continue;
            json scene;
            json cycles;
            const char* names[3] = {"a", "b", "c"};
            for (int k = 0; k < 3; ++k)
                cycles[names[k]] = {{"circle", {{"center", {cli::rounded(c[k].real()), cli::rounded(c[k].imag())}},
                                                {"r", cli::rounded(r[k])}}}};
            scene["cycles"] = cycles;
            json trip = {cli::rounded(p.vec()(0)), cli::rounded(p.vec()(1)), cli::rounded(p.vec()(2))};
            scene["queries"] = json::array({
                {{"op", "type-x"}, {"frame", {"a", "b", "c"}}, {"pencil", trip}},
                {{"op", "isogonal"}, {"pencil", trip}},
            });
            return write_text(o.out, scene.dump(2) + "\n");
        } catch (const GeometryError&) {
            continue;
        }
    }
    return emit_error(o, "not-found", "no witness within " + std::to_string(o.tries) + " tries", 3);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cycle-geometry triangle calculator"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--scene", o.scene, "scene document (JSON)");
    app.add_option("--out", o.out, "result document, stdout when omitted");
    app.add_option("--svg", o.svg, "SVG figure");
    app.add_option("--viewport", o.viewport, "xmin ymin xmax ymax")->expected(4);
    app.add_option("--tol", o.tol, "classification tolerance (overrides MOEBIUS_TOL)");
    app.add_option("--seed", o.seed, "seed for search");
    app.add_option("--tries", o.tries, "sample budget for search");

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"classify", "cycle kinds and inner products"},
        {"pencil", "pencil types, distinguished points, cevian ranges"},
        {"split", "splitting factors"},
        {"triangle", "synthesized triangles and frames"},
        {"ceva", "Ceva configurations and pencil types"},
        {"menelaus", "Menelaus configurations and cycle types"},
        {"centers", "incenter, excenters, orthocenter, altitudes, excircles"},
        {"dual", "complement map"},
        {"isogonal", "isogonal conjugates"},
        {"model", "spherical, Euclidean and hyperbolic interpretations"},
        {"render", "SVG figure of the scene and all query overlays"},
        {"run", "all queries"},
        {"search", "randomized witness search for a type-changing isogonal pair"},
    };
    for (const auto& [name, help] : commands) app.add_subcommand(name, help);

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands().front()->get_name();
    if (command == "search") return run_search(o);
    return run_command(command, o);
}
