#include "visgame/geom/json_io.h"
#include "visgame/geom/visibility.h"
#include "visgame/graphgame/graph.h"
#include "visgame/harness/experiments.h"
#include "visgame/harness/generators.h"
#include "visgame/harness/scenes.h"
#include "visgame/pockets/pockets.h"
#include "visgame/pursuit/game.h"
#include "visgame/render/svg.h"
#include "visgame/splinegon/game.h"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using namespace visgame;
using nlohmann::json;

/// Exit code for a run that contradicts a claim the engine certifies.
constexpr int violation_exit = 2;

struct Options {
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "json";
    std::string in;
};

json read_json(const std::string& path) {
    if (path.empty() || path == "-") return json::parse(std::cin);
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return json::parse(f);
}

void write(const Options& o, const std::string& text) {
    if (o.out.empty() || o.out == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << text;
}

void write_json(const Options& o, const json& j) { write(o, j.dump(2) + "\n"); }

bool is_splinegon(const json& j) { return j.is_object() && j.contains("edges"); }

harness::GeneratedPolygon load_polygon(const json& j) {
    harness::GeneratedPolygon g{j.value("family", std::string("input")), geom::polygon_from_json(j), {}};
    if (j.contains("anchors"))
        for (const json& a : j["anchors"]) g.anchors.push_back(geom::point_from_json(a));
    return g;
}

json generated_to_json(const harness::GeneratedPolygon& g) {
    json j = geom::polygon_to_json(g.polygon);
    j["family"] = g.family;
    if (!g.anchors.empty()) {
        j["anchors"] = json::array();
        for (const geom::Point& a : g.anchors) j["anchors"].push_back(geom::point_to_json(a));
    }
    return j;
}

int gen(const Options& o, const std::string& family, int k, int n) {
    static const std::map<std::string, std::function<harness::SplinegonScene()>> scenes = {
        {"stadium", harness::stadium},
        {"curved-triangle", harness::curved_triangle},
        {"bay", harness::bay_scene},
        {"curved-square", harness::curved_square},
        {"crescent", harness::crescent},
        {"random-arcgon", [&] { return harness::random_arcgon(static_cast<std::size_t>(n), o.seed); }},
        {"random-staircase", [&] { return harness::random_staircase(static_cast<std::size_t>(k), o.seed); }}};
    if (const auto it = scenes.find(family); it != scenes.end()) {
        const harness::SplinegonScene scene = it->second();
        // The crescent is emitted unvalidated so that consumers can test rejection.
        const splinegon::Splinegon region =
            family == "crescent" ? splinegon::Splinegon::unchecked(scene.edges) : scene.build();
        json j = splinegon::splinegon_to_json(region);
        j["d"] = scene.d;
        j["family"] = scene.family;
        write(o, o.format == "svg" ? render::splinegon_svg(region) : j.dump(2) + "\n");
        return 0;
    }
    const harness::GeneratedPolygon g = [&] {
        if (family == "zigzag") return harness::zigzag(k);
        if (family == "corridor") return harness::corridor(k);
        if (family == "random") return harness::random_simple(n, o.seed);
        throw CLI::ValidationError("--family", "unknown family " + family);
    }();
    write(o, o.format == "svg" ? render::polygon_svg(g.polygon) : generated_to_json(g).dump(2) + "\n");
    return 0;
}

int visgraph(const Options& o) {
    const geom::Polygon poly = geom::polygon_from_json(read_json(o.in));
    write_json(o, graphgame::graph_to_json(pockets::to_graph(geom::visibility_graph(poly))));
    return 0;
}

int dismantle(const Options& o) {
    const geom::Polygon poly = geom::polygon_from_json(read_json(o.in));
    const graphgame::Graph g = pockets::to_graph(geom::visibility_graph(poly));
    json out = {{"graph", graphgame::graph_to_json(g)}};
    int code = 0;
    const auto cert = graphgame::two_dismantle(g);
    if (cert && graphgame::check_two_dismantle(g, *cert)) {
        out["two_dismantle"] = graphgame::certificate_to_json(*cert);
    } else {
        out["two_dismantle"] = nullptr;
        out["diagnostics"].push_back("visibility graph is not 2-dismantlable");
        code = violation_exit;
    }
    try {
        const pockets::GeometricDismantling geo = pockets::geometric_dismantling(poly);
        json steps = json::array();
        for (const pockets::DismantlingStep& s : geo.ear_steps)
            steps.push_back({{"removed", s.removed}, {"dominator", s.dominator}});
        out["ear_steps"] = steps;
        out["certificate"] = graphgame::certificate_to_json(geo.certificate);
        if (!graphgame::check_dismantle(g, geo.certificate)) {
            out["diagnostics"].push_back("ear-removal certificate rejected by the checker");
            code = violation_exit;
        }
    } catch (const pockets::TheoremViolation& e) {
        out["diagnostics"].push_back(e.what());
        code = violation_exit;
    }
    write_json(o, out);
    return code;
}

json pocket_to_json(const pockets::Pocket& p) {
    return {{"u", p.u}, {"v", p.v}, {"t", geom::point_to_json(p.t)},
            {"region", geom::polygon_to_json(p.region)["vertices"]}};
}

int pockets_cmd(const Options& o) {
    const geom::Polygon poly = geom::polygon_from_json(read_json(o.in));
    const std::vector<pockets::Pocket> maximal = pockets::maximal_pockets(poly);
    if (o.format == "svg") {
        write(o, render::pockets_svg(poly, maximal));
        return 0;
    }
    json out = {{"pockets", json::array()}, {"maximal", json::array()}, {"visibility_increasing_edges", json::array()}};
    for (const pockets::Pocket& p : pockets::all_pockets(poly)) out["pockets"].push_back(pocket_to_json(p));
    for (const pockets::Pocket& p : maximal) out["maximal"].push_back(pocket_to_json(p));
    for (const pockets::Edge& e : pockets::visibility_increasing_edges(poly))
        out["visibility_increasing_edges"].push_back({e.u, e.v});
    write_json(o, out);
    return 0;
}

int play(const Options& o, const std::string& robber_name, std::size_t cop_vertex, int max_rounds) {
    const harness::GeneratedPolygon g = load_polygon(read_json(o.in));
    const pursuit::PathIndex index(g.polygon);
    if (cop_vertex >= g.polygon.size()) throw CLI::ValidationError("--cop-vertex", "out of range");
    pursuit::ShortestPathCop cop(cop_vertex);
    std::unique_ptr<pursuit::RobberStrategy> robber;
    if (robber_name == "corridor")
        robber = std::make_unique<pursuit::CorridorRobber>(g.anchors.empty() ? g.polygon.vertices() : g.anchors);
    else if (robber_name == "optimal")
        robber = std::make_unique<pursuit::DiscreteOptimalRobber>(index, pursuit::default_samples(g.polygon));
    else if (robber_name == "random")
        robber = std::make_unique<pursuit::RandomRobber>(o.seed);
    else
        throw CLI::ValidationError("--robber", "unknown robber " + robber_name);
    const pursuit::GameTrace t = pursuit::run_polygon_game(index, cop, *robber, max_rounds, o.seed);
    json j = pursuit::trace_to_json(t);
    const int n = static_cast<int>(g.polygon.size());
    json diagnostics = json::array();
    if (!t.captured || t.capture_round > n) diagnostics.push_back("no capture within n rounds");
    if (t.case_1b_count > 0) diagnostics.push_back("case 1b transition occurred");
    if (!t.regions_shrink) diagnostics.push_back("active regions did not shrink");
    if (!t.robber_confined) diagnostics.push_back("robber left its active region");
    j["diagnostics"] = diagnostics;
    write(o, o.format == "svg" ? render::polygon_trace_svg(t) : j.dump(2) + "\n");
    for (const json& d : diagnostics) std::cerr << "violation: " << d.get<std::string>() << '\n';
    return diagnostics.empty() ? 0 : violation_exit;
}

int splinegon_play(const Options& o, const std::string& robber_name, std::size_t cop_vertex, int max_rounds) {
    const json in = read_json(o.in);
    const splinegon::SplineArena arena(splinegon::splinegon_from_json(in));
    if (cop_vertex >= arena.region().size()) throw CLI::ValidationError("--cop-vertex", "out of range");
    std::unique_ptr<splinegon::SplineRobber> robber;
    if (robber_name == "boundary") robber = std::make_unique<splinegon::BoundaryCyclingRobber>();
    else if (robber_name == "bay") robber = std::make_unique<splinegon::BayHoppingRobber>();
    else if (robber_name == "random") robber = std::make_unique<splinegon::RandomVisibleRobber>(o.seed);
    else throw CLI::ValidationError("--robber", "unknown robber " + robber_name);
    const splinegon::SplineTrace t = splinegon::run_splinegon_game(
        arena, *robber, arena.region().vertex(cop_vertex), max_rounds, o.seed, in.value("family", std::string()));
    write(o, o.format == "svg" ? render::splinegon_trace_svg(t) : splinegon::spline_trace_to_json(t).dump(2) + "\n");
    const bool in_time = t.captured && t.capture_round <= splinegon::splinegon_round_cap(arena.region());
    for (const std::string& d : t.diagnostics) std::cerr << "violation: " << d << '\n';
    return t.clean() && in_time ? 0 : violation_exit;
}

json check_to_json(const harness::CheckResult& r) {
    return {{"name", r.name},       {"pass", r.pass},       {"cases", r.cases}, {"violations", r.violations},
            {"detail", r.detail},   {"seconds", r.seconds}, {"rows", r.rows}};
}

int experiment(const Options& o, const std::string& name, std::size_t count) {
    const std::map<std::string, std::function<harness::CheckResult()>> checks = {
        {"dismantlability",
         [&] { return harness::check_visibility_dismantlability(harness::random_corpus(count, o.seed)); }},
        {"capture-time", [&] { return harness::check_capture_time_bound(harness::random_corpus(count, o.seed)); }},
        {"two-pockets", [&] { return harness::check_two_pockets(harness::random_corpus(count, o.seed)); }},
        {"polygon-game", [&] { return harness::check_polygon_game(harness::random_corpus(count, o.seed)); }},
        {"lower-bounds", [] { return harness::check_lower_bounds(); }},
        {"dismantle-equivalence", [] { return harness::check_dismantle_equivalence(); }},
        {"splinegon", [&] { return harness::check_splinegon_strategy(count); }},
        {"determinism", [&] { return harness::check_determinism(o.seed); }}};
    std::vector<std::string> names;
    if (name == "all")
        for (const auto& kv : checks) names.push_back(kv.first);
    else if (checks.count(name))
        names.push_back(name);
    else
        throw CLI::ValidationError("--name", "unknown experiment " + name);
    json out = json::array();
    bool pass = true;
    for (const std::string& n : names) {
        const harness::CheckResult r = checks.at(n)();
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        pass = pass && r.pass;
        out.push_back(check_to_json(r));
    }
    write_json(o, names.size() == 1 ? out[0] : out);
    return pass ? 0 : violation_exit;
}

int render_svg(const Options& o, bool with_pockets) {
    const json in = read_json(o.in);
    if (is_splinegon(in)) {
        // Drawn without validation so that rejected regions can be inspected.
        std::vector<splinegon::ArcEdge> edges;
        for (const json& e : in["edges"]) edges.push_back(splinegon::edge_from_json(e));
        write(o, render::splinegon_svg(splinegon::Splinegon::unchecked(std::move(edges))));
        return 0;
    }
    const geom::Polygon poly = geom::polygon_from_json(in);
    write(o, with_pockets ? render::pockets_svg(poly, pockets::maximal_pockets(poly)) : render::polygon_svg(poly));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Visibility pursuit-evasion engine"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
    app.add_option("--out", o.out, "Output file (default stdout)");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "svg"}))->capture_default_str();

    std::string family = "random";
    int k = 3, n = 12;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a polygon or splinegon");
    gen_cmd->add_option("--family", family,
                        "zigzag, corridor, random, stadium, curved-triangle, bay, curved-square, crescent, "
                        "random-arcgon, random-staircase")
        ->capture_default_str();
    gen_cmd->add_option("--k", k, "Size parameter of zigzag, corridor and staircase")->capture_default_str();
    gen_cmd->add_option("--n", n, "Vertex count of random and random-arcgon")->capture_default_str();

    auto add_in = [&o](CLI::App* cmd) { cmd->add_option("--in", o.in, "Input JSON file (default stdin)"); };
    auto* visgraph_cmd = app.add_subcommand("visgraph", "Visibility graph of a polygon");
    auto* dismantle_cmd = app.add_subcommand("dismantle", "Dismantling certificates of a polygon's visibility graph");
    auto* pockets_cmd_app = app.add_subcommand("pockets", "Pockets and visibility-increasing edges");
    auto* play_cmd = app.add_subcommand("play", "Shortest-path cop against a robber in a polygon");
    auto* spline_cmd = app.add_subcommand("splinegon-play", "Splinegon cop against a robber");
    auto* render_cmd = app.add_subcommand("render-svg", "Draw a polygon or splinegon");
    for (CLI::App* c : {visgraph_cmd, dismantle_cmd, pockets_cmd_app, play_cmd, spline_cmd, render_cmd}) add_in(c);

    std::string robber = "random";
    std::size_t cop_vertex = 0;
    int max_rounds = 0;
    for (CLI::App* c : {play_cmd, spline_cmd}) {
        c->add_option("--cop-vertex", cop_vertex, "Cop start vertex")->capture_default_str();
        c->add_option("--max-rounds", max_rounds, "Round cap; 0 uses the default");
    }
    play_cmd->add_option("--robber", robber, "corridor, optimal or random")->capture_default_str();
    spline_cmd->add_option("--robber", robber, "boundary, bay or random")->capture_default_str();

    bool with_pockets = false;
    render_cmd->add_flag("--pockets", with_pockets, "Shade the maximal pockets");

    std::string name = "all";
    std::size_t count = 50;
    auto* exp_cmd = app.add_subcommand("experiment", "Run a corpus-wide check");
    exp_cmd->add_option("--name", name,
                        "dismantlability, capture-time, two-pockets, polygon-game, lower-bounds, "
                        "dismantle-equivalence, splinegon, determinism or all")
        ->capture_default_str();
    exp_cmd->add_option("--count", count, "Corpus size")->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    try {
        if (*gen_cmd) return gen(o, family, k, n);
        if (*visgraph_cmd) return visgraph(o);
        if (*dismantle_cmd) return dismantle(o);
        if (*pockets_cmd_app) return pockets_cmd(o);
        if (*play_cmd) return play(o, robber, cop_vertex, max_rounds);
        if (*spline_cmd) return splinegon_play(o, robber, cop_vertex, max_rounds);
        if (*exp_cmd) return experiment(o, name, count);
        if (*render_cmd) return render_svg(o, with_pockets);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
