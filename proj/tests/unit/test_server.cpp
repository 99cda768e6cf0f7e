#include "visgame/harness/scenes.h"
#include "visgame/server/sessions.h"
#include "visgame/splinegon/game.h"

#include <doctest.h>
#include <httplib.h>

#include <atomic>
#include <filesystem>
#include <thread>

using nlohmann::json;
using visgame::server::ApiError;
using visgame::server::SessionStore;

namespace {

/// L-shaped hexagon: the 4x2 bottom bar plus the 2x2 square above its left half.
json l_hexagon() { return {{"vertices", {{0, 0}, {4, 0}, {4, 2}, {2, 2}, {2, 4}, {0, 4}}}}; }

json crescent_json() {
    const auto scene = visgame::harness::crescent();
    json j = visgame::splinegon::splinegon_to_json(visgame::splinegon::Splinegon::unchecked(scene.edges));
    j["d"] = scene.d;
    return j;
}

json move(const json& x, const json& y) { return {{"point", {x, y}}}; }

int status_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const ApiError& e) {
        return e.status();
    }
    return 200;
}

/// Fresh scratch directory removed on destruction.
struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& name) : path(std::filesystem::temp_directory_path() / name) {
        std::filesystem::remove_all(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("polygon session follows the placement protocol through capture") {
    SessionStore store;
    const json fresh = store.create({{"arena", l_hexagon()}, {"cop_vertex", 1}})->state;
    const std::string id = fresh["id"];
    CHECK(fresh["phase"] == "AwaitRobberPlacement");
    CHECK(fresh["cop"] == json::array({"4", "0"}));
    CHECK(fresh["robber"].is_null());
    CHECK(store.get(id)->state == fresh);

    CHECK(status_of([&] { store.move(id, move("5", "1")); }) == 422);

    // Hidden from (4, 0); the cop replies by moving to the reflex corner.
    const json placed = store.move(id, move("1", "3.5"))->state;
    CHECK(placed["phase"] == "AwaitRobberMove");
    CHECK(placed["round"] == 1);
    CHECK(placed["cop"] == json::array({"2", "2"}));
    CHECK(placed["robber"] == json::array({"1", "7/2"}));
    CHECK(placed["active_region"].is_object());
    CHECK(placed["legal_region"]["boundary"].size() >= 3);

    // Through the wall beside the reflex corner.
    CHECK(status_of([&] { store.move(id, move("3.5", "1.5")); }) == 422);
    CHECK(store.get(id)->state == placed);

    const json done = store.move(id, move("0.5", "0.5"))->state;
    CHECK(done["phase"] == "Finished");
    CHECK(done["captured"] == true);
    CHECK(done["round"] == 2);
    CHECK(done["trace"]["rounds"].size() == 2);
    CHECK(status_of([&] { store.move(id, move("0.5", "1")); }) == 409);
    CHECK(store.get(id)->svg.rfind("<svg", 0) == 0);
}

TEST_CASE("session creation errors") {
    SessionStore store;
    CHECK(status_of([&] { store.create({{"arena", {{"vertices", {{0, 0}, {2, 2}, {2, 0}, {0, 2}}}}}}); }) == 400);
    CHECK(status_of([&] { store.create({{"arena", {{"vertices", {{0, 0}, {1, 0}}}}}}); }) == 400);
    CHECK(status_of([&] { store.create({{"arena", {{"nothing", 1}}}}); }) == 400);
    CHECK(status_of([&] { store.create({{"arena", l_hexagon()}, {"cop_vertex", 6}}); }) == 400);
    CHECK(status_of([&] { store.create({{"arena", l_hexagon()}, {"cop_strategy", "greedy"}}); }) == 400);
    try {
        store.create({{"arena", crescent_json()}});
        FAIL("crescent accepted");
    } catch (const ApiError& e) {
        CHECK(e.status() == 422);
        CHECK(std::string(e.what()).find("infinite link diameter") != std::string::npos);
    }
    CHECK(store.size() == 0);
    CHECK(status_of([&] { (void)store.get("nope"); }) == 404);
    CHECK(status_of([&] { store.move("nope", move(0, 0)); }) == 404);
}

TEST_CASE("splinegon session matches the library game for the same robber moves") {
    using namespace visgame::splinegon;
    const auto scene = visgame::harness::bay_scene();
    const SplineArena arena(scene.build());
    BayHoppingRobber robber;
    const SplineTrace reference = run_splinegon_game(arena, robber, arena.region().vertex(0));
    REQUIRE(reference.captured);

    SessionStore store;
    const std::string id = store.create({{"arena", splinegon_to_json(arena.region())}})->state["id"];
    json state = store.move(id, {{"point", vec_to_json(reference.robber_start)}})->state;
    for (const SplineRound& r : reference.rounds)
        if (r.robber) state = store.move(id, {{"point", vec_to_json(*r.robber)}})->state;
    CHECK(state["phase"] == "Finished");
    CHECK(state["captured"] == true);
    CHECK(state["round"] == reference.capture_round);
    json expected = spline_trace_to_json(reference);
    json actual = state["trace"];
    expected.erase("robber_strategy");
    actual.erase("robber_strategy");
    CHECK(actual == expected);
}

TEST_CASE("sessions are restored from their logs") {
    const TempDir dir("visgame_sessions_test");
    std::string poly_id, spline_id;
    json poly_state, spline_state, fresh_state;
    {
        SessionStore store(dir.path);
        poly_id = store.create({{"arena", l_hexagon()}, {"cop_vertex", 1}})->state["id"];
        store.move(poly_id, move("1", "3.5"));
        CHECK(status_of([&] { store.move(poly_id, move("3.5", "1.5")); }) == 422);
        poly_state = store.get(poly_id)->state;

        const visgame::splinegon::SplineArena arena(visgame::harness::curved_square().build());
        spline_id = store.create({{"arena", visgame::splinegon::splinegon_to_json(arena.region())}})->state["id"];
        const auto samples = visgame::splinegon::robber_candidates(arena.region());
        json last = store.get(spline_id)->state;
        // Place the robber, then try the samples in turn until the game ends;
        // rejected moves are not logged.
        int rejected = 0;
        for (std::size_t i = samples.size() / 2; i < samples.size() && last["phase"] != "Finished"; ++i) {
            const json point = {{"point", visgame::splinegon::vec_to_json(samples[i])}};
            if (status_of([&] { last = store.move(spline_id, point)->state; }) != 200) ++rejected;
        }
        CHECK(last["round"] >= 1);
        spline_state = store.get(spline_id)->state;
        fresh_state = store.create({{"arena", l_hexagon()}})->state;
    }
    SessionStore reloaded(dir.path);
    CHECK(reloaded.load_errors().empty());
    CHECK(reloaded.size() == 3);
    CHECK(reloaded.get(poly_id)->state == poly_state);
    CHECK(reloaded.get(spline_id)->state == spline_state);
    CHECK(reloaded.get(fresh_state["id"])->state == fresh_state);
    CHECK(reloaded.move(poly_id, move("0.5", "0.5"))->state["phase"] == "Finished");
}

TEST_CASE("reads during moves see whole states") {
    SessionStore store;
    const std::string id = store.create({{"arena", l_hexagon()}, {"cop_vertex", 1}})->state["id"];
    std::atomic<bool> stop{false};
    std::atomic<int> bad{0}, reads{0};
    std::thread reader([&] {
        while (!stop) {
            const json s = store.get(id)->state;
            const std::string phase = s["phase"];
            const bool whole = (phase == "AwaitRobberPlacement" && s["round"] == 0 && s["robber"].is_null()) ||
                               (phase == "AwaitRobberMove" && s["round"] == 1) ||
                               (phase == "Finished" && s["round"] == 2 && s["captured"] == true);
            if (!whole) ++bad;
            ++reads;
        }
    });
    // Four writers submit the same point: the first places the robber, the
    // second stays put in view of the cop and is caught, the rest find the
    // game over.
    std::vector<std::thread> writers;
    std::atomic<int> accepted{0};
    for (int w = 0; w < 4; ++w)
        writers.emplace_back([&] {
            if (status_of([&] { store.move(id, move("1", "3.5")); }) == 200) ++accepted;
        });
    for (auto& t : writers) t.join();
    stop = true;
    reader.join();
    CHECK(bad == 0);
    CHECK(reads > 0);
    CHECK(accepted == 2);
    CHECK(store.get(id)->state["phase"] == "Finished");
    CHECK(store.get(id)->state["round"] == 2);
}

TEST_CASE("HTTP endpoints") {
    SessionStore store;
    httplib::Server server;
    visgame::server::register_routes(server, store);
    const int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread runner([&] { server.listen_after_bind(); });
    server.wait_until_ready();
    httplib::Client client("127.0.0.1", port);

    auto created = client.Post("/sessions", json{{"arena", l_hexagon()}, {"cop_vertex", 1}}.dump(), "application/json");
    REQUIRE(created);
    CHECK(created->status == 201);
    const std::string id = json::parse(created->body)["id"];

    auto bad = client.Post("/sessions", json{{"arena", {{"vertices", {{0, 0}, {2, 2}, {2, 0}, {0, 2}}}}}}.dump(),
                           "application/json");
    CHECK(bad->status == 400);
    auto crescent = client.Post("/sessions", json{{"arena", crescent_json()}}.dump(), "application/json");
    CHECK(crescent->status == 422);
    CHECK(json::parse(crescent->body)["error"].get<std::string>().find("infinite link diameter") != std::string::npos);
    CHECK(client.Post("/sessions", "{not json", "application/json")->status == 400);

    CHECK(client.Get("/sessions/" + id)->status == 200);
    CHECK(json::parse(client.Get("/sessions/" + id)->body)["phase"] == "AwaitRobberPlacement");
    CHECK(client.Get("/sessions/missing")->status == 404);
    CHECK(client.Post("/sessions/missing/moves", move("1", "1").dump(), "application/json")->status == 404);

    const std::string moves = "/sessions/" + id + "/moves";
    CHECK(client.Post(moves, move("1", "3.5").dump(), "application/json")->status == 200);
    CHECK(client.Post(moves, move("3.5", "1.5").dump(), "application/json")->status == 422);
    auto last = client.Post(moves, move("0.5", "0.5").dump(), "application/json");
    CHECK(last->status == 200);
    CHECK(json::parse(last->body)["captured"] == true);
    CHECK(client.Post(moves, move("0.5", "1").dump(), "application/json")->status == 409);

    auto svg = client.Get("/sessions/" + id + "/trace.svg");
    CHECK(svg->status == 200);
    CHECK(svg->get_header_value("Content-Type") == "image/svg+xml");
    CHECK(svg->body.rfind("<svg", 0) == 0);

    server.stop();
    runner.join();
}
