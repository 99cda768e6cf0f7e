#include "visgame/server/sessions.h"

#include "visgame/geom/json_io.h"
#include "visgame/geom/visibility.h"
#include "visgame/pursuit/game.h"
#include "visgame/render/svg.h"
#include "visgame/splinegon/game.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

namespace visgame::server {

using nlohmann::json;

std::string to_string(Phase phase) {
    switch (phase) {
    case Phase::AwaitRobberPlacement: return "AwaitRobberPlacement";
    case Phase::AwaitRobberMove: return "AwaitRobberMove";
    case Phase::Finished: return "Finished";
    }
    return "?";
}

namespace {

/// Robber that plays back recorded inputs and stands still once they run
/// out; the standing move is dropped from the trace.
class PolygonScript : public pursuit::RobberStrategy {
public:
    explicit PolygonScript(const std::vector<geom::Point>& inputs) : inputs_(inputs) {}
    [[nodiscard]] std::string name() const override { return "human"; }
    geom::Point place(const pursuit::GameState&) override { return inputs_.front(); }
    geom::Point move(const pursuit::GameState& state) override {
        const auto i = static_cast<std::size_t>(state.round);
        return i < inputs_.size() ? inputs_[i] : state.robber;
    }

private:
    const std::vector<geom::Point>& inputs_;
};

class SplineScript : public splinegon::SplineRobber {
public:
    explicit SplineScript(const std::vector<splinegon::Vec2>& inputs) : inputs_(inputs) {}
    [[nodiscard]] std::string name() const override { return "human"; }
    splinegon::Vec2 place(const splinegon::SplineView&) override { return inputs_.front(); }
    splinegon::Vec2 move(const splinegon::SplineView& view) override {
        const auto i = static_cast<std::size_t>(view.round);
        return i < inputs_.size() ? inputs_[i] : view.robber;
    }

private:
    const std::vector<splinegon::Vec2>& inputs_;
};

std::size_t cop_vertex_from(const json& request, std::size_t vertex_count) {
    if (!request.contains("cop_vertex")) return 0;
    const json& v = request["cop_vertex"];
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<std::size_t>() >= vertex_count)
        throw ApiError(400, "cop_vertex must be a vertex index");
    return v.get<std::size_t>();
}

void check_strategy(const json& request, const std::string& expected) {
    if (request.contains("cop_strategy") && request["cop_strategy"] != expected)
        throw ApiError(400, "unknown cop strategy for this arena; expected \"" + expected + "\"");
}

json point_field(const json& request) {
    if (!request.is_object() || !request.contains("point")) throw ApiError(400, "body needs a \"point\": [x, y]");
    return request["point"];
}

}  // namespace

/// State shared by both arena kinds. A game is rebuilt from its inputs.
struct Session::Game {
    virtual ~Game() = default;
    [[nodiscard]] virtual Phase phase() const = 0;
    /// Validates the point, replays with it appended and returns the
    /// normalized point; commit() makes the replay current.
    virtual json prepare(const json& point) = 0;
    virtual void commit() = 0;
    [[nodiscard]] virtual json state() const = 0;
    [[nodiscard]] virtual std::string svg() const = 0;
};

struct Session::PolygonGame : Session::Game {
    std::unique_ptr<pursuit::PathIndex> index;
    std::size_t cop_vertex = 0;
    int cap = 0;
    std::vector<geom::Point> inputs;
    pursuit::GameTrace trace;
    Phase current = Phase::AwaitRobberPlacement;
    std::vector<geom::Point> next_inputs;
    pursuit::GameTrace next_trace;
    Phase next_phase = Phase::AwaitRobberPlacement;

    PolygonGame(geom::Polygon poly, std::size_t cop)
        : index(std::make_unique<pursuit::PathIndex>(std::move(poly))), cop_vertex(cop),
          cap(4 * static_cast<int>(index->polygon().size())) {}

    [[nodiscard]] const geom::Polygon& poly() const { return index->polygon(); }
    [[nodiscard]] Phase phase() const override { return current; }

    json prepare(const json& point) override {
        if (current == Phase::Finished) throw ApiError(409, "the game is over");
        geom::Point p;
        try {
            p = geom::point_from_json(point);
        } catch (const std::exception& e) {
            throw ApiError(400, std::string("malformed point: ") + e.what());
        }
        if (current == Phase::AwaitRobberPlacement) {
            if (geom::point_location(p, poly()) == geom::Location::Exterior)
                throw ApiError(422, "placement outside the arena");
        } else if (p != inputs.back() && !geom::sees(inputs.back(), p, poly())) {
            throw ApiError(422, "move not visible from the robber's position");
        }
        next_inputs = inputs;
        next_inputs.push_back(p);
        const int done = static_cast<int>(next_inputs.size()) - 1;
        pursuit::ShortestPathCop cop(cop_vertex);
        PolygonScript robber(next_inputs);
        next_trace = pursuit::run_polygon_game(*index, cop, robber, std::min(done + 1, cap));
        next_trace.max_rounds = cap;
        const bool pending = !next_trace.captured && done < cap;
        if (pending) next_trace.rounds.back().robber.reset();
        next_phase = pending ? Phase::AwaitRobberMove : Phase::Finished;
        return geom::point_to_json(p);
    }

    void commit() override {
        inputs = std::move(next_inputs);
        trace = std::move(next_trace);
        current = next_phase;
    }

    [[nodiscard]] json state() const override {
        json s = {{"kind", "polygon"},
                  {"arena", geom::polygon_to_json(poly())},
                  {"cop_strategy", "shortest-path"},
                  {"round", static_cast<int>(trace.rounds.size())},
                  {"max_rounds", cap},
                  {"captured", trace.captured}};
        const geom::Point cop = trace.rounds.empty() ? poly()[cop_vertex] : trace.rounds.back().cop;
        s["cop"] = geom::point_to_json(cop);
        s["robber"] = inputs.empty() ? json(nullptr) : geom::point_to_json(inputs.back());
        s["active_region"] = nullptr;
        if (inputs.empty()) return s;
        const json t = pursuit::trace_to_json(trace);
        if (!t["rounds"].empty() && t["rounds"].back().contains("active_region"))
            s["active_region"] = t["rounds"].back()["active_region"];
        if (current == Phase::AwaitRobberMove) {
            const geom::VisRegion vis = geom::visibility_polygon(inputs.back(), poly());
            json boundary = json::array(), spurs = json::array();
            for (const geom::Point& p : vis.boundary) boundary.push_back(geom::point_to_json(p));
            for (const geom::Segment& sp : vis.spurs)
                spurs.push_back({geom::point_to_json(sp.a), geom::point_to_json(sp.b)});
            s["legal_region"] = {{"boundary", boundary}, {"spurs", spurs}};
        }
        s["trace"] = t;
        return s;
    }

    [[nodiscard]] std::string svg() const override {
        return inputs.empty() ? render::polygon_svg(poly()) : render::polygon_trace_svg(trace);
    }
};

struct Session::SplineGame : Session::Game {
    std::unique_ptr<splinegon::SplineArena> arena;
    std::size_t cop_vertex = 0;
    int cap = 0;
    std::vector<splinegon::Vec2> inputs;
    splinegon::SplineTrace trace;
    Phase current = Phase::AwaitRobberPlacement;
    std::vector<splinegon::Vec2> next_inputs;
    splinegon::SplineTrace next_trace;
    Phase next_phase = Phase::AwaitRobberPlacement;

    SplineGame(splinegon::Splinegon region, std::size_t cop)
        : arena(std::make_unique<splinegon::SplineArena>(std::move(region))), cop_vertex(cop),
          cap(splinegon::splinegon_round_cap(arena->region())) {}

    [[nodiscard]] const splinegon::Splinegon& region() const { return arena->region(); }
    [[nodiscard]] Phase phase() const override { return current; }

    json prepare(const json& point) override {
        if (current == Phase::Finished) throw ApiError(409, "the game is over");
        splinegon::Vec2 p;
        try {
            p = splinegon::vec_from_json(point);
        } catch (const std::exception& e) {
            throw ApiError(400, std::string("malformed point: ") + e.what());
        }
        if (current == Phase::AwaitRobberPlacement) {
            if (!region().contains(p)) throw ApiError(422, "placement outside the arena");
        } else if (!splinegon::near(p, inputs.back(), 0) && !region().sees(inputs.back(), p)) {
            throw ApiError(422, "move not visible from the robber's position");
        }
        next_inputs = inputs;
        next_inputs.push_back(p);
        const int done = static_cast<int>(next_inputs.size()) - 1;
        SplineScript robber(next_inputs);
        next_trace = splinegon::run_splinegon_game(*arena, robber, region().vertex(cop_vertex),
                                                   std::min(done + 1, cap));
        next_trace.max_rounds = cap;
        const bool pending = !next_trace.captured && done < cap;
        if (pending) {
            next_trace.rounds.back().robber.reset();
            auto& d = next_trace.diagnostics;
            d.erase(std::remove_if(d.begin(), d.end(),
                                   [](const std::string& m) { return m.rfind("no capture within", 0) == 0; }),
                    d.end());
        }
        next_phase = pending ? Phase::AwaitRobberMove : Phase::Finished;
        return splinegon::vec_to_json(p);
    }

    void commit() override {
        inputs = std::move(next_inputs);
        trace = std::move(next_trace);
        current = next_phase;
    }

    [[nodiscard]] json state() const override {
        json s = {{"kind", "splinegon"},
                  {"arena", splinegon::splinegon_to_json(region())},
                  {"cop_strategy", "splinegon"},
                  {"round", static_cast<int>(trace.rounds.size())},
                  {"max_rounds", cap},
                  {"captured", trace.captured}};
        const splinegon::Vec2 cop = trace.rounds.empty() ? region().vertex(cop_vertex) : trace.rounds.back().move.to;
        s["cop"] = splinegon::vec_to_json(cop);
        s["robber"] = inputs.empty() ? json(nullptr) : splinegon::vec_to_json(inputs.back());
        s["active_region"] = nullptr;
        if (inputs.empty()) return s;
        const json t = splinegon::spline_trace_to_json(trace);
        if (!t["rounds"].empty()) {
            const json& last = t["rounds"].back();
            if (last.contains("cut"))
                s["active_region"] = {{"cut", last["cut"]},
                                      {"stretches", last["stretches"]},
                                      {"area", last["active_area"]},
                                      {"region", splinegon::splinegon_to_json(trace.rounds.back().active->region)}};
        }
        s["trace"] = t;
        return s;
    }

    [[nodiscard]] std::string svg() const override {
        return inputs.empty() ? render::splinegon_svg(region()) : render::splinegon_trace_svg(trace);
    }
};

Session::Session(std::string id, const json& create_request) : id_(std::move(id)) {
    if (!create_request.is_object()) throw ApiError(400, "body must be a JSON object");
    const json& arena = create_request.contains("arena") ? create_request["arena"] : create_request;
    if (!arena.is_object()) throw ApiError(400, "arena must be a JSON object");
    if (arena.contains("edges")) {
        check_strategy(create_request, "splinegon");
        splinegon::Splinegon region = splinegon::Splinegon::unchecked({});
        try {
            region = splinegon::splinegon_from_json(arena);
        } catch (const splinegon::InvalidSplinegon& e) {
            const bool infinite = e.reason() == splinegon::InvalidSplinegon::Reason::InfiniteLinkDiameter;
            throw ApiError(infinite ? 422 : 400, e.what());
        } catch (const std::exception& e) {
            throw ApiError(400, std::string("invalid splinegon: ") + e.what());
        }
        const std::size_t cop = cop_vertex_from(create_request, region.size());
        create_record_ = {{"arena", splinegon::splinegon_to_json(region)}, {"cop_vertex", cop}};
        game_ = std::make_unique<SplineGame>(std::move(region), cop);
    } else if (arena.contains("vertices")) {
        check_strategy(create_request, "shortest-path");
        geom::Polygon poly = geom::Polygon::unchecked({});
        try {
            poly = geom::polygon_from_json(arena);
        } catch (const std::exception& e) {
            throw ApiError(400, std::string("invalid polygon: ") + e.what());
        }
        const std::size_t cop = cop_vertex_from(create_request, poly.size());
        create_record_ = {{"arena", geom::polygon_to_json(poly)}, {"cop_vertex", cop}};
        game_ = std::make_unique<PolygonGame>(std::move(poly), cop);
    } else {
        throw ApiError(400, "arena needs \"vertices\" (polygon) or \"edges\" (splinegon)");
    }
    publish();
}

Session::~Session() = default;

std::shared_ptr<const Snapshot> Session::submit(const json& point, const std::function<void(const json&)>& persist) {
    const std::lock_guard<std::mutex> lock(move_mutex_);
    json normalized;
    try {
        normalized = game_->prepare(point);
    } catch (const ApiError&) {
        throw;
    } catch (const std::exception& e) {
        throw ApiError(500, std::string("cop strategy failed: ") + e.what());
    }
    if (persist) persist(normalized);
    game_->commit();
    publish();
    return snapshot();
}

void Session::publish() {
    json state = game_->state();
    state["id"] = id_;
    state["phase"] = to_string(game_->phase());
    auto next = std::make_shared<const Snapshot>(Snapshot{std::move(state), game_->svg()});
    const std::lock_guard<std::mutex> lock(snapshot_mutex_);
    snapshot_ = std::move(next);
}

std::shared_ptr<const Snapshot> Session::snapshot() const {
    const std::lock_guard<std::mutex> lock(snapshot_mutex_);
    return snapshot_;
}

SessionStore::SessionStore(std::filesystem::path dir) : dir_(std::move(dir)) {
    if (dir_.empty()) return;
    std::filesystem::create_directories(dir_);
    std::vector<std::filesystem::path> logs;
    for (const auto& entry : std::filesystem::directory_iterator(dir_))
        if (entry.is_regular_file() && entry.path().extension() == ".jsonl") logs.push_back(entry.path());
    std::sort(logs.begin(), logs.end());
    for (const auto& path : logs) {
        const std::string id = path.stem().string();
        try {
            std::ifstream in(path);
            std::string line;
            std::shared_ptr<Session> session;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                const json record = json::parse(line);
                if (!session)
                    session = std::make_shared<Session>(id, record.at("create"));
                else
                    session->submit(record.at("move"));
            }
            if (!session) throw std::runtime_error("empty log");
            sessions_.emplace(id, std::move(session));
        } catch (const std::exception& e) {
            load_errors_.push_back(path.string() + ": " + e.what());
        }
    }
}

std::string SessionStore::fresh_id() {
    static thread_local std::mt19937_64 rng{std::random_device{}()};
    for (;;) {
        std::ostringstream s;
        s << std::hex << rng();
        if (!sessions_.count(s.str()) && (dir_.empty() || !std::filesystem::exists(dir_ / (s.str() + ".jsonl"))))
            return s.str();
    }
}

void SessionStore::append(const std::string& id, const json& line) const {
    if (dir_.empty()) return;
    std::ofstream out(dir_ / (id + ".jsonl"), std::ios::app);
    out << line.dump() << '\n';
    out.flush();
    if (!out) throw ApiError(500, "could not write the session log");
}

std::shared_ptr<const Snapshot> SessionStore::create(const json& request) {
    std::string id;
    {
        const std::unique_lock<std::shared_mutex> lock(map_mutex_);
        id = fresh_id();
        sessions_.emplace(id, nullptr);  // reserve the id
    }
    try {
        auto session = std::make_shared<Session>(id, request);
        append(id, {{"create", session->create_record()}});
        auto snap = session->snapshot();
        const std::unique_lock<std::shared_mutex> lock(map_mutex_);
        sessions_[id] = std::move(session);
        return snap;
    } catch (...) {
        const std::unique_lock<std::shared_mutex> lock(map_mutex_);
        sessions_.erase(id);
        throw;
    }
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) const {
    const std::shared_lock<std::shared_mutex> lock(map_mutex_);
    const auto it = sessions_.find(id);
    if (it == sessions_.end() || !it->second) throw ApiError(404, "unknown session " + id);
    return it->second;
}

std::shared_ptr<const Snapshot> SessionStore::move(const std::string& id, const json& request) {
    const std::shared_ptr<Session> session = find(id);
    return session->submit(point_field(request), [&](const json& point) { append(id, {{"move", point}}); });
}

std::shared_ptr<const Snapshot> SessionStore::get(const std::string& id) const { return find(id)->snapshot(); }

std::size_t SessionStore::size() const {
    const std::shared_lock<std::shared_mutex> lock(map_mutex_);
    return static_cast<std::size_t>(
        std::count_if(sessions_.begin(), sessions_.end(), [](const auto& kv) { return kv.second != nullptr; }));
}

}  // namespace visgame::server
