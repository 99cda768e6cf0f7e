#pragma once

#include <json.hpp>

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace httplib {
class Server;
}

namespace visgame::server {

/// Request failure carrying the HTTP status to answer with.
class ApiError : public std::runtime_error {
public:
    ApiError(int status, const std::string& message) : std::runtime_error(message), status_(status) {}
    [[nodiscard]] int status() const { return status_; }

private:
    int status_;
};

enum class Phase { AwaitRobberPlacement, AwaitRobberMove, Finished };
std::string to_string(Phase phase);

/// Read-only view of a session, replaced as a whole after every mutation.
struct Snapshot {
    nlohmann::json state;
    std::string svg;
};

/// One game against the cop strategy. The state is a pure function of the
/// arena, the cop start and the robber inputs, so the session keeps only
/// those and replays the game after every input.
class Session {
public:
    /// Throws ApiError 400 for an invalid arena and 422 for a splinegon
    /// with infinite link diameter.
    Session(std::string id, const nlohmann::json& create_request);
    ~Session();
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    [[nodiscard]] const std::string& id() const { return id_; }
    /// The request that created the session, normalized (arena and cop vertex).
    [[nodiscard]] const nlohmann::json& create_record() const { return create_record_; }

    /// Places or moves the robber, then lets the cop reply. Throws ApiError
    /// 409 after the game ended and 422 for a point outside the arena or
    /// not visible from the robber. Serialized per session; persist receives
    /// the normalized point after the reply was computed and before the new
    /// state is published.
    std::shared_ptr<const Snapshot> submit(const nlohmann::json& point,
                                           const std::function<void(const nlohmann::json&)>& persist = {});

    /// Current state; never blocks on a running move.
    [[nodiscard]] std::shared_ptr<const Snapshot> snapshot() const;

private:
    struct Game;
    struct PolygonGame;
    struct SplineGame;

    void publish();

    std::string id_;
    nlohmann::json create_record_;
    std::unique_ptr<Game> game_;
    std::mutex move_mutex_;
    mutable std::mutex snapshot_mutex_;
    std::shared_ptr<const Snapshot> snapshot_;
};

/// All sessions, persisted as one append-only JSON-lines log per session in
/// a directory: a create record followed by one line per accepted robber
/// input. Existing logs are replayed on construction.
class SessionStore {
public:
    /// An empty directory disables persistence.
    explicit SessionStore(std::filesystem::path dir = {});

    /// Returns the new session's snapshot.
    std::shared_ptr<const Snapshot> create(const nlohmann::json& request);
    std::shared_ptr<const Snapshot> move(const std::string& id, const nlohmann::json& request);
    /// Throws ApiError 404 for an unknown id.
    [[nodiscard]] std::shared_ptr<const Snapshot> get(const std::string& id) const;
    [[nodiscard]] std::size_t size() const;
    /// Log files that could not be replayed, with the reason.
    [[nodiscard]] const std::vector<std::string>& load_errors() const { return load_errors_; }

private:
    std::shared_ptr<Session> find(const std::string& id) const;
    void append(const std::string& id, const nlohmann::json& line) const;
    std::string fresh_id();

    std::filesystem::path dir_;
    mutable std::shared_mutex map_mutex_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::vector<std::string> load_errors_;
};

/// POST /sessions, GET /sessions/{id}, POST /sessions/{id}/moves and
/// GET /sessions/{id}/trace.svg.
void register_routes(httplib::Server& server, SessionStore& store);

}  // namespace visgame::server
