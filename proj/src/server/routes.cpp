#include "visgame/server/sessions.h"

#include <httplib.h>

namespace visgame::server {

namespace {

using nlohmann::json;

void send_json(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

/// Runs a handler and turns its exceptions into JSON error responses.
template <typename Handler>
void guarded(httplib::Response& res, Handler&& handler) {
    try {
        handler();
    } catch (const ApiError& e) {
        send_json(res, e.status(), {{"error", e.what()}});
    } catch (const json::exception& e) {
        send_json(res, 400, {{"error", std::string("malformed JSON: ") + e.what()}});
    } catch (const std::exception& e) {
        send_json(res, 500, {{"error", e.what()}});
    }
}

json parse_body(const httplib::Request& req) { return json::parse(req.body); }

}  // namespace

void register_routes(httplib::Server& server, SessionStore& store) {
    server.Post("/sessions", [&store](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { send_json(res, 201, store.create(parse_body(req))->state); });
    });
    server.Get(R"(/sessions/([0-9A-Za-z_-]+))", [&store](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { send_json(res, 200, store.get(req.matches[1])->state); });
    });
    server.Post(R"(/sessions/([0-9A-Za-z_-]+)/moves)", [&store](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { send_json(res, 200, store.move(req.matches[1], parse_body(req))->state); });
    });
    server.Get(R"(/sessions/([0-9A-Za-z_-]+)/trace\.svg)",
               [&store](const httplib::Request& req, httplib::Response& res) {
                   guarded(res, [&] { res.set_content(store.get(req.matches[1])->svg, "image/svg+xml"); });
               });
}

}  // namespace visgame::server
