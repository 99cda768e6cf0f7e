#include "visgame/server/sessions.h"

#include <CLI11.hpp>
#include <httplib.h>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Session service: play the robber against the cop strategy over HTTP"};
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string dir = "sessions";
    app.add_option("--host", host, "Bind address")->envname("VISGAME_HOST");
    app.add_option("--port", port, "Port")->envname("VISGAME_PORT");
    app.add_option("--sessions-dir", dir, "Directory of session logs; empty disables persistence")
        ->envname("VISGAME_SESSIONS_DIR");
    CLI11_PARSE(app, argc, argv);

    visgame::server::SessionStore store(dir);
    for (const std::string& e : store.load_errors()) std::cerr << "skipped session log " << e << '\n';
    std::cerr << "loaded " << store.size() << " sessions from " << (dir.empty() ? "(none)" : dir) << '\n';

    httplib::Server server;
    visgame::server::register_routes(server, store);
    std::cerr << "listening on " << host << ':' << port << '\n';
    if (!server.listen(host, port)) {
        std::cerr << "cannot listen on " << host << ':' << port << '\n';
        return 1;
    }
    return 0;
}
