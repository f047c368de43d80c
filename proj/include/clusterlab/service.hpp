#pragma once

// HTTP/JSON front end over SessionStore.
//
//   POST /sessions                      body: quiver or seed JSON -> 201 state
//   GET  /sessions/{id}                 state: quiver, cluster texts, history
//   POST /sessions/{id}/mutate          body: {"vertex": k}
//   POST /sessions/{id}/undo
//   GET  /sessions/{id}/projectives
//   GET  /sessions/{id}/classify
//   GET  /sessions/{id}/variables?radius=r
//
// Errors: 400 (bad input) or 404 (unknown session / route) with body
// {"error": {"code": "...", "message": "..."}}.

#include <string>

#include "clusterlab/session.hpp"

namespace httplib {
class Server;
}

namespace clusterlab {

void install_routes(httplib::Server& server, SessionStore& store);

/// Blocks serving on host:port. Returns false if the socket cannot be bound.
bool serve(SessionStore& store, const std::string& host, int port);

}  // namespace clusterlab
