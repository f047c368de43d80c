#include "clusterlab/service.hpp"

#include <charconv>

#include "httplib.h"

namespace clusterlab {

namespace {

void send(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

json error_body(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

int status_for(const Error& e) {
  if (dynamic_cast<const UnknownSession*>(&e)) return 404;
  if (dynamic_cast<const InternalFault*>(&e) || dynamic_cast<const NonExactDivision*>(&e)) return 500;
  return 400;
}

template <class F>
httplib::Server::Handler guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const Error& e) {
      send(res, status_for(e), error_body(e.code(), e.what()));
    } catch (const json::exception& e) {
      send(res, 400, error_body("invalid_request", e.what()));
    } catch (const std::exception& e) {
      send(res, 500, error_body("internal_fault", e.what()));
    }
  };
}

std::size_t radius_param(const httplib::Request& req) {
  if (!req.has_param("radius")) return 1;
  const std::string v = req.get_param_value("radius");
  std::size_t r = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), r);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw Error("invalid_argument", "radius must be a non-negative integer");
  return r;
}

}  // namespace

void install_routes(httplib::Server& server, SessionStore& store) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Post("/sessions", guarded([&store](const httplib::Request& req, httplib::Response& res) {
                const std::string id = store.create(load_seed(req.body));
                send(res, 201, store.state(id));
              }));
  server.Get(R"(/sessions/([^/]+))", guarded([&store](const httplib::Request& req, httplib::Response& res) {
               send(res, 200, store.state(req.matches[1]));
             }));
  server.Post(R"(/sessions/([^/]+)/mutate)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
                const json body = parse_json(req.body);
                if (!body.is_object() || !body.contains("vertex") || !body.at("vertex").is_number_integer()) {
                  throw Error("invalid_request", "body must be {\"vertex\": k}");
                }
                send(res, 200, store.mutate(req.matches[1], body.at("vertex").get<long long>()));
              }));
  server.Post(R"(/sessions/([^/]+)/undo)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
                send(res, 200, store.undo(req.matches[1]));
              }));
  server.Get(R"(/sessions/([^/]+)/projectives)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
               send(res, 200, store.projectives(req.matches[1]));
             }));
  server.Get(R"(/sessions/([^/]+)/classify)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
               send(res, 200, store.classify(req.matches[1]));
             }));
  server.Get(R"(/sessions/([^/]+)/variables)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
               send(res, 200, store.variables(req.matches[1], radius_param(req)));
             }));

  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.status == 404 && res.body.empty()) send(res, 404, error_body("not_found", "no such route"));
  });
}

bool serve(SessionStore& store, const std::string& host, int port) {
  httplib::Server server;
  install_routes(server, store);
  return server.listen(host, port);
}

}  // namespace clusterlab
