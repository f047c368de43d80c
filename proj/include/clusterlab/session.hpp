#pragma once

// Interactive sessions behind the HTTP API: a current seed plus an undo stack.
// Each session is guarded by its own mutex; the store's map by another.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "clusterlab/io.hpp"

namespace clusterlab {

class UnknownSession : public Error {
 public:
  explicit UnknownSession(const std::string& id) : Error("unknown_session", "no session with id '" + id + "'") {}
};

class SessionStore {
 public:
  struct Limits {
    std::size_t max_depth = 8;   // search depth for an acyclic route
    std::size_t max_radius = 6;  // largest radius accepted by variables()
  };

  SessionStore() = default;
  explicit SessionStore(Limits limits) : limits_(limits) {}

  /// Returns the new session's id.
  std::string create(Seed root);

  json state(const std::string& id);
  /// `vertex` is 1-based.
  json mutate(const std::string& id, long long vertex);
  json undo(const std::string& id);
  json projectives(const std::string& id);
  json classify(const std::string& id);
  json variables(const std::string& id, std::size_t radius);

  Seed current(const std::string& id);
  Seed root(const std::string& id);

 private:
  struct Session {
    std::string id;
    std::mutex mutex;
    Seed root;
    Seed current;
    std::vector<Seed> undo;
    std::optional<json> projectives;
    std::optional<json> classification;

    Session(std::string id_, Seed seed) : id(std::move(id_)), root(seed), current(std::move(seed)) {}
  };

  std::shared_ptr<Session> find(const std::string& id);
  static json state_of(const Session& s);

  Limits limits_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::size_t next_ = 1;
};

}  // namespace clusterlab
