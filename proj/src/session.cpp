#include "clusterlab/session.hpp"

namespace clusterlab {

std::string SessionStore::create(Seed root) {
  std::lock_guard lock(mutex_);
  std::string id = "s" + std::to_string(next_++);
  sessions_.emplace(id, std::make_shared<Session>(id, std::move(root)));
  return id;
}

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw UnknownSession(id);
  return it->second;
}

json SessionStore::state_of(const Session& s) {
  json out = {{"id", s.id}};
  out.update(to_json(s.current));
  out["can_undo"] = !s.undo.empty();
  return out;
}

json SessionStore::state(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  return state_of(*s);
}

json SessionStore::mutate(const std::string& id, long long vertex) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  const auto k = sequence_from_external({vertex}, s->current.size()).front();
  Seed next = s->current.mutate(k);
  s->undo.push_back(std::move(s->current));
  s->current = std::move(next);
  s->projectives.reset();
  s->classification.reset();
  return state_of(*s);
}

json SessionStore::undo(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  if (s->undo.empty()) throw Error("empty_history", "nothing to undo");
  s->current = std::move(s->undo.back());
  s->undo.pop_back();
  s->projectives.reset();
  s->classification.reset();
  return state_of(*s);
}

json SessionStore::projectives(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  if (!s->projectives) s->projectives = to_json(projectives_general(s->current, limits_.max_depth));
  return *s->projectives;
}

json SessionStore::classify(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  if (!s->classification) s->classification = to_json(clusterlab::classify(s->current.quiver()));
  return *s->classification;
}

json SessionStore::variables(const std::string& id, std::size_t radius) {
  if (radius > limits_.max_radius) {
    throw Error("invalid_argument", "radius must be at most " + std::to_string(limits_.max_radius));
  }
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  json vars = json::array();
  for (const auto& v : variables_within_radius(s->current, radius)) vars.push_back(to_json(v));
  return {{"radius", radius}, {"count", vars.size()}, {"variables", std::move(vars)}};
}

Seed SessionStore::current(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  return s->current;
}

Seed SessionStore::root(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  return s->root;
}

}  // namespace clusterlab
