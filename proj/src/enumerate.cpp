#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "clusterlab/algebra.hpp"

namespace clusterlab {

std::int64_t denominator_degree(const LaurentPoly& p) {
  std::int64_t total = 0;
  for (auto d : denominator_vector(p)) total += std::max<std::int64_t>(d, 0);
  return total;
}

namespace {

using SeedKey = std::vector<LaurentPoly>;

SeedKey key_of(const Seed& s) {
  std::vector<std::size_t> idx(s.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return s.variable(a) < s.variable(b); });
  SeedKey key;
  for (auto i : idx) key.push_back(s.variable(i));
  if (s.mode() == CoefficientMode::Symbolic) {
    for (auto i : idx) {
      key.push_back(s.coefficients()[i].plus);
      key.push_back(s.coefficients()[i].minus);
    }
  }
  return key;
}

class Inventory {
 public:
  void record(const Seed& s, std::size_t position) {
    const auto& v = s.variable(position);
    if (seen_.insert(v).second) order_.push_back(ClusterVariable{v, s.history(), position});
  }
  void record_all(const Seed& s) {
    for (std::size_t i = 0; i < s.size(); ++i) record(s, i);
  }
  std::vector<ClusterVariable> take() { return std::move(order_); }

 private:
  std::set<LaurentPoly> seen_;
  std::vector<ClusterVariable> order_;
};

}  // namespace

EnumerationReport enumerate_cluster_variables(const Seed& seed, std::size_t seed_cap, std::int64_t degree_cap) {
  EnumerationReport report;
  Inventory inventory;
  std::set<SeedKey> visited{key_of(seed)};
  std::deque<Seed> queue{seed};
  inventory.record_all(seed);
  while (!queue.empty()) {
    if (report.seeds_visited >= seed_cap) {
      report.seed_cap_hit = true;
      break;
    }
    Seed s = std::move(queue.front());
    queue.pop_front();
    ++report.seeds_visited;
    const bool too_deep = std::any_of(s.cluster().begin(), s.cluster().end(),
                                      [&](const auto& v) { return denominator_degree(v) > degree_cap; });
    if (too_deep) {
      report.degree_cap_hit = true;
      continue;
    }
    for (std::size_t k = 0; k < s.size(); ++k) {
      Seed t = s.mutate(k);
      if (!visited.insert(key_of(t)).second) continue;
      inventory.record(t, k);
      queue.push_back(std::move(t));
    }
  }
  report.closed = queue.empty() && !report.seed_cap_hit && !report.degree_cap_hit;
  report.variables = inventory.take();
  std::sort(report.variables.begin(), report.variables.end(),
            [](const auto& a, const auto& b) { return a.value < b.value; });
  return report;
}

std::vector<ClusterVariable> variables_within_radius(const Seed& seed, std::size_t radius) {
  Inventory inventory;
  std::set<SeedKey> visited{key_of(seed)};
  std::vector<Seed> frontier{seed};
  inventory.record_all(seed);
  for (std::size_t depth = 0; depth < radius && !frontier.empty(); ++depth) {
    std::vector<Seed> next;
    for (const auto& s : frontier) {
      for (std::size_t k = 0; k < s.size(); ++k) {
        Seed t = s.mutate(k);
        if (!visited.insert(key_of(t)).second) continue;
        inventory.record(t, k);
        next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  return inventory.take();
}

std::size_t VerifyReport::count(VerifyEntry::Status s) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [&](const auto& e) { return e.status == s; }));
}

std::string to_string(VerifyEntry::Status s) {
  switch (s) {
    case VerifyEntry::Status::Generator: return "generator";
    case VerifyEntry::Status::Certified: return "certified";
    case VerifyEntry::Status::NotFoundUpToBound: return "not_found_up_to_bound";
  }
  return "unknown";
}

VerifyReport verify_lp_equals_a(const Seed& seed, const VerifyCaps& caps) {
  VerifyReport report;
  report.caps = caps;
  report.type = seed.quiver().is_connected() ? classify(seed.quiver()) : MutationType{};
  report.generators = lp_generators(seed, caps.max_depth);

  std::vector<ClusterVariable> variables;
  if (report.type.kind != MutationType::Kind::ATilde) {
    report.enumeration = enumerate_cluster_variables(seed, caps.seed_cap, caps.degree_cap);
  }
  if (report.enumeration.closed) {
    report.scope = VerifyReport::Scope::Closure;
    variables = report.enumeration.variables;
  } else {
    report.scope = VerifyReport::Scope::Radius;
    variables = variables_within_radius(seed, caps.radius);
  }

  MembershipSolver solver(report.generators);
  const auto& gens = report.generators;
  for (auto& v : variables) {
    VerifyEntry entry{std::move(v), VerifyEntry::Status::NotFoundUpToBound, std::nullopt};
    const auto& value = entry.variable.value;
    const bool is_generator = std::find(gens.x.begin(), gens.x.end(), value) != gens.x.end() ||
                              std::find(gens.g.begin(), gens.g.end(), value) != gens.g.end();
    if (is_generator) {
      entry.status = VerifyEntry::Status::Generator;
    } else if (auto cert = solver.solve(value, caps.degree_bound)) {
      entry.status = VerifyEntry::Status::Certified;
      entry.certificate = std::move(cert);
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace clusterlab
