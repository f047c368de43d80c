#include "clusterlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace clusterlab {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

long long as_integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidQuiver(std::string(what) + " must be an integer");
  return j.get<long long>();
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError(msg, line, column);
  }
}

json to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& [from, to, m] : q.arrows()) {
    for (int c = 0; c < m; ++c) arrows.push_back({from + 1, to + 1});
  }
  return {{"n", q.size()}, {"arrows", std::move(arrows)}};
}

Quiver quiver_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n")) throw InvalidQuiver("quiver JSON needs an object with \"n\"");
  const long long n = as_integer(j.at("n"), "n");
  if (n < 1) throw InvalidQuiver("quiver needs at least one vertex");
  Quiver q(static_cast<std::size_t>(n));
  if (!j.contains("arrows")) return q;
  if (!j.at("arrows").is_array()) throw InvalidQuiver("\"arrows\" must be an array");
  for (const auto& a : j.at("arrows")) {
    if (!a.is_array() || a.size() != 2) throw InvalidQuiver("each arrow must be a [source, target] pair");
    const long long s = as_integer(a[0], "arrow source"), t = as_integer(a[1], "arrow target");
    if (s < 1 || s > n || t < 1 || t > n) {
      throw InvalidVertex("arrow [" + std::to_string(s) + "," + std::to_string(t) + "] leaves 1.." + std::to_string(n));
    }
    q.add_arrow(static_cast<std::size_t>(s - 1), static_cast<std::size_t>(t - 1));
  }
  return q;
}

std::string to_text(const Quiver& q) {
  std::string out = "vertices " + std::to_string(q.size()) + "\n";
  for (const auto& [from, to, m] : q.arrows()) {
    out += std::to_string(from + 1) + " -> " + std::to_string(to + 1);
    if (m > 1) out += " x" + std::to_string(m);
    out += '\n';
  }
  return out;
}

namespace {

class LineScanner {
 public:
  LineScanner(std::string_view line, std::size_t number) : s_(line), line_(number) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= s_.size();
  }
  bool accept(std::string_view token) {
    skip_space();
    if (s_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  long long number() {
    skip_space();
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, pos_ + 1); }

 private:
  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

Quiver parse_quiver_text(std::string_view text) {
  struct Arrow {
    long long from, to, count;
    std::size_t line;
  };
  std::vector<Arrow> arrows;
  long long n = 0, declared = 0;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++number;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineScanner sc(line, number);
    if (sc.done()) continue;
    if (sc.accept("vertices")) {
      const long long v = sc.number();
      if (v < 1) sc.fail("vertex count must be positive");
      if (declared) sc.fail("vertex count declared twice");
      declared = v;
    } else {
      Arrow a{sc.number(), 0, 1, number};
      sc.expect("->");
      a.to = sc.number();
      if (a.from < 1 || a.to < 1) sc.fail("vertices are numbered from 1");
      if (sc.accept("x")) {
        a.count = sc.number();
        if (a.count < 1) sc.fail("multiplicity must be positive");
      }
      n = std::max({n, a.from, a.to});
      arrows.push_back(a);
    }
    if (!sc.done()) sc.fail("unexpected trailing text");
  }
  if (declared) {
    for (const auto& a : arrows) {
      if (std::max(a.from, a.to) > declared) {
        throw ParseError("arrow uses a vertex above the declared count " + std::to_string(declared), a.line, 1);
      }
    }
    n = declared;
  }
  if (n == 0) throw ParseError("empty quiver description", 0, 0);
  Quiver q(static_cast<std::size_t>(n));
  for (const auto& a : arrows) {
    q.add_arrow(static_cast<std::size_t>(a.from - 1), static_cast<std::size_t>(a.to - 1), static_cast<int>(a.count));
  }
  return q;
}

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    terms.push_back({{"coef", t.coef.get_str()}, {"exps", std::vector<int>(t.exps.begin(), t.exps.end())}});
  }
  return {{"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const json& j, const TablePtr& table) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
    throw InvalidQuiver("Laurent JSON needs a \"terms\" array");
  }
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    const auto& coef = t.at("coef");
    Integer c;
    if (coef.is_string()) {
      if (c.set_str(coef.get<std::string>(), 10) != 0) throw InvalidQuiver("bad coefficient " + coef.dump());
    } else {
      c = Integer(std::to_string(as_integer(coef, "coef")));
    }
    const auto exps = t.at("exps").get<std::vector<int>>();
    if (exps.size() != table->size()) throw TableMismatch("exponent vector length differs from the variable table");
    terms.push_back(Term{Exponents(exps.begin(), exps.end()), std::move(c)});
  }
  return LaurentPoly::from_terms(table, std::move(terms));
}

std::string to_string(CoefficientMode mode) { return mode == CoefficientMode::Free ? "free" : "symbolic"; }

CoefficientMode mode_from_string(std::string_view s) {
  if (s == "free") return CoefficientMode::Free;
  if (s == "symbolic") return CoefficientMode::Symbolic;
  throw InvalidQuiver("mode must be \"free\" or \"symbolic\"");
}

json to_json(const Seed& s) {
  json cluster = json::array();
  for (const auto& v : s.cluster()) cluster.push_back(to_string(v));
  json out = {{"quiver", to_json(s.quiver())}, {"mode", to_string(s.mode())}, {"cluster", std::move(cluster)}};
  if (s.mode() == CoefficientMode::Symbolic) {
    json coefficients = json::array();
    for (const auto& c : s.coefficients()) coefficients.push_back({to_string(c.plus), to_string(c.minus)});
    out["coefficients"] = std::move(coefficients);
  }
  out["history"] = sequence_to_external(s.history());
  return out;
}

Seed seed_from_json(const json& j) {
  if (!j.is_object() || !j.contains("quiver")) throw InvalidQuiver("seed JSON needs a \"quiver\"");
  const Quiver q = quiver_from_json(j.at("quiver"));
  const CoefficientMode mode = j.contains("mode") ? mode_from_string(j.at("mode").get<std::string>()) : CoefficientMode::Free;
  const Seed init = Seed::initial(q, mode);
  const auto& table = init.table();

  std::vector<LaurentPoly> cluster = init.cluster();
  if (j.contains("cluster")) {
    const auto& c = j.at("cluster");
    if (!c.is_array() || c.size() != q.size()) throw InvalidQuiver("\"cluster\" must list one entry per vertex");
    cluster.clear();
    for (const auto& e : c) cluster.push_back(parse_laurent(e.get<std::string>(), table));
  }
  std::vector<CoefficientPair> coefficients = init.coefficients();
  if (j.contains("coefficients")) {
    const auto& c = j.at("coefficients");
    if (!c.is_array() || c.size() != q.size()) throw InvalidQuiver("\"coefficients\" must list one pair per vertex");
    coefficients.clear();
    for (const auto& pair : c) {
      if (!pair.is_array() || pair.size() != 2) throw InvalidQuiver("each coefficient entry is a [plus, minus] pair");
      coefficients.push_back({parse_laurent(pair[0].get<std::string>(), table),
                              parse_laurent(pair[1].get<std::string>(), table)});
    }
  }
  MutationSequence history;
  if (j.contains("history")) {
    history = sequence_from_external(j.at("history").get<std::vector<long long>>(), q.size());
  }
  return Seed(q, mode, table, std::move(cluster), std::move(coefficients), std::move(history));
}

Seed load_seed(std::string_view text, CoefficientMode mode) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    const json j = parse_json(text);
    if (j.contains("quiver")) return seed_from_json(j);
    return Seed::initial(quiver_from_json(j), mode);
  }
  return Seed::initial(parse_quiver_text(text), mode);
}

json to_json(const ClusterVariable& v) {
  return {{"value", to_string(v.value)},
          {"denominator", denominator_vector(v.value)},
          {"position", v.position + 1},
          {"history", sequence_to_external(v.history)}};
}

json to_json(const ProjectiveSet& ps) {
  json list = json::array();
  for (std::size_t i = 0; i < ps.values.size(); ++i) {
    list.push_back({{"vertex", i + 1}, {"value", to_string(ps.values[i])}, {"denominator", denominator_vector(ps.values[i])}});
  }
  return {{"route", sequence_to_external(ps.route)}, {"projectives", std::move(list)}};
}

json to_json(const MutationType& t) {
  if (t.kind == MutationType::Kind::Unknown) return {{"type", "unknown"}};
  return {{"type", to_string(t)}, {"n", t.rank}};
}

json to_json(const EnumerationReport& r) {
  json vars = json::array();
  for (const auto& v : r.variables) vars.push_back(to_json(v));
  return {{"count", r.variables.size()},
          {"seeds_visited", r.seeds_visited},
          {"closed", r.closed},
          {"seed_cap_hit", r.seed_cap_hit},
          {"degree_cap_hit", r.degree_cap_hit},
          {"variables", std::move(vars)}};
}

json to_json(const MembershipCertificate& c, const GeneratorSet& gens) {
  return {{"certificate", c.to_string(gens)}, {"degree", c.degree()}, {"integral", c.integral()}};
}

json to_json(const RankReport& r) {
  return {{"bound", r.bound}, {"count", r.count}, {"rank", r.rank}, {"full_rank", r.full()}};
}

namespace {

json generators_json(const GeneratorSet& gens) {
  json out = json::object();
  for (std::size_t s = 0; s < gens.size(); ++s) out[gens.symbol_name(s)] = to_string(gens.generator(s));
  return out;
}

}  // namespace

json to_json(const VerifyReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json item = to_json(e.variable);
    item["status"] = to_string(e.status);
    if (e.certificate) {
      item["certificate"] = e.certificate->to_string(r.generators);
      item["degree"] = e.certificate->degree();
      item["integral"] = e.certificate->integral();
    }
    entries.push_back(std::move(item));
  }
  json out = {{"scope", r.scope == VerifyReport::Scope::Closure ? "closure" : "radius"},
              {"type", to_json(r.type)},
              {"degree_bound", r.caps.degree_bound},
              {"generators", generators_json(r.generators)},
              {"counts",
               {{"generator", r.count(VerifyEntry::Status::Generator)},
                {"certified", r.count(VerifyEntry::Status::Certified)},
                {"not_found_up_to_bound", r.count(VerifyEntry::Status::NotFoundUpToBound)}}},
              {"all_certified", r.all_certified()}};
  if (r.scope == VerifyReport::Scope::Radius) out["radius"] = r.caps.radius;
  out["entries"] = std::move(entries);
  return out;
}

MutationSequence sequence_from_external(const std::vector<long long>& seq, std::size_t n) {
  MutationSequence out;
  out.reserve(seq.size());
  for (auto k : seq) {
    if (k < 1 || static_cast<std::size_t>(k) > n) {
      throw InvalidVertex("vertex " + std::to_string(k) + " is not in 1.." + std::to_string(n));
    }
    out.push_back(static_cast<std::size_t>(k - 1));
  }
  return out;
}

std::vector<std::size_t> sequence_to_external(const MutationSequence& seq) {
  std::vector<std::size_t> out(seq.begin(), seq.end());
  for (auto& k : out) ++k;
  return out;
}

}  // namespace clusterlab
