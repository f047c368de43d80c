#include "clusterlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "clusterlab/io.hpp"
#include "clusterlab/service.hpp"

namespace clusterlab {

namespace {

constexpr const char* kBoundVariable = "CLUSTERLAB_DEGREE_BOUND";

struct Options {
  std::string input;
  std::string format = "json";
  std::string mode = "free";
  std::vector<long long> at;
  std::size_t max_depth = 8;
  std::size_t seed_cap = 5000;
  std::int64_t degree_cap = 16;
  unsigned bound = 6;
  std::size_t radius = 4;
  std::string target;
  std::string generators = "lp";
  std::string host = "127.0.0.1";
  int port = 8080;
};

std::string read_input(const std::string& source, std::istream& in) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') return source;
  std::ostringstream buf;
  if (source == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(source);
  if (!file) throw Error("io_error", "cannot read '" + source + "'");
  buf << file.rdbuf();
  return buf.str();
}

unsigned default_bound() {
  const char* env = std::getenv(kBoundVariable);
  if (!env || !*env) return 6;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 64) {
    throw Error("invalid_argument", std::string(kBoundVariable) + " must be an integer in 0..64");
  }
  return static_cast<unsigned>(v);
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_mutate(const Options& o, const Seed& seed, std::ostream& out) {
  const Seed result = seed.apply(sequence_from_external(o.at, seed.size()));
  if (o.format == "json") {
    print(out, to_json(result));
  } else {
    out << to_text(result.quiver());
    for (std::size_t i = 0; i < result.size(); ++i) out << "x" << i + 1 << " = " << to_string(result.variable(i)) << '\n';
  }
  return kSuccess;
}

int cmd_projectives(const Options& o, const Seed& seed, std::ostream& out) {
  ProjectiveSet ps;
  try {
    ps = projectives_general(seed, o.max_depth);
  } catch (const NotFound& e) {
    if (o.format == "json") {
      print(out, json{{"status", "not_found"}, {"message", e.what()}});
    } else {
      out << "not found: " << e.what() << '\n';
    }
    return kVerificationFailure;
  }
  if (o.format == "json") {
    print(out, to_json(ps));
  } else {
    for (std::size_t i = 0; i < ps.values.size(); ++i) out << "xP" << i + 1 << " = " << to_string(ps.values[i]) << '\n';
  }
  return kSuccess;
}

int cmd_classify(const Options& o, const Seed& seed, std::ostream& out) {
  const MutationType t = classify(seed.quiver());
  if (o.format == "json") {
    out << to_json(t).dump() << '\n';
  } else {
    out << to_string(t);
    if (t.kind != MutationType::Kind::Unknown) out << ' ' << t.rank;
    out << '\n';
  }
  return kSuccess;
}

int cmd_enumerate(const Options& o, const Seed& seed, std::ostream& out) {
  const EnumerationReport r = enumerate_cluster_variables(seed, o.seed_cap, o.degree_cap);
  if (o.format == "json") {
    print(out, to_json(r));
  } else {
    for (const auto& v : r.variables) out << to_string(v.value) << '\n';
    out << r.variables.size() << " variables, " << r.seeds_visited << " seeds, " << (r.closed ? "closed" : "not closed") << '\n';
  }
  return kSuccess;
}

int cmd_membership(const Options& o, const Seed& seed, std::ostream& out) {
  const GeneratorSet gens = o.generators == "l" ? l_generators(seed) : lp_generators(seed, o.max_depth);
  const LaurentPoly target = parse_laurent(o.target, seed.table());
  const auto cert = membership(target, gens, o.bound);
  if (o.format == "json") {
    json j = {{"target", to_string(target)}, {"bound", o.bound}};
    if (cert) {
      j["status"] = "certified";
      j.update(to_json(*cert, gens));
    } else {
      j["status"] = "not_found_up_to_bound";
    }
    print(out, j);
  } else {
    out << (cert ? cert->to_string(gens) : "not found up to degree " + std::to_string(o.bound)) << '\n';
  }
  return cert ? kSuccess : kVerificationFailure;
}

int cmd_verify(const Options& o, const Seed& seed, std::ostream& out) {
  VerifyCaps caps;
  caps.degree_bound = o.bound;
  caps.seed_cap = o.seed_cap;
  caps.degree_cap = o.degree_cap;
  caps.radius = o.radius;
  caps.max_depth = o.max_depth;
  const VerifyReport r = verify_lp_equals_a(seed, caps);
  if (o.format == "json") {
    print(out, to_json(r));
  } else {
    for (const auto& e : r.entries) {
      out << to_string(e.status) << "  " << to_string(e.variable.value);
      if (e.certificate) out << " = " << e.certificate->to_string(r.generators);
      out << '\n';
    }
    out << r.count(VerifyEntry::Status::Certified) << " certified, " << r.count(VerifyEntry::Status::Generator)
        << " generators, " << r.count(VerifyEntry::Status::NotFoundUpToBound) << " not found\n";
  }
  return r.all_certified() ? kSuccess : kVerificationFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact cluster algebra workbench: mutation, projective cluster variables, membership."};
  app.name("clusterlab");
  app.require_subcommand(1);

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("input", o.input, "Quiver/seed file, inline JSON, or - for stdin")->required();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--mode", o.mode, "Coefficients for bare quivers")->check(CLI::IsMember({"free", "symbolic"}));
  };

  auto* mutate = app.add_subcommand("mutate", "Apply a mutation sequence (1-based, left to right)");
  add_common(mutate);
  mutate->add_option("--at", o.at, "Vertices to mutate at, e.g. --at 1,4")->delimiter(',')->required();

  auto* projectives = app.add_subcommand("projectives", "Projective cluster variables x_P1..x_Pn");
  add_common(projectives);
  projectives->add_option("--max-depth", o.max_depth, "Search depth for an acyclic seed");

  auto* classify_cmd = app.add_subcommand("classify", "Mutation type A_n / A-tilde_n");
  add_common(classify_cmd);

  auto* enumerate = app.add_subcommand("enumerate", "Breadth-first enumeration of cluster variables");
  add_common(enumerate);
  enumerate->add_option("--seed-cap", o.seed_cap, "Maximum number of seeds expanded");
  enumerate->add_option("--degree-cap", o.degree_cap, "Maximum total denominator degree");

  std::string bound_help = std::string("Degree bound (default from ") + kBoundVariable + ", else 6)";
  auto* member = app.add_subcommand("membership", "Certificate that a Laurent polynomial lies in L_P or L");
  add_common(member);
  member->add_option("--target", o.target, "Target, e.g. \"(x2 + x3)/x1\"")->required();
  member->add_option("--generators", o.generators, "lp: x_i and x_Pi; l: x_i and x_i'")->check(CLI::IsMember({"lp", "l"}));
  auto* member_bound = member->add_option("--bound", o.bound, bound_help);
  member->add_option("--max-depth", o.max_depth, "Search depth for an acyclic seed");

  auto* verify = app.add_subcommand("verify", "Check L_P = A on every variable in reach");
  add_common(verify);
  auto* verify_bound = verify->add_option("--bound", o.bound, bound_help);
  verify->add_option("--radius", o.radius, "Mutation radius when the enumeration does not close");
  verify->add_option("--seed-cap", o.seed_cap, "Maximum number of seeds expanded");
  verify->add_option("--degree-cap", o.degree_cap, "Maximum total denominator degree");
  verify->add_option("--max-depth", o.max_depth, "Search depth for an acyclic seed");

  auto* serve_cmd = app.add_subcommand("serve", "HTTP/JSON session API");
  serve_cmd->add_option("input", o.input, "Optional seed for an initial session");
  serve_cmd->add_option("--host", o.host, "Interface to bind");
  serve_cmd->add_option("--port", o.port, "Port")->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--mode", o.mode, "Coefficients for bare quivers")->check(CLI::IsMember({"free", "symbolic"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if ((member_bound->count() == 0 && app.got_subcommand(member)) ||
        (verify_bound->count() == 0 && app.got_subcommand(verify))) {
      o.bound = default_bound();
    }
    const CoefficientMode mode = mode_from_string(o.mode);

    if (app.got_subcommand(serve_cmd)) {
      SessionStore store;
      if (!o.input.empty()) {
        const std::string id = store.create(load_seed(read_input(o.input, in), mode));
        err << "session " << id << " created\n";
      }
      err << "listening on http://" << o.host << ':' << o.port << '\n';
      if (!serve(store, o.host, o.port)) {
        err << "error: cannot listen on " << o.host << ':' << o.port << '\n';
        return kInputError;
      }
      return kSuccess;
    }

    const Seed seed = load_seed(read_input(o.input, in), mode);
    if (app.got_subcommand(mutate)) return cmd_mutate(o, seed, out);
    if (app.got_subcommand(projectives)) return cmd_projectives(o, seed, out);
    if (app.got_subcommand(classify_cmd)) return cmd_classify(o, seed, out);
    if (app.got_subcommand(enumerate)) return cmd_enumerate(o, seed, out);
    if (app.got_subcommand(member)) return cmd_membership(o, seed, out);
    if (app.got_subcommand(verify)) return cmd_verify(o, seed, out);
  } catch (const InternalFault& e) {
    err << "error: " << e.code() << ": " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const NonExactDivision& e) {
    err << "error: " << e.code() << ": " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << e.what() << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    err << "error: invalid_input: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace clusterlab
