#include "clusterlab/io.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace clusterlab;
using support::quiver;

TEST_SUITE("io") {
  TEST_CASE("quiver JSON") {
    const Quiver q = support::double_arrow_two_triangles();
    const json j = to_json(q);
    CHECK(j.dump() == R"({"n":4,"arrows":[[1,2],[2,3],[2,3],[3,1],[3,4],[4,2]]})");
    CHECK(quiver_from_json(j) == q);
    CHECK(quiver_from_json(parse_json(R"({"n": 2, "arrows": [[2, 1]]})")) == quiver(2, {{2, 1}}));
    CHECK_THROWS_AS(quiver_from_json(parse_json(R"({"n": 2, "arrows": [[1, 3]]})")), InvalidVertex);
    CHECK_THROWS_AS(quiver_from_json(parse_json(R"({"n": 2, "arrows": [[1, 1]]})")), InvalidQuiver);
    CHECK_THROWS_AS(quiver_from_json(parse_json(R"({"n": 2, "arrows": [[1, 2], [2, 1]]})")), InvalidQuiver);
  }

  TEST_CASE("quiver text") {
    const Quiver q = support::double_arrow_triangle();
    const std::string text = to_text(q);
    CHECK(text == "vertices 3\n1 -> 2\n2 -> 3 x2\n3 -> 1\n");
    CHECK(parse_quiver_text(text) == q);
    CHECK(parse_quiver_text("# comment\nvertices 2\n\n2 -> 1   # trailing\n") == quiver(2, {{2, 1}}));
    CHECK(parse_quiver_text("vertices 3\n2 -> 3 x2\n2 -> 3\n").multiplicity(1, 2) == 3);
  }

  TEST_CASE("text parse errors report line and column") {
    try {
      (void)parse_quiver_text("vertices 3\n1 -> 2\n2 => 3\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 3);
    }
    try {
      (void)parse_quiver_text("vertices 2\n1 -> 5\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK(parse_quiver_text("1 -> 3\n").size() == 3);
  }

  TEST_CASE("JSON syntax errors report line and column") {
    try {
      (void)parse_json("{\n  \"n\": 2,\n  \"arrows\": [[2 1]]\n}");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() > 0);
    }
  }

  TEST_CASE("Laurent polynomial JSON") {
    const TablePtr t = VariableTable::cluster(2);
    const LaurentPoly p = parse_laurent("(1 + x2)/x1", t);
    const json j = to_json(p);
    CHECK(j.at("terms").size() == 2);
    CHECK(j.at("terms")[0].at("coef") == "1");
    CHECK(laurent_from_json(j, t) == p);
    const LaurentPoly big = parse_laurent("123456789012345678901234567890*x1^-3 - 7*x2^5", t);
    CHECK(laurent_from_json(to_json(big), t) == big);
  }

  TEST_CASE("seed JSON round trip after random mutations") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = 1 + i % 4;
      const auto mode = i % 2 ? CoefficientMode::Symbolic : CoefficientMode::Free;
      const Seed s = Seed::initial(support::random_quiver(rng, n, 2), mode).apply(support::random_sequence(rng, n, 4));
      const Seed back = seed_from_json(parse_json(to_json(s).dump()));
      REQUIRE(back == s);
      REQUIRE(back.history() == s.history());
      REQUIRE(back.mode() == s.mode());
    }
  }

  TEST_CASE("quiver text round trip") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
      const Quiver q = support::random_quiver(rng, 1 + i % 6, 3);
      REQUIRE(parse_quiver_text(to_text(q)) == q);
      REQUIRE(quiver_from_json(parse_json(to_json(q).dump())) == q);
    }
  }

  TEST_CASE("seed loading accepts every input format") {
    const Seed a = load_seed(R"({"n": 3, "arrows": [[1,2],[2,3],[3,1]]})");
    const Seed b = load_seed("vertices 3\n1 -> 2\n2 -> 3\n3 -> 1\n");
    const Seed c = load_seed(R"({"quiver": {"n": 3, "arrows": [[1,2],[2,3],[3,1]]}})");
    CHECK(a == b);
    CHECK(a == c);
    CHECK(load_seed(R"({"n": 1, "arrows": []})", CoefficientMode::Symbolic).mode() == CoefficientMode::Symbolic);
    CHECK_THROWS_AS(load_seed("{\"n\": 3"), ParseError);
  }

  TEST_CASE("report documents") {
    const Seed tri = Seed::initial(support::oriented_triangle(), CoefficientMode::Free);
    const json ps = to_json(projectives_general(tri));
    CHECK(ps.at("projectives")[1].at("value") == "(x1 + x2 + x3) / (x2*x3)");
    CHECK(ps.at("projectives")[1].at("vertex") == 2);
    CHECK(ps.at("route") == json::array({1}));
    CHECK(to_json(classify(support::double_arrow_two_triangles())).dump() == R"({"type":"A-tilde","n":3})");
    CHECK(to_json(classify(Quiver(1).permuted({0}))).at("type") == "A");
    CHECK(to_json(classify(quiver(2, {{1, 2}, {1, 2}, {1, 2}}))).dump() == R"({"type":"unknown"})");
  }

  TEST_CASE("mutation sequences are 1-based outside") {
    CHECK(sequence_from_external({2, 1}, 3) == MutationSequence{1, 0});
    CHECK(sequence_to_external({1, 0}) == std::vector<std::size_t>{2, 1});
    CHECK_THROWS_AS(sequence_from_external({0}, 3), InvalidVertex);
    CHECK_THROWS_AS(sequence_from_external({4}, 3), InvalidVertex);
  }

  TEST_CASE("coefficient modes") {
    CHECK(mode_from_string("free") == CoefficientMode::Free);
    CHECK(to_string(CoefficientMode::Symbolic) == "symbolic");
    CHECK_THROWS_AS(mode_from_string("other"), Error);
  }
}
