#include <doctest.h>

#include "topolab/json_io.hpp"

using namespace topolab;
using jsonio::json;

namespace {

Space make_s2() {
  return Space::build(2, default_point_names(2), SetFamily::of({0b00, 0b01, 0b11}));
}

}  // namespace

TEST_CASE("space parses from the documented format") {
  const json j = jsonio::parse_text(
      R"({"points": ["a","b"], "opens": [[], [0], [0,1]]})");
  const Space s = jsonio::space_from_json(j);
  CHECK(s == make_s2());
  CHECK(s.names() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("space parses from a subbasis") {
  const json j = jsonio::parse_text(
      R"({"points": ["a","b"], "subbasis": [[0]]})");
  CHECK(jsonio::space_from_json(j) == make_s2());
}

TEST_CASE("space serialization round trips") {
  const Space s = make_s2();
  CHECK(jsonio::space_from_json(jsonio::space_to_json(s)) == s);
}

TEST_CASE("space parse errors carry the JSON path") {
  try {
    jsonio::space_from_json(
        jsonio::parse_text(R"({"points": ["a","b"], "opens": [[], [2]]})"));
    FAIL("index out of range accepted");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("$.opens[1][0]") != std::string::npos);
  }

  CHECK_THROWS_AS(jsonio::space_from_json(jsonio::parse_text(
                      R"({"points": ["a"], "opens": [[0]], "subbasis": []})")),
                  ParseError);
  CHECK_THROWS_AS(jsonio::space_from_json(jsonio::parse_text(R"({"points": []})")),
                  CapacityExceeded);
  CHECK_THROWS_AS(jsonio::space_from_json(jsonio::parse_text(
                      R"({"points": ["a","b"], "opens": [[0],[0,1]]})")),
                  NotATopology);
}

TEST_CASE("ideal parsing and ground-set checks") {
  const Ideal p = jsonio::ideal_from_json(
      jsonio::parse_text(R"({"principal": [0]})"), 2);
  CHECK(p == Ideal::principal(2, PointSet{0b01}));

  const Ideal d = jsonio::ideal_from_json(
      jsonio::parse_text(R"({"generators": [[0],[1]]})"), 2);
  CHECK(d == Ideal::downward(2, SetFamily::of({0b01, 0b10})));

  CHECK_THROWS_AS(
      jsonio::ideal_from_json(jsonio::parse_text(R"({"principal": [3]})"), 2),
      GroundSetMismatch);
  CHECK_THROWS_AS(
      jsonio::ideal_from_json(jsonio::parse_text(R"({"generators": [[2]]})"), 2),
      GroundSetMismatch);
  CHECK_THROWS_AS(jsonio::ideal_from_json(jsonio::parse_text(R"({})"), 2),
                  ParseError);
  CHECK(jsonio::ideal_from_json(jsonio::ideal_to_json(d), 2) == d);
}

TEST_CASE("violation serialization round trips and still replays") {
  const Context ctx{Space::indiscrete(2),
                    Ideal::downward(2, SetFamily::of({0b01, 0b10}))};
  const std::vector<Violation> violations = check_star_laws(ctx);
  REQUIRE(!violations.empty());
  for (const Violation& v : violations) {
    const Violation back = jsonio::violation_from_json(jsonio::violation_to_json(v));
    CHECK(back.law == v.law);
    CHECK(back.space == v.space);
    CHECK(back.ideal == v.ideal);
    CHECK(back.a == v.a);
    CHECK(back.b == v.b);
    CHECK(back.member == v.member);
    CHECK(back.lhs == v.lhs);
    CHECK(back.rhs == v.rhs);
    CHECK(back.detail == v.detail);
    CHECK(replay_violation(back));
  }
}

TEST_CASE("witness records round trip") {
  CorpusSpec spec;
  spec.max_points = 2;
  const Corpus corpus{spec};
  const WitnessQuery query{Slot::sigma, Slot::tau_theta_omega};
  const WitnessOutcome outcome = find_witness(query, corpus);
  REQUIRE(std::holds_alternative<Witness>(outcome));

  const json j = jsonio::witness_outcome_to_json(query, spec, outcome);
  CHECK(j.at("result") == "witness");
  const Witness back = jsonio::witness_from_json(j);
  CHECK(replay_witness(back));
  CHECK(back.set == std::get<Witness>(outcome).set);

  // None-records refuse to yield a witness.
  const WitnessOutcome none =
      find_witness({Slot::tau_omega, Slot::tau_star}, corpus);
  REQUIRE(std::holds_alternative<ScanRecord>(none));
  const json nj = jsonio::witness_outcome_to_json(
      {Slot::tau_omega, Slot::tau_star}, spec, none);
  CHECK(nj.at("result") == "none");
  CHECK(nj.at("scanned").at("instances").get<std::size_t>() == corpus.size());
  CHECK_THROWS_AS(jsonio::witness_from_json(nj), ParseError);
}

TEST_CASE("gamma iteration records round trip") {
  CorpusSpec spec;
  spec.max_points = 3;
  const Corpus corpus{spec};
  const GammaIterOutcome outcome =
      find_gamma_iteration_witness(GammaIterDirection::gg_escapes_g, corpus);
  REQUIRE(std::holds_alternative<GammaIterWitness>(outcome));
  const json j = jsonio::gamma_outcome_to_json(GammaIterDirection::gg_escapes_g,
                                               spec, outcome);
  const GammaIterWitness back = jsonio::gamma_witness_from_json(j);
  CHECK(replay_gamma_iteration_witness(back));
}

TEST_CASE("relation reports round trip through JSON including the DOT text") {
  CorpusSpec spec;
  spec.max_points = 2;
  const Corpus corpus{spec};
  const RelationReport report = aggregate(corpus);
  const json j = jsonio::report_to_json(report);
  const RelationReport back = jsonio::report_from_json(j);
  CHECK(emit_dot(back) == emit_dot(report));
  CHECK(back.instances == report.instances);
  CHECK(jsonio::report_to_json(back).dump(2) == j.dump(2));
}

TEST_CASE("malformed JSON raises ParseError") {
  CHECK_THROWS_AS(jsonio::parse_text("{nope"), ParseError);
  CHECK_THROWS_AS(jsonio::load_file("/nonexistent/file.json"), ParseError);
  CHECK_THROWS_AS(jsonio::report_from_json(jsonio::parse_text("{}")), ParseError);
}
