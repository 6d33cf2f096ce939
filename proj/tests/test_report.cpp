#include <doctest.h>

#include "coxaut/report.hpp"
#include "systems.hpp"

using namespace coxaut;
using nlohmann::json;

TEST_CASE("system and word documents") {
  auto sys = testsys::flex3();
  auto js = report::system_json(sys);
  CHECK(js["generators"] == json({"s", "t", "u"}));
  CHECK(js["orders"] == json::parse(R"([[1,2,2]])"));

  WordEngine eng(sys);
  auto w = report::word_json(eng, eng.parse_word("t u t"));
  CHECK(w["canonical"] == "u");
  CHECK(w["length"] == 1);
  CHECK(w["reduced_input"] == false);
  CHECK(w["m_class_size"] == 1);
  auto id = report::word_json(eng, {});
  CHECK(id["input"] == "e");
  CHECK(id["canonical"] == "e");
}

TEST_CASE("flexibility document") {
  auto f = report::flexibility_json(testsys::flex3());
  CHECK(f["flexible"] == true);
  CHECK(f["pivot"] == "s");
  CHECK(f["phi"] == "(t u)");
  auto g = report::flexibility_json(testsys::a3());
  CHECK(g["flexible"] == false);
  CHECK_FALSE(g.contains("pivot"));
  CHECK(g["diagram_automorphisms"].size() == 2);
}

TEST_CASE("ball and cycle documents are deterministic") {
  auto make = [] {
    auto ball = CayleyBall::build(testsys::engine(testsys::flex3()), 2);
    return report::ball_json(ball).dump() + report::cycles_json(ball, 4).dump();
  };
  CHECK(make() == make());

  auto ball = CayleyBall::build(testsys::engine(testsys::flex3()), 2);
  auto b = report::ball_json(ball);
  CHECK(b["vertices"].size() == 9);
  CHECK(b["vertices"][0]["word"] == "e");
  CHECK(b["edges"].size() == ball.edges().size());

  auto c = report::cycles_json(ball, 4);
  REQUIRE(c["cycles"].size() == 1);
  CHECK(c["cycles"][0]["words"] == json({"e", "t", "t u", "u"}));
  CHECK(c["cycles"][0]["relator"] == json({"t", "u"}));
  CHECK(c["characterization"]["pass"] == true);
}

TEST_CASE("exotic and census documents") {
  auto ball = CayleyBall::build(testsys::engine(testsys::flex3()), 4);
  FlexibilityWitness w{0, DiagramAutomorphism({0, 2, 1})};
  auto e = report::exotic_json(ball, w, 0);
  CHECK(e["verified"] == true);
  CHECK(e["decomposes"] == false);
  CHECK(e["local_permutation_field"]["constant"] == false);
  CHECK(e["map"].size() == ball.size());

  auto census = identity_stabilizer_census(ball, 2);
  auto c = report::census_json(ball, census);
  CHECK(c["count"] == census.entries.size());
  CHECK(c["truncated"] == false);
  CHECK(c["diagram_count"] == 2);
}

TEST_CASE("invariant suite verdicts") {
  SuiteOptions opts;
  opts.radius = 4;
  auto rigid = run_invariant_suite(testsys::engine(testsys::a3()), opts);
  CHECK_FALSE(rigid.failed());
  CHECK(rigid.exit_code() == 0);
  CHECK(rigid.verdict == "DISCRETE-EVIDENCE");
  CHECK_FALSE(rigid.flexible);

  opts.radius = 6;
  auto flex = run_invariant_suite(testsys::engine(testsys::flex3()), opts);
  CHECK_FALSE(flex.failed());
  CHECK(flex.flexible);
  CHECK(flex.witness == "pivot=s phi=(t u)");
  CHECK(flex.verdict == "NONDISCRETE-EVIDENCE");
  auto js = report::suite_json(flex);
  CHECK(js["exit_code"] == 0);
  CHECK(js["violations"].empty());

  Limits tight;
  tight.max_search_nodes = 10;
  auto cut = run_invariant_suite(testsys::engine(testsys::flex3(), tight), opts);
  CHECK(cut.indeterminate());
  CHECK(cut.exit_code() == 3);
  CHECK(to_string(CheckStatus::kIndeterminate) == "indeterminate");
}
