#include <doctest.h>

#include <set>

#include "coxaut/cycles.hpp"
#include "oracle.hpp"
#include "systems.hpp"

using namespace coxaut;

namespace {

VertexId at(CayleyBall const& ball, std::string const& word) {
  auto v = ball.find(ball.engine().reduce(ball.engine().parse_word(word)));
  REQUIRE(v.has_value());
  return *v;
}

EmbeddedCycle cycle_of(CayleyBall const& ball, std::vector<std::string> const& words) {
  std::vector<VertexId> vs;
  for (auto const& w : words) vs.push_back(at(ball, w));
  return make_cycle(ball, vs);
}

std::set<std::pair<int, int>> edge_set(EmbeddedCycle const& c) {
  std::set<std::pair<int, int>> out;
  for (std::size_t i = 0; i < c.length(); ++i) {
    int a = static_cast<int>(c.vertices[i]);
    int b = static_cast<int>(c.vertices[(i + 1) % c.length()]);
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

}  // namespace

TEST_CASE("cycles: worked examples") {
  auto a2 = CayleyBall::build(testsys::engine(testsys::a2()), 3);
  auto hex = enumerate_embedded_cycles(a2, 6);
  REQUIRE(hex.size() == 1);
  CHECK(hex[0].length() == 6);
  CHECK(relator_of(a2.system(), hex[0]) == std::pair<GeneratorId, GeneratorId>{0, 1});

  auto ex = CayleyBall::build(testsys::engine(testsys::flex3()), 2);
  auto sq = enumerate_embedded_cycles(ex, 4);
  REQUIRE(sq.size() == 1);
  CHECK(sq[0] == cycle_of(ex, {"e", "t", "t u", "u"}));
  CHECK(sq[0].vertices.front() == 0);

  auto c2 = CayleyBall::build(testsys::engine(testsys::c2()), 4);
  CHECK(enumerate_embedded_cycles(c2, 8).empty());
  CHECK(relator_cycles(c2).empty());

  auto free3 = CayleyBall::build(testsys::engine(testsys::free3()), 4);
  CHECK(enumerate_embedded_cycles(free3, 8).empty());
  CHECK(relator_cycles(free3).empty());
}

TEST_CASE("make_cycle canonical form") {
  auto ex = CayleyBall::build(testsys::engine(testsys::flex3()), 2);
  auto a = cycle_of(ex, {"t u", "u", "e", "t"});
  auto b = cycle_of(ex, {"u", "t u", "t", "e"});
  CHECK(a == b);
  CHECK(a.vertices[1] < a.vertices[3]);
  CHECK_THROWS_AS(cycle_of(ex, {"e", "t", "u"}), InvalidArgument);
  CHECK_THROWS_AS(make_cycle(ex, {0, 1}), InvalidArgument);
}

TEST_CASE("cycle enumeration matches exhaustive search") {
  for (auto sys : {testsys::a2(), testsys::a3(), testsys::b2(), testsys::c2cubed(), testsys::flex3(),
                   testsys::affine_a2()}) {
    auto ball = CayleyBall::build(testsys::engine(sys), 3);
    auto ref = oracle::build_oracle_ball(sys, 3);
    std::set<std::set<std::pair<int, int>>> got;
    for (auto const& c : enumerate_embedded_cycles(ball, 8)) {
      CHECK(got.insert(edge_set(c)).second);
    }
    CHECK(got == oracle::brute_cycles(ref, 8));
  }
}

TEST_CASE("essentiality: worked examples") {
  auto a2 = CayleyBall::build(testsys::engine(testsys::a2()), 4);
  auto hex = relator_cycles(a2);
  REQUIRE(hex.size() == 1);
  auto rep = is_essential(a2, hex[0]);
  CHECK(rep.essential);
  CHECK(rep.certified);

  auto ex = CayleyBall::build(testsys::engine(testsys::flex3()), 4);
  auto sq = is_essential(ex, cycle_of(ex, {"e", "t", "t u", "u"}));
  CHECK(sq.essential);
  CHECK(sq.certified);

  auto cube = CayleyBall::build(testsys::engine(testsys::c2cubed()), 3);
  auto six = is_essential(cube, cycle_of(cube, {"e", "a", "a b", "a b c", "b c", "c"}));
  CHECK_FALSE(six.essential);
  CHECK(six.certified);
  REQUIRE(six.witness.has_value());
  CHECK(six.witness->from == 0);
  CHECK(six.witness->to == at(cube, "a b c"));
  CHECK(six.witness->distance == 3);
  CHECK(six.witness->paths == 6);
  CHECK(check_alternation(cycle_of(cube, {"e", "a", "a b", "b"})));
  CHECK_FALSE(check_alternation(six.cycle));
}

TEST_CASE("certification near the boundary") {
  // flex3 at radius 3: the square at s fits, but its far corner has
  // a truncated star, so path counts through it are not trustworthy.
  auto ex = CayleyBall::build(testsys::engine(testsys::flex3()), 3);
  auto rels = relator_cycles(ex);
  REQUIRE(rels.size() == 2);
  CHECK(rels[0] == cycle_of(ex, {"e", "t", "t u", "u"}));
  CHECK(rels[1] == cycle_of(ex, {"s", "s t", "s t u", "s u"}));
  CHECK(is_essential(ex, rels[0]).certified);
  CHECK_FALSE(is_essential(ex, rels[1]).certified);

  auto ex4 = CayleyBall::build(testsys::engine(testsys::flex3()), 4);
  CHECK(relator_cycles(ex4).size() == 4);

  CHECK(paths_stay_inside(ex, {0}, 4));
  CHECK_FALSE(paths_stay_inside(ex, {0}, 5));
  CHECK(paths_stay_inside(ex, {at(ex, "s t")}, 2));
  CHECK_FALSE(paths_stay_inside(ex, {at(ex, "s t")}, 3));
  CHECK_FALSE(paths_stay_inside(ex, {at(ex, "s t u")}, 2));
  // A ball holding the whole finite group certifies everything.
  auto cube = CayleyBall::build(testsys::engine(testsys::c2cubed()), 3);
  CHECK(paths_stay_inside(cube, {at(cube, "a b c")}, 10));
}

TEST_CASE("essential cycles are exactly the relator cycles") {
  for (auto sys : {testsys::a2(), testsys::a3(), testsys::b2(), testsys::c2cubed(), testsys::affine_a2(),
                   testsys::flex3(), testsys::pentagon_star()}) {
    int m = static_cast<int>(sys.max_finite_order());
    // The pentagon coset at e needs room around its far vertex.
    int r = sys == testsys::pentagon_star() ? 2 * m - 1 : 2 + m;
    auto ball = CayleyBall::build(testsys::engine(sys), r);
    auto rep = verify_essential_characterization(ball);
    CHECK(rep.pass());
    CHECK(rep.odd_cycles == 0);
    CHECK(rep.certified_essential == rep.certified_relator);
    CHECK(rep.certified_relator > 0);
  }
  auto cube = CayleyBall::build(testsys::engine(testsys::c2cubed()), 3);
  auto rep = verify_essential_characterization(cube, 6);
  CHECK(rep.pass());
  CHECK(rep.certified_essential == 6);
  CHECK(rep.certified == rep.cycles);
}
