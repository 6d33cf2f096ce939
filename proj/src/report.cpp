#include "coxaut/report.hpp"

#include <set>

namespace coxaut::report {

json system_json(CoxeterSystem const& sys) {
  json orders = json::array();
  for (auto const& r : sys.relations()) {
    orders.push_back({r.s, r.t, r.m});
  }
  return {{"generators", sys.names()}, {"orders", orders}};
}

json word_json(WordEngine const& engine, Word const& input) {
  Element const e = engine.reduce(input);
  auto const cls = engine.m_class(e.word);
  json members = json::array();
  for (auto const& w : cls) {
    members.push_back(engine.format(w));
  }
  return {{"input", engine.format(input)},
          {"canonical", engine.format(e)},
          {"length", e.length()},
          {"reduced_input", engine.is_reduced(input)},
          {"m_class", members},
          {"m_class_size", cls.size()}};
}

json flexibility_json(CoxeterSystem const& sys) {
  json auts = json::array();
  for (auto const& d : enumerate_diagram_automorphisms(sys)) {
    auts.push_back(d.to_string(sys));
  }
  json out = {{"flexible", false}, {"diagram_automorphisms", auts}};
  if (auto w = is_flexible(sys)) {
    out["flexible"] = true;
    out["pivot"] = sys.name(w->pivot);
    out["phi"] = w->phi.to_string(sys);
  }
  return out;
}

json ball_json(CayleyBall const& ball) {
  WordEngine const& eng = ball.engine();
  json vertices = json::array();
  for (VertexId v = 0; v < ball.size(); ++v) {
    vertices.push_back({{"id", v}, {"word", eng.format(ball.element(v))}});
  }
  json edges = json::array();
  for (auto const& e : ball.edges()) {
    edges.push_back({e.u, e.v, ball.system().name(e.label)});
  }
  return {{"radius", ball.radius()}, {"vertices", vertices}, {"edges", edges}};
}

json cycles_json(CayleyBall const& ball, int max_len) {
  CoxeterSystem const& sys = ball.system();
  WordEngine const& eng = ball.engine();
  int const len = max_len > 0 ? max_len : default_cycle_length(sys);
  json cycles = json::array();
  for (auto const& c : enumerate_embedded_cycles(ball, len)) {
    auto const rep = is_essential(ball, c);
    json labels = json::array();
    for (auto g : c.labels) {
      labels.push_back(sys.name(g));
    }
    json words = json::array();
    for (auto v : c.vertices) {
      words.push_back(eng.format(ball.element(v)));
    }
    json entry = {{"vertices", c.vertices},
                  {"words", words},
                  {"labels", labels},
                  {"essential", rep.essential},
                  {"certified", rep.certified},
                  {"relator", nullptr}};
    if (auto r = relator_of(sys, c)) {
      entry["relator"] = {sys.name(r->first), sys.name(r->second)};
    }
    if (rep.witness) {
      entry["witness"] = {{"from", rep.witness->from},
                          {"to", rep.witness->to},
                          {"distance", rep.witness->distance},
                          {"paths", rep.witness->paths}};
    }
    cycles.push_back(std::move(entry));
  }
  auto const summary = verify_essential_characterization(ball, len);
  return {{"radius", ball.radius()},
          {"max_len", len},
          {"cycles", cycles},
          {"characterization",
           {{"pass", summary.pass()},
            {"certified", summary.certified},
            {"certified_essential", summary.certified_essential},
            {"certified_relator", summary.certified_relator},
            {"essential_not_relator", summary.essential_not_relator.size()},
            {"relator_not_essential", summary.relator_not_essential.size()}}}};
}

json field_summary_json(CayleyBall const& ball, LocalPermutationField const& field) {
  CoxeterSystem const& sys = ball.system();
  std::set<std::string> distinct;
  for (auto const& [v, p] : field.at) {
    if (auto perm = p.as_permutation()) {
      distinct.insert(perm->to_string(sys));
    }
  }
  return {{"constant", field.constant},
          {"vertices", field.at.size()},
          {"distinct", std::vector<std::string>(distinct.begin(), distinct.end())}};
}

json exotic_json(CayleyBall const& ball, FlexibilityWitness const& witness, int n) {
  CoxeterSystem const& sys = ball.system();
  WordEngine const& eng = ball.engine();
  auto const a = n == 0 ? psi_phi(ball, witness) : psi_n(ball, witness, n);
  json map = json::array();
  for (VertexId v = 0; v < ball.size(); ++v) {
    map.push_back({eng.format(ball.element(v)),
                   a.vmap[v] == kNoVertex ? std::string("-")
                                          : eng.format(ball.element(a.vmap[v]))});
  }
  auto const verification = verify_ball_automorphism(ball, a);
  auto const field = local_permutation_field(ball, a);
  return {{"radius", ball.radius()},
          {"n", n},
          {"pivot", sys.name(witness.pivot)},
          {"phi", witness.phi.to_string(sys)},
          {"map", map},
          {"verified", verification.ok()},
          {"decomposes", decompose(ball, a).has_value()},
          {"local_permutation_field", field_summary_json(ball, field)}};
}

json census_json(CayleyBall const& ball, StabilizerCensus const& census) {
  CoxeterSystem const& sys = ball.system();
  WordEngine const& eng = ball.engine();
  json entries = json::array();
  for (auto const& e : census.entries) {
    json moved = json::array();
    for (VertexId v = 0; v < e.restriction.size(); ++v) {
      if (e.restriction[v] != v) {
        moved.push_back({eng.format(ball.element(v)), eng.format(ball.element(e.restriction[v]))});
      }
    }
    auto const field = local_permutation_field(ball, e.extension, census.probe_radius);
    json entry = {{"moved", moved},
                  {"diagram", e.diagram ? json(e.diagram->to_string(sys)) : json(nullptr)},
                  {"local_permutation_field", field_summary_json(ball, field)}};
    entries.push_back(std::move(entry));
  }
  return {{"radius", census.radius},
          {"probe", census.probe_radius},
          {"probe_vertices", census.probe_size},
          {"nodes", census.nodes},
          {"entries", entries},
          {"count", census.entries.size()},
          {"truncated", census.truncated},
          {"diagram_count", census.diagram_entries()}};
}

json suite_json(SuiteReport const& report) {
  json checks = json::array();
  json violations = json::array();
  for (auto const& c : report.checks) {
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    if (c.status == CheckStatus::kFail) {
      violations.push_back({{"name", c.name}, {"detail", c.detail}});
    }
  }
  json out = {{"radius", report.radius},
              {"probe", report.probe},
              {"flexible", report.flexible},
              {"verdict", report.verdict},
              {"checks", checks},
              {"violations", violations},
              {"exit_code", report.exit_code()}};
  if (report.flexible) {
    out["witness"] = report.witness;
  }
  return out;
}

}  // namespace coxaut::report
