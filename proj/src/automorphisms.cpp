#include "coxaut/automorphisms.hpp"

#include <algorithm>

namespace coxaut {

Element act(WordEngine const& engine, FactoredAutomorphism const& f, Element const& x) {
  return engine.product(f.w, engine.apply(f.d, x));
}

FactoredAutomorphism compose_factored(WordEngine const& engine,
                                      FactoredAutomorphism const& f,
                                      FactoredAutomorphism const& g) {
  return {engine.product(f.w, engine.apply(f.d, g.w)), f.d * g.d};
}

FactoredAutomorphism inverse_factored(WordEngine const& engine,
                                      FactoredAutomorphism const& f) {
  DiagramAutomorphism const dinv = f.d.inverse();
  return {engine.apply(dinv, engine.inverse(f.w)), dinv};
}

namespace {

BallAutomorphism map_vertices(CayleyBall const& ball, int interior,
                              auto&& image_of) {
  BallAutomorphism a;
  a.interior_radius = interior;
  a.vmap.resize(ball.size());
  for (VertexId v = 0; v < ball.size(); ++v) {
    Element img = image_of(ball.element(v));
    a.vmap[v] = ball.find(img).value_or(kNoVertex);
  }
  return a;
}

}  // namespace

BallAutomorphism left_mult(CayleyBall const& ball, Element const& w) {
  int const len = static_cast<int>(w.length());
  if (len > ball.radius()) {
    throw InvalidArgument("left multiplication by an element longer than the "
                          "ball radius has an empty interior");
  }
  WordEngine const& eng = ball.engine();
  return map_vertices(ball, ball.radius() - len,
                      [&](Element const& x) { return eng.product(w, x); });
}

BallAutomorphism diagram_aut(CayleyBall const& ball, DiagramAutomorphism const& d) {
  if (!d.preserves_orders(ball.system())) {
    throw InvalidArgument("permutation does not preserve the Coxeter orders");
  }
  WordEngine const& eng = ball.engine();
  return map_vertices(ball, ball.radius(),
                      [&](Element const& x) { return eng.apply(d, x); });
}

BallAutomorphism factored_aut(CayleyBall const& ball, FactoredAutomorphism const& f) {
  if (!f.d.preserves_orders(ball.system())) {
    throw InvalidArgument("permutation does not preserve the Coxeter orders");
  }
  int const len = static_cast<int>(f.w.length());
  if (len > ball.radius()) {
    throw InvalidArgument("factored automorphism moves the identity out of the ball");
  }
  WordEngine const& eng = ball.engine();
  return map_vertices(ball, ball.radius() - len,
                      [&](Element const& x) { return act(eng, f, x); });
}

Word ExoticRule::apply(Word const& w) const {
  GeneratorId const s = witness.pivot;
  Word out = w;
  if (occurrence == 0) {
    auto first = std::find(out.begin(), out.end(), s);
    for (auto it = out.begin(); it != first; ++it) {
      *it = witness.phi(*it);
    }
    return out;
  }
  int seen = 0;
  std::size_t i = 0;
  for (; i < out.size(); ++i) {
    if (out[i] == s && ++seen == occurrence) {
      break;
    }
  }
  if (seen < occurrence) {
    return out;
  }
  for (++i; i < out.size(); ++i) {
    out[i] = witness.phi(out[i]);
  }
  return out;
}

BallAutomorphism exotic_aut(CayleyBall const& ball, ExoticRule const& rule) {
  if (!rule.witness.valid_for(ball.system())) {
    throw InvalidArgument("flexibility witness is not valid for this system");
  }
  if (rule.occurrence < 0) {
    throw InvalidArgument("occurrence index must be non-negative");
  }
  WordEngine const& eng = ball.engine();
  return map_vertices(ball, ball.radius(),
                      [&](Element const& x) { return eng.reduce(rule.apply(x.word)); });
}

BallAutomorphism psi_phi(CayleyBall const& ball, FlexibilityWitness const& witness) {
  return exotic_aut(ball, ExoticRule{witness, 0});
}

BallAutomorphism psi_n(CayleyBall const& ball, FlexibilityWitness const& witness, int n) {
  if (n < 1) {
    throw InvalidArgument("family index must be at least 1");
  }
  return exotic_aut(ball, ExoticRule{witness, n});
}

VerificationReport verify_ball_automorphism(CayleyBall const& ball,
                                            BallAutomorphism const& a) {
  VerificationReport rep;
  if (a.vmap.size() != ball.size()) {
    rep.violations.push_back({"size", kNoVertex, kNoVertex,
                              "vertex map has " + std::to_string(a.vmap.size())
                                  + " entries for " + std::to_string(ball.size())
                                  + " vertices"});
    return rep;
  }
  auto interior = [&](VertexId v) { return ball.word_length(v) <= a.interior_radius; };

  std::vector<VertexId> inverse(ball.size(), kNoVertex);
  bool total = true;
  bool injective = true;
  for (VertexId v = 0; v < ball.size(); ++v) {
    VertexId img = a.vmap[v];
    if (img == kNoVertex) {
      total = false;
      if (interior(v)) {
        rep.violations.push_back({"unmapped", v, kNoVertex,
                                  "interior vertex has no image in the ball"});
      }
      continue;
    }
    if (img >= ball.size()) {
      rep.violations.push_back({"range", v, img, "image id out of range"});
      injective = false;
      continue;
    }
    if (inverse[img] != kNoVertex) {
      injective = false;
      rep.violations.push_back({"not-injective", inverse[img], v,
                                "two vertices share image " + std::to_string(img)});
      continue;
    }
    inverse[img] = v;
  }
  rep.bijective = total && injective;

  for (VertexId u = 0; u < ball.size(); ++u) {
    if (!interior(u) || a.vmap[u] == kNoVertex || a.vmap[u] >= ball.size()) {
      continue;
    }
    ++rep.interior_vertices;
    VertexId const iu = a.vmap[u];
    for (std::size_t s = 0; s < ball.rank(); ++s) {
      VertexId v = ball.neighbor(u, static_cast<GeneratorId>(s));
      if (v == kNoVertex || v < u || !interior(v) || a.vmap[v] == kNoVertex) {
        continue;
      }
      ++rep.checked_edges;
      if (!ball.edge_label(iu, a.vmap[v])) {
        rep.violations.push_back({"edge-lost", u, v, "image is not an edge"});
      }
    }
    for (std::size_t s = 0; s < ball.rank(); ++s) {
      VertexId y = ball.neighbor(iu, static_cast<GeneratorId>(s));
      if (y == kNoVertex) {
        continue;
      }
      VertexId x = inverse[y];
      if (x != kNoVertex && x > u && interior(x) && !ball.edge_label(u, x)) {
        rep.violations.push_back({"edge-created", u, x,
                                  "non-adjacent vertices map to an edge"});
      }
    }
  }
  return rep;
}

std::optional<DiagramAutomorphism> LocalPermutationField::constant_value() const {
  if (!constant || at.empty()) {
    return std::nullopt;
  }
  return at.begin()->second.as_permutation();
}

LocalPermutationField local_permutation_field(CayleyBall const& ball,
                                              BallAutomorphism const& a,
                                              int max_length) {
  LocalPermutationField field;
  int limit = a.interior_radius - 1;
  if (max_length >= 0) {
    limit = std::min(limit, max_length);
  }
  for (VertexId v = 0; v < ball.size(); ++v) {
    if (ball.word_length(v) > limit) {
      break;
    }
    VertexId img = a.vmap[v];
    if (img == kNoVertex || ball.degree(v) != ball.rank()
        || ball.degree(img) != ball.rank()) {
      continue;
    }
    auto perm = ball.local_permutation(a.vmap, v);
    if (!field.at.empty() && !(field.at.begin()->second == perm)) {
      field.constant = false;
    }
    field.at.emplace(v, std::move(perm));
  }
  return field;
}

std::vector<CouplingViolation> coupling_violations(CayleyBall const& ball,
                                                   LocalPermutationField const& field) {
  CoxeterSystem const& sys = ball.system();
  std::vector<CouplingViolation> out;
  for (auto const& [w, pw] : field.at) {
    auto const pi_w = pw.as_permutation();
    for (std::size_t si = 0; si < sys.rank(); ++si) {
      auto const s = static_cast<GeneratorId>(si);
      VertexId ws = ball.neighbor(w, s);
      if (ws == kNoVertex || ws < w) {
        continue;
      }
      auto it = field.at.find(ws);
      if (it == field.at.end() || !pi_w) {
        continue;
      }
      auto const pi_ws = it->second.as_permutation();
      if (!pi_ws) {
        continue;
      }
      DiagramAutomorphism const rel = pi_ws->inverse() * *pi_w;
      bool ok = rel(s) == s;
      for (std::size_t ti = 0; ti < sys.rank() && ok; ++ti) {
        auto const t = static_cast<GeneratorId>(ti);
        if (t != s && sys.finite(s, t)) {
          ok = rel(t) == t;
        }
      }
      if (!ok) {
        out.push_back({w, s});
      }
    }
  }
  return out;
}

std::optional<FactoredAutomorphism> decompose(CayleyBall const& ball,
                                              BallAutomorphism const& a) {
  CoxeterSystem const& sys = ball.system();
  WordEngine const& eng = ball.engine();
  if (a.vmap.empty() || a.vmap[0] == kNoVertex) {
    return std::nullopt;
  }
  DiagramAutomorphism d = DiagramAutomorphism::identity(sys.rank());
  if (ball.degree(0) == sys.rank() && ball.degree(a.vmap[0]) == sys.rank()) {
    auto perm = ball.local_permutation(a.vmap, 0).as_permutation();
    if (!perm) {
      return std::nullopt;
    }
    d = *perm;
  } else if (ball.radius() > 0 && a.interior_radius > 0) {
    // The identity star is not fully visible; nothing to compare against.
    return std::nullopt;
  }
  if (!d.preserves_orders(sys)) {
    throw InvalidArgument("local permutation at the identity is not a diagram "
                          "automorphism");
  }
  FactoredAutomorphism f{ball.element(a.vmap[0]), d};
  for (VertexId x = 0; x < ball.size(); ++x) {
    if (ball.word_length(x) > a.interior_radius) {
      break;
    }
    auto expected = ball.find(act(eng, f, ball.element(x)));
    if (!expected || *expected != a.vmap[x]) {
      return std::nullopt;
    }
  }
  return f;
}

WellDefinedness check_rule_on_m_class(WordEngine const& engine, ExoticRule const& rule,
                                      Element const& x) {
  WellDefinedness out;
  std::optional<Element> first;
  for (Word const& w : engine.m_class(x.word)) {
    Word img = rule.apply(w);
    ++out.words_checked;
    if (!engine.is_reduced(img)) {
      out.reduced = false;
    }
    Element e = engine.reduce(img);
    if (!first) {
      first = std::move(e);
    } else if (*first != e) {
      out.consistent = false;
    }
  }
  return out;
}

PsiFamilyReport psi_family_distinctness(CayleyBall const& ball,
                                        FlexibilityWitness const& witness,
                                        int n_max) {
  CoxeterSystem const& sys = ball.system();
  WordEngine const& eng = ball.engine();
  if (!witness.valid_for(sys)) {
    throw InvalidArgument("flexibility witness is not valid for this system");
  }
  if (n_max < 1) {
    throw InvalidArgument("n_max must be at least 1");
  }
  if (ball.radius() < 2 * n_max) {
    throw InvalidArgument("ball radius " + std::to_string(ball.radius())
                          + " is too small for n_max " + std::to_string(n_max));
  }
  PsiFamilyReport rep;
  rep.n_max = n_max;
  for (std::size_t t = 0; t < sys.rank(); ++t) {
    if (witness.phi(static_cast<GeneratorId>(t)) != t) {
      rep.moved = static_cast<GeneratorId>(t);
      break;
    }
  }
  std::vector<Element> powers;
  Word w;
  for (int k = 0; k <= n_max; ++k) {
    powers.push_back(eng.reduce(w));
    w.push_back(witness.pivot);
    w.push_back(rep.moved);
  }
  for (int n = 1; n <= n_max; ++n) {
    ExoticRule rule{witness, n};
    rep.identity_fixed = rep.identity_fixed && rule.apply({}).empty();
    std::vector<bool> row;
    for (auto const& p : powers) {
      row.push_back(eng.reduce(rule.apply(p.word)) == p);
    }
    rep.fixed.push_back(std::move(row));
  }
  for (int a = 0; a < n_max; ++a) {
    for (int b = a + 1; b < n_max; ++b) {
      if (rep.fixed[a] == rep.fixed[b]) {
        rep.pairwise_distinct = false;
        rep.equal_pairs.emplace_back(a + 1, b + 1);
      }
    }
  }
  return rep;
}

int default_probe_radius(CoxeterSystem const& sys, int radius) {
  return std::max(0, radius - static_cast<int>(sys.max_finite_order()));
}

}  // namespace coxaut
