#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxaut/cayley_ball.hpp"

namespace coxaut {

// A vertex map on a ball. Entries may be kNoVertex where the image leaves the
// ball; adjacency claims are only made for vertices of word length at most
// interior_radius.
struct BallAutomorphism {
  std::vector<VertexId> vmap;
  int interior_radius = 0;

  VertexId operator()(VertexId v) const { return vmap[v]; }
};

// x -> w * d(x), with d acting letterwise.
struct FactoredAutomorphism {
  Element w;
  DiagramAutomorphism d;

  friend auto operator<=>(FactoredAutomorphism const&,
                          FactoredAutomorphism const&) = default;
};

Element act(WordEngine const& engine, FactoredAutomorphism const& f, Element const& x);

// (w1, d1)(w2, d2) = (w1 d1(w2), d1 d2); acts as g then f.
FactoredAutomorphism compose_factored(WordEngine const& engine,
                                      FactoredAutomorphism const& f,
                                      FactoredAutomorphism const& g);
FactoredAutomorphism inverse_factored(WordEngine const& engine,
                                      FactoredAutomorphism const& f);

BallAutomorphism left_mult(CayleyBall const& ball, Element const& w);
BallAutomorphism diagram_aut(CayleyBall const& ball, DiagramAutomorphism const& d);
BallAutomorphism factored_aut(CayleyBall const& ball, FactoredAutomorphism const& f);

// The exotic maps built from a flexibility witness (pivot s, phi). With
// occurrence == 0 this is the map that applies phi to the prefix before the
// first s and keeps the rest. With occurrence == n >= 1 the word is kept
// through its n-th s and phi is applied to everything after it; words with
// fewer than n copies of s are fixed.
struct ExoticRule {
  FlexibilityWitness witness;
  int occurrence = 0;

  // Applies the rule to one word, without reducing.
  Word apply(Word const& w) const;
};

BallAutomorphism psi_phi(CayleyBall const& ball, FlexibilityWitness const& witness);
BallAutomorphism psi_n(CayleyBall const& ball, FlexibilityWitness const& witness, int n);
BallAutomorphism exotic_aut(CayleyBall const& ball, ExoticRule const& rule);

struct Violation {
  std::string kind;
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  std::string detail;
};

struct VerificationReport {
  bool bijective = false;
  std::size_t interior_vertices = 0;
  std::size_t checked_edges = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Injectivity on the mapped vertices, totality on the interior, surjectivity
// when total, and adjacency preserved in both directions between interior
// vertices.
VerificationReport verify_ball_automorphism(CayleyBall const& ball,
                                            BallAutomorphism const& a);

struct LocalPermutationField {
  std::map<VertexId, LocalPermutation> at;
  bool constant = true;

  // The common permutation when the field is constant and non-empty.
  std::optional<DiagramAutomorphism> constant_value() const;
};

// Local permutations at every vertex whose whole star, and the image of that
// star, lie in the ball, restricted to word length < interior_radius.
LocalPermutationField local_permutation_field(CayleyBall const& ball,
                                              BallAutomorphism const& a,
                                              int max_length = -1);

// For every edge {w, ws} with both local permutations in the field, the
// permutation pi_ws^-1 pi_w must fix s and every t with m_st finite.
struct CouplingViolation {
  VertexId w;
  GeneratorId s;
};
std::vector<CouplingViolation> coupling_violations(CayleyBall const& ball,
                                                   LocalPermutationField const& field);

// (w, d) with w = a(identity) and d = local permutation at the identity, when
// x -> w d(x) agrees with a on every interior vertex. Throws InvalidArgument if
// the local permutation at the identity is not label-preserving.
std::optional<FactoredAutomorphism> decompose(CayleyBall const& ball,
                                              BallAutomorphism const& a);

// Rule evaluated on every word of the element's m-class; true when all
// results reduce to the same element. Also checks the images are reduced.
struct WellDefinedness {
  bool consistent = true;
  bool reduced = true;
  std::size_t words_checked = 0;
};
WellDefinedness check_rule_on_m_class(WordEngine const& engine, ExoticRule const& rule,
                                      Element const& x);

struct PsiFamilyReport {
  GeneratorId moved = 0;                // t with phi(t) != t
  int n_max = 0;
  // fixed[n - 1][k] : does psi_n fix (s t)^k
  std::vector<std::vector<bool>> fixed;
  bool identity_fixed = true;
  bool pairwise_distinct = true;
  std::vector<std::pair<int, int>> equal_pairs;
};

PsiFamilyReport psi_family_distinctness(CayleyBall const& ball,
                                        FlexibilityWitness const& witness,
                                        int n_max);

// --- identity stabiliser -----------------------------------------------------

struct CensusEntry {
  // Images of the vertices of the probe ball (ids 0 .. probe_size - 1).
  std::vector<VertexId> restriction;
  // One full ball automorphism extending the restriction.
  BallAutomorphism extension;
  // Diagram automorphism whose restriction coincides, if any.
  std::optional<DiagramAutomorphism> diagram;
};

struct StabilizerCensus {
  int radius = 0;
  int probe_radius = 0;
  std::size_t probe_size = 0;
  std::size_t nodes = 0;
  // Set when the search stopped at max_entries; the stabiliser restricted to
  // the probe ball has at least that many elements.
  bool truncated = false;
  std::vector<CensusEntry> entries;

  std::size_t diagram_entries() const;
};

// Backtracking enumeration of ball automorphisms fixing the identity, one
// entry per distinct restriction to the probe ball. Stops after max_entries
// entries when max_entries > 0. Throws GuardExceeded past the engine's
// max_search_nodes.
StabilizerCensus identity_stabilizer_census(CayleyBall const& ball, int probe_radius,
                                            std::size_t max_entries = 0);

// radius - max finite order, clamped at 0.
int default_probe_radius(CoxeterSystem const& sys, int radius);

}  // namespace coxaut
