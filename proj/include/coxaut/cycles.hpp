#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "coxaut/cayley_ball.hpp"

namespace coxaut {

// An embedded cycle in canonical form: the smallest vertex first, and of its
// two cycle neighbours the smaller one second. labels[i] labels the edge from
// vertices[i] to vertices[i + 1] (cyclically).
struct EmbeddedCycle {
  std::vector<VertexId> vertices;
  std::vector<GeneratorId> labels;

  std::size_t length() const { return vertices.size(); }

  friend auto operator<=>(EmbeddedCycle const&, EmbeddedCycle const&) = default;
};

// Canonicalises a closed walk given as distinct vertices in cyclic order.
EmbeddedCycle make_cycle(CayleyBall const& ball, std::vector<VertexId> vertices);

struct OppositePairWitness {
  VertexId from;
  VertexId to;
  int distance;            // ball distance between the pair
  std::uint64_t paths;     // simple paths of half-length between them
};

// True when every path of at most `length` edges from a source vertex to a
// ball vertex stays inside the ball: each vertex within length - 2 steps of a
// source has its full star. Sources within radius - length always qualify, and
// so does any ball that already contains a whole finite group.
bool paths_stay_inside(CayleyBall const& ball, std::vector<VertexId> const& sources,
                       int length);

struct EssentialityReport {
  EmbeddedCycle cycle;
  bool essential = false;
  // No path of length <= n from a cycle vertex can leave the ball, so the
  // path counts and distances below are those of the full Cayley graph.
  bool certified = false;
  std::optional<OppositePairWitness> witness;
};

std::vector<EmbeddedCycle> enumerate_embedded_cycles(CayleyBall const& ball,
                                                     int max_len);

EssentialityReport is_essential(CayleyBall const& ball, EmbeddedCycle const& c);

bool check_alternation(EmbeddedCycle const& c);

// The relator (s, t), s < t, a cycle traces, if it alternates s and t with
// length 2 m_st.
std::optional<std::pair<GeneratorId, GeneratorId>> relator_of(
    CoxeterSystem const& sys, EmbeddedCycle const& c);

// The cosets w<s,t> of finite dihedral subgroups that fit in the ball, as
// cycles, sorted and deduplicated.
std::vector<EmbeddedCycle> relator_cycles(CayleyBall const& ball);

// Default search length: twice the largest finite order (at least 4).
int default_cycle_length(CoxeterSystem const& sys);

struct CharacterizationReport {
  int max_len = 0;
  std::size_t cycles = 0;
  std::size_t certified = 0;
  std::size_t certified_essential = 0;
  std::size_t certified_relator = 0;
  std::size_t odd_cycles = 0;
  // Certified relator cycles that failed the essentiality test.
  std::vector<EmbeddedCycle> relator_not_essential;
  // Certified essential cycles that are not relator cycles.
  std::vector<EmbeddedCycle> essential_not_relator;
  // Certified essential cycles whose labels do not alternate.
  std::vector<EmbeddedCycle> non_alternating;

  bool pass() const {
    return odd_cycles == 0 && relator_not_essential.empty()
           && essential_not_relator.empty() && non_alternating.empty();
  }
};

// Over all certified embedded cycles up to max_len (default_cycle_length when
// max_len <= 0): essential ones must be exactly the relator cycles.
CharacterizationReport verify_essential_characterization(CayleyBall const& ball,
                                                         int max_len = 0);

}  // namespace coxaut
