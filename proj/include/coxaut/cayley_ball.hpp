#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "coxaut/word_engine.hpp"

namespace coxaut {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct Edge {
  VertexId u;
  VertexId v;
  GeneratorId label;

  friend auto operator<=>(Edge const&, Edge const&) = default;
};

// Label permutation on the edge star of one vertex. Entries are empty for
// labels whose edge leaves the ball.
struct LocalPermutation {
  std::vector<std::optional<GeneratorId>> map;

  bool is_total() const;
  bool is_identity() const;
  // The permutation as a DiagramAutomorphism-shaped image, when total.
  std::optional<DiagramAutomorphism> as_permutation() const;

  friend bool operator==(LocalPermutation const&, LocalPermutation const&) = default;
};

// The radius-r ball of the Cayley graph around the identity. Vertex ids follow
// breadth-first discovery order (identity = 0, generators tried in index
// order), so word length is non-decreasing in the id.
class CayleyBall {
 public:
  static CayleyBall build(std::shared_ptr<WordEngine const> engine, int radius);

  int radius() const { return radius_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t rank() const { return rank_; }

  WordEngine const& engine() const { return *engine_; }
  std::shared_ptr<WordEngine const> const& engine_ptr() const { return engine_; }
  CoxeterSystem const& system() const { return engine_->system(); }

  Element const& element(VertexId v) const { return elements_.at(v); }
  int word_length(VertexId v) const { return static_cast<int>(elements_[v].length()); }
  std::optional<VertexId> find(Element const& e) const;

  // Neighbour across the s-labelled edge, or kNoVertex outside the ball.
  VertexId neighbor(VertexId v, GeneratorId s) const { return adj_[v * rank_ + s]; }
  std::size_t degree(VertexId v) const;
  std::optional<GeneratorId> edge_label(VertexId u, VertexId v) const;

  // Each undirected edge once with u < v, sorted.
  std::vector<Edge> edges() const;

  // Number of vertices with word length <= r.
  std::size_t count_within(int r) const;

  // Breadth-first distances within the ball subgraph; -1 when unreachable.
  std::vector<int> distances_from(VertexId u) const;
  int distance(VertexId u, VertexId v) const;

  // Simple paths (no repeated vertex) with exactly `length` edges.
  std::uint64_t count_paths(VertexId u, VertexId v, int length) const;

  // Labels of the image star of w under a vertex map. Throws InvalidArgument
  // if an edge of w's star is not sent to an edge.
  LocalPermutation local_permutation(std::span<VertexId const> vmap,
                                     VertexId w) const;

 private:
  CayleyBall(std::shared_ptr<WordEngine const> engine, int radius);

  std::shared_ptr<WordEngine const> engine_;
  int radius_;
  std::size_t rank_;
  std::vector<Element> elements_;
  std::vector<VertexId> adj_;
  std::unordered_map<Element, VertexId, ElementHash> index_;
};

}  // namespace coxaut
