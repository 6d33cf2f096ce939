#include "coxaut/cayley_ball.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace coxaut {

bool LocalPermutation::is_total() const {
  return std::all_of(map.begin(), map.end(), [](auto const& x) { return x.has_value(); });
}

bool LocalPermutation::is_identity() const {
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] && *map[i] != i) {
      return false;
    }
  }
  return true;
}

std::optional<DiagramAutomorphism> LocalPermutation::as_permutation() const {
  if (!is_total()) {
    return std::nullopt;
  }
  std::vector<GeneratorId> img;
  img.reserve(map.size());
  for (auto const& x : map) {
    img.push_back(*x);
  }
  return DiagramAutomorphism(std::move(img));
}

CayleyBall::CayleyBall(std::shared_ptr<WordEngine const> engine, int radius)
    : engine_(std::move(engine)), radius_(radius), rank_(engine_->system().rank()) {}

CayleyBall CayleyBall::build(std::shared_ptr<WordEngine const> engine, int radius) {
  if (radius < 0) {
    throw InvalidArgument("ball radius must be non-negative");
  }
  CayleyBall ball(std::move(engine), radius);
  WordEngine const& eng = *ball.engine_;
  std::size_t const cap = eng.limits().max_ball_vertices;
  std::size_t const k = ball.rank_;

  ball.elements_.push_back(eng.identity());
  ball.index_.emplace(eng.identity(), 0);
  for (std::size_t head = 0; head < ball.elements_.size(); ++head) {
    ball.adj_.resize(ball.elements_.size() * k, kNoVertex);
    for (std::size_t s = 0; s < k; ++s) {
      auto const g = static_cast<GeneratorId>(s);
      Element next = eng.multiply(ball.elements_[head], g);
      if (static_cast<int>(next.length()) > radius) {
        continue;
      }
      auto [it, inserted] = ball.index_.try_emplace(next, 0);
      if (inserted) {
        if (ball.elements_.size() >= cap) {
          throw GuardExceeded("ball exceeded " + std::to_string(cap)
                              + " vertices");
        }
        it->second = static_cast<VertexId>(ball.elements_.size());
        ball.elements_.push_back(std::move(next));
        ball.adj_.resize(ball.elements_.size() * k, kNoVertex);
      }
      ball.adj_[head * k + s] = it->second;
    }
  }
  return ball;
}

std::optional<VertexId> CayleyBall::find(Element const& e) const {
  if (auto it = index_.find(e); it != index_.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::size_t CayleyBall::degree(VertexId v) const {
  std::size_t d = 0;
  for (std::size_t s = 0; s < rank_; ++s) {
    d += adj_[v * rank_ + s] != kNoVertex;
  }
  return d;
}

std::optional<GeneratorId> CayleyBall::edge_label(VertexId u, VertexId v) const {
  for (std::size_t s = 0; s < rank_; ++s) {
    if (adj_[u * rank_ + s] == v) {
      return static_cast<GeneratorId>(s);
    }
  }
  return std::nullopt;
}

std::vector<Edge> CayleyBall::edges() const {
  std::vector<Edge> out;
  for (VertexId u = 0; u < size(); ++u) {
    for (std::size_t s = 0; s < rank_; ++s) {
      VertexId v = adj_[u * rank_ + s];
      if (v != kNoVertex && u < v) {
        out.push_back({u, v, static_cast<GeneratorId>(s)});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t CayleyBall::count_within(int r) const {
  auto it = std::partition_point(elements_.begin(), elements_.end(), [r](Element const& e) {
    return static_cast<int>(e.length()) <= r;
  });
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<int> CayleyBall::distances_from(VertexId u) const {
  std::vector<int> dist(size(), -1);
  std::deque<VertexId> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < rank_; ++s) {
      VertexId y = adj_[x * rank_ + s];
      if (y != kNoVertex && dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

int CayleyBall::distance(VertexId u, VertexId v) const {
  return distances_from(u)[v];
}

std::uint64_t CayleyBall::count_paths(VertexId u, VertexId v, int length) const {
  if (length < 0) {
    return 0;
  }
  if (length == 0) {
    return u == v ? 1 : 0;
  }
  // Distances to the target bound how far a partial path can still wander.
  auto const to_target = distances_from(v);
  std::vector<bool> on_path(size(), false);
  std::uint64_t count = 0;

  auto dfs = [&](auto&& self, VertexId x, int remaining) -> void {
    if (remaining == 0) {
      count += (x == v);
      return;
    }
    if (x == v || to_target[x] < 0 || to_target[x] > remaining) {
      return;
    }
    on_path[x] = true;
    for (std::size_t s = 0; s < rank_; ++s) {
      VertexId y = adj_[x * rank_ + s];
      if (y != kNoVertex && !on_path[y]) {
        self(self, y, remaining - 1);
      }
    }
    on_path[x] = false;
  };
  dfs(dfs, u, length);
  return count;
}

LocalPermutation CayleyBall::local_permutation(std::span<VertexId const> vmap,
                                               VertexId w) const {
  if (vmap.size() != size()) {
    throw InvalidArgument("vertex map size does not match the ball");
  }
  LocalPermutation out;
  out.map.resize(rank_);
  VertexId const image = vmap[w];
  if (image == kNoVertex) {
    throw InvalidArgument("vertex " + std::to_string(w) + " has no image");
  }
  for (std::size_t s = 0; s < rank_; ++s) {
    VertexId nb = adj_[w * rank_ + s];
    if (nb == kNoVertex) {
      continue;
    }
    VertexId nb_image = vmap[nb];
    std::optional<GeneratorId> label;
    if (nb_image != kNoVertex) {
      label = edge_label(image, nb_image);
    }
    if (!label) {
      throw InvalidArgument("edge " + std::to_string(w) + "-" + std::to_string(nb)
                            + " is not mapped to an edge");
    }
    out.map[s] = label;
  }
  return out;
}

}  // namespace coxaut
