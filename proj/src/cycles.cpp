#include "coxaut/cycles.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace coxaut {

EmbeddedCycle make_cycle(CayleyBall const& ball, std::vector<VertexId> vertices) {
  std::size_t const n = vertices.size();
  if (n < 3) {
    throw InvalidArgument("a cycle needs at least three vertices");
  }
  auto lo = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), lo, vertices.end());
  if (vertices[n - 1] < vertices[1]) {
    std::reverse(vertices.begin() + 1, vertices.end());
  }
  EmbeddedCycle c;
  c.labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto label = ball.edge_label(vertices[i], vertices[(i + 1) % n]);
    if (!label) {
      throw InvalidArgument("cycle vertices are not consecutive neighbours");
    }
    c.labels.push_back(*label);
  }
  c.vertices = std::move(vertices);
  return c;
}

std::vector<EmbeddedCycle> enumerate_embedded_cycles(CayleyBall const& ball,
                                                     int max_len) {
  std::vector<EmbeddedCycle> out;
  if (max_len < 3) {
    return out;
  }
  std::vector<bool> on_path(ball.size(), false);
  std::vector<VertexId> path;

  for (VertexId root = 0; root < ball.size(); ++root) {
    // Paths from root through vertices larger than root; each cycle is found
    // twice (once per direction) and kept when path[1] < path.back().
    auto dfs = [&](auto&& self, VertexId x) -> void {
      for (std::size_t s = 0; s < ball.rank(); ++s) {
        VertexId y = ball.neighbor(x, static_cast<GeneratorId>(s));
        if (y == kNoVertex) {
          continue;
        }
        if (y == root && path.size() >= 3 && path[1] < path.back()) {
          out.push_back(make_cycle(ball, path));
          continue;
        }
        if (y <= root || on_path[y] || static_cast<int>(path.size()) >= max_len) {
          continue;
        }
        on_path[y] = true;
        path.push_back(y);
        self(self, y);
        path.pop_back();
        on_path[y] = false;
      }
    };
    path.assign(1, root);
    on_path[root] = true;
    dfs(dfs, root);
    on_path[root] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool paths_stay_inside(CayleyBall const& ball, std::vector<VertexId> const& sources,
                       int length) {
  // A path of at most `length` edges between ball vertices can only step
  // outside from a vertex with a missing edge at most length - 2 steps in.
  std::vector<int> depth(ball.size(), -1);
  std::deque<VertexId> queue;
  for (VertexId v : sources) {
    if (depth[v] < 0) {
      depth[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    if (depth[x] > length - 2) {
      continue;
    }
    if (ball.degree(x) != ball.rank()) {
      return false;
    }
    for (std::size_t s = 0; s < ball.rank(); ++s) {
      VertexId y = ball.neighbor(x, static_cast<GeneratorId>(s));
      if (y != kNoVertex && depth[y] < 0) {
        depth[y] = depth[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return true;
}

EssentialityReport is_essential(CayleyBall const& ball, EmbeddedCycle const& c) {
  EssentialityReport rep;
  rep.cycle = c;
  std::size_t const len = c.length();
  if (len % 2 != 0) {
    return rep;
  }
  int const n = static_cast<int>(len / 2);
  rep.certified = paths_stay_inside(ball, c.vertices, n);
  rep.essential = true;
  for (int i = 0; i < n; ++i) {
    VertexId a = c.vertices[i];
    VertexId b = c.vertices[i + n];
    int d = ball.distance(a, b);
    std::uint64_t paths = ball.count_paths(a, b, n);
    if (d != n || paths != 2) {
      rep.essential = false;
      rep.witness = OppositePairWitness{a, b, d, paths};
      break;
    }
  }
  return rep;
}

bool check_alternation(EmbeddedCycle const& c) {
  if (c.labels.size() < 2 || c.labels.size() % 2 != 0) {
    return false;
  }
  GeneratorId const a = c.labels[0];
  GeneratorId const b = c.labels[1];
  if (a == b) {
    return false;
  }
  for (std::size_t i = 0; i < c.labels.size(); ++i) {
    if (c.labels[i] != (i % 2 == 0 ? a : b)) {
      return false;
    }
  }
  return true;
}

std::optional<std::pair<GeneratorId, GeneratorId>> relator_of(
    CoxeterSystem const& sys, EmbeddedCycle const& c) {
  if (!check_alternation(c)) {
    return std::nullopt;
  }
  GeneratorId s = std::min(c.labels[0], c.labels[1]);
  GeneratorId t = std::max(c.labels[0], c.labels[1]);
  Order m = sys.order(s, t);
  if (m == kInfinity || c.length() != 2 * static_cast<std::size_t>(m)) {
    return std::nullopt;
  }
  return std::pair{s, t};
}

std::vector<EmbeddedCycle> relator_cycles(CayleyBall const& ball) {
  std::set<EmbeddedCycle> found;
  auto const rels = ball.system().relations();
  for (VertexId w = 0; w < ball.size(); ++w) {
    for (auto const& r : rels) {
      std::vector<VertexId> verts{w};
      VertexId x = w;
      bool inside = true;
      for (std::size_t k = 0; k + 1 < 2 * r.m && inside; ++k) {
        x = ball.neighbor(x, k % 2 == 0 ? r.s : r.t);
        inside = x != kNoVertex;
        verts.push_back(x);
      }
      if (inside) {
        found.insert(make_cycle(ball, std::move(verts)));
      }
    }
  }
  return {found.begin(), found.end()};
}

int default_cycle_length(CoxeterSystem const& sys) {
  return std::max<int>(4, 2 * static_cast<int>(sys.max_finite_order()));
}

CharacterizationReport verify_essential_characterization(CayleyBall const& ball,
                                                         int max_len) {
  CharacterizationReport rep;
  rep.max_len = max_len > 0 ? max_len : default_cycle_length(ball.system());
  auto const cycles = enumerate_embedded_cycles(ball, rep.max_len);
  rep.cycles = cycles.size();

  std::set<EmbeddedCycle> certified_relators;
  for (auto const& c : relator_cycles(ball)) {
    if (is_essential(ball, c).certified) {
      certified_relators.insert(c);
    }
  }
  rep.certified_relator = certified_relators.size();

  std::set<EmbeddedCycle> certified_essential;
  for (auto const& c : cycles) {
    if (c.length() % 2 != 0) {
      ++rep.odd_cycles;
      continue;
    }
    auto const er = is_essential(ball, c);
    if (!er.certified) {
      continue;
    }
    ++rep.certified;
    if (!er.essential) {
      continue;
    }
    certified_essential.insert(c);
    if (!check_alternation(c)) {
      rep.non_alternating.push_back(c);
    }
    if (!certified_relators.contains(c)) {
      rep.essential_not_relator.push_back(c);
    }
  }
  rep.certified_essential = certified_essential.size();
  for (auto const& c : certified_relators) {
    if (static_cast<int>(c.length()) <= rep.max_len && !certified_essential.contains(c)) {
      rep.relator_not_essential.push_back(c);
    }
  }
  return rep;
}

}  // namespace coxaut
