#pragma once

// Test-only oracles. Nothing here uses the word engine's rewriting: group
// elements are concrete matrices or permutations and graphs are built by
// brute-force breadth-first search over them.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <numbers>
#include <set>
#include <vector>

#include "coxaut/coxeter_system.hpp"

namespace oracle {

using coxaut::CoxeterSystem;
using coxaut::GeneratorId;
using coxaut::Word;

// Tits' geometric representation: s_i(v) = v - 2 B(e_i, v) e_i with
// B(e_i, e_j) = -cos(pi / m_ij), and -1 for m_ij = infinity. Faithful, so two
// words are equal in W iff their matrices coincide.
class ReflectionModel {
 public:
  using Matrix = std::vector<double>;  // row-major n x n

  explicit ReflectionModel(CoxeterSystem const& sys) : n_(sys.rank()) {
    std::vector<double> B(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        auto m = sys.order(static_cast<GeneratorId>(i), static_cast<GeneratorId>(j));
        B[i * n_ + j] = (m == coxaut::kInfinity) ? -1.0 : -std::cos(std::numbers::pi / m);
      }
    }
    for (std::size_t i = 0; i < n_; ++i) {
      Matrix r = identity();
      // Column j of s_i is s_i(e_j) = e_j - 2 B_ij e_i.
      for (std::size_t j = 0; j < n_; ++j) {
        r[i * n_ + j] -= 2.0 * B[i * n_ + j];
      }
      gens_.push_back(std::move(r));
    }
  }

  Matrix identity() const {
    Matrix m(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) m[i * n_ + i] = 1.0;
    return m;
  }

  Matrix mul(Matrix const& a, Matrix const& b) const {
    Matrix c(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t j = 0; j < n_; ++j) c[i * n_ + j] += a[i * n_ + k] * b[k * n_ + j];
    return c;
  }

  Matrix eval(Word const& w) const {
    Matrix m = identity();
    for (GeneratorId g : w) m = mul(m, gens_[g]);
    return m;
  }

  Matrix const& gen(std::size_t i) const { return gens_[i]; }
  std::size_t rank() const { return n_; }

  // Rounded key for exact comparison.
  static std::vector<std::int64_t> key(Matrix const& m) {
    std::vector<std::int64_t> k;
    k.reserve(m.size());
    for (double x : m) k.push_back(std::llround(x * 1e6));
    return k;
  }

 private:
  std::size_t n_;
  std::vector<Matrix> gens_;
};

// The ball of radius r in the Cayley graph, built over concrete matrices.
struct OracleBall {
  std::vector<std::vector<std::int64_t>> keys;  // vertex -> element key
  std::vector<int> length;
  std::vector<std::vector<int>> adj;            // adj[v][s] = neighbour or -1
  std::map<std::vector<std::int64_t>, int> index;

  std::size_t size() const { return keys.size(); }
  std::size_t edge_count() const {
    std::size_t e = 0;
    for (auto const& row : adj)
      for (int x : row) e += x >= 0;
    return e / 2;
  }
};

inline OracleBall build_oracle_ball(CoxeterSystem const& sys, int radius) {
  ReflectionModel model(sys);
  OracleBall ball;
  std::vector<ReflectionModel::Matrix> mats{model.identity()};
  ball.keys.push_back(ReflectionModel::key(mats[0]));
  ball.length.push_back(0);
  ball.index[ball.keys[0]] = 0;
  for (std::size_t head = 0; head < mats.size(); ++head) {
    if (ball.length[head] == radius) continue;
    for (std::size_t s = 0; s < model.rank(); ++s) {
      auto m = model.mul(mats[head], model.gen(s));
      auto k = ReflectionModel::key(m);
      if (!ball.index.count(k)) {
        ball.index[k] = static_cast<int>(mats.size());
        mats.push_back(m);
        ball.keys.push_back(k);
        ball.length.push_back(ball.length[head] + 1);
      }
    }
  }
  ball.adj.assign(mats.size(), std::vector<int>(model.rank(), -1));
  for (std::size_t v = 0; v < mats.size(); ++v) {
    for (std::size_t s = 0; s < model.rank(); ++s) {
      auto it = ball.index.find(ReflectionModel::key(model.mul(mats[v], model.gen(s))));
      if (it != ball.index.end()) ball.adj[v][s] = it->second;
    }
  }
  return ball;
}

// Permutation model of A_n = S_{n+1}: generator i is the transposition (i i+1).
class SymmetricModel {
 public:
  using Perm = std::vector<int>;

  explicit SymmetricModel(int points) : points_(points) {}

  Perm identity() const {
    Perm p(points_);
    for (int i = 0; i < points_; ++i) p[i] = i;
    return p;
  }
  // Right action: apply p then the transposition.
  Perm mul_gen(Perm p, int i) const {
    std::swap(p[i], p[i + 1]);
    return p;
  }
  Perm eval(Word const& w) const {
    Perm p = identity();
    for (auto g : w) p = mul_gen(std::move(p), g);
    return p;
  }

  // Full multiplication table by brute-force closure under generators.
  std::map<Perm, int> all_elements_with_length(int gens) const {
    std::map<Perm, int> dist{{identity(), 0}};
    std::deque<Perm> q{identity()};
    while (!q.empty()) {
      Perm p = q.front();
      q.pop_front();
      for (int i = 0; i < gens; ++i) {
        Perm r = mul_gen(p, i);
        if (!dist.count(r)) {
          dist[r] = dist[p] + 1;
          q.push_back(r);
        }
      }
    }
    return dist;
  }

 private:
  int points_;
};

// Number of simple paths with exactly `len` edges, by exhaustive DFS.
inline std::uint64_t brute_paths(OracleBall const& b, int u, int v, int len) {
  std::vector<bool> used(b.size(), false);
  std::uint64_t count = 0;
  auto dfs = [&](auto&& self, int x, int rem) -> void {
    if (rem == 0) {
      count += x == v;
      return;
    }
    used[x] = true;
    for (int y : b.adj[x])
      if (y >= 0 && !used[y]) self(self, y, rem - 1);
    used[x] = false;
  };
  dfs(dfs, u, len);
  return count;
}

// All embedded cycles of length <= max_len, each as its sorted edge set.
inline std::set<std::set<std::pair<int, int>>> brute_cycles(OracleBall const& b, int max_len) {
  std::set<std::set<std::pair<int, int>>> out;
  std::vector<int> path;
  std::vector<bool> used(b.size(), false);
  auto dfs = [&](auto&& self, int start, int x) -> void {
    for (int y : b.adj[x]) {
      if (y < 0) continue;
      if (y == start && path.size() >= 3) {
        std::set<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < path.size(); ++i) {
          int a = path[i], c = path[(i + 1) % path.size()];
          edges.insert({std::min(a, c), std::max(a, c)});
        }
        out.insert(edges);
        continue;
      }
      if (used[y] || static_cast<int>(path.size()) >= max_len) continue;
      used[y] = true;
      path.push_back(y);
      self(self, start, y);
      path.pop_back();
      used[y] = false;
    }
  };
  for (std::size_t s = 0; s < b.size(); ++s) {
    path.assign(1, static_cast<int>(s));
    used[s] = true;
    dfs(dfs, static_cast<int>(s), static_cast<int>(s));
    used[s] = false;
  }
  return out;
}

// Every permutation of {0..n-1} that preserves all orders (no pruning).
inline std::vector<std::vector<GeneratorId>> brute_diagram_automorphisms(CoxeterSystem const& sys) {
  std::vector<GeneratorId> p(sys.rank());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<GeneratorId>(i);
  std::vector<std::vector<GeneratorId>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i)
      for (std::size_t j = 0; j < p.size() && ok; ++j)
        ok = sys.order(static_cast<GeneratorId>(i), static_cast<GeneratorId>(j)) == sys.order(p[i], p[j]);
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Flexibility by scanning every (pivot, permutation) pair.
inline bool brute_flexible(CoxeterSystem const& sys) {
  for (auto const& p : brute_diagram_automorphisms(sys)) {
    bool trivial = true;
    for (std::size_t i = 0; i < p.size(); ++i) trivial = trivial && p[i] == i;
    if (trivial) continue;
    for (std::size_t s = 0; s < p.size(); ++s) {
      bool ok = p[s] == s;
      for (std::size_t t = 0; t < p.size() && ok; ++t)
        if (t != s && sys.finite(static_cast<GeneratorId>(s), static_cast<GeneratorId>(t))) ok = p[t] == t;
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace oracle
