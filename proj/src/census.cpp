#include "coxaut/automorphisms.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace coxaut {

std::size_t StabilizerCensus::diagram_entries() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](CensusEntry const& e) { return e.diagram.has_value(); }));
}

namespace {

// Assigns images vertex by vertex in id order. Since the identity is fixed
// and the graph is connected, word length (distance to the identity) is an
// invariant, and each vertex's image must be a neighbour of its parent's
// image.
class StabilizerSearch {
 public:
  StabilizerSearch(CayleyBall const& ball, std::size_t probe_size, std::size_t max_nodes,
                   std::size_t max_entries)
      : ball_(ball),
        n_(ball.size()),
        probe_size_(probe_size),
        max_nodes_(max_nodes),
        max_entries_(max_entries),
        parent_(n_, kNoVertex),
        image_(n_, kNoVertex),
        preimage_(n_, kNoVertex),
        color_(refine_colors(ball)),
        src_color_(color_),
        dst_color_(color_) {
    for (VertexId v = 1; v < n_; ++v) {
      for (std::size_t s = 0; s < ball.rank(); ++s) {
        VertexId u = ball.neighbor(v, static_cast<GeneratorId>(s));
        if (u != kNoVertex && ball.word_length(u) < ball.word_length(v)) {
          parent_[v] = u;
          break;
        }
      }
    }
  }

  std::vector<CensusEntry> run() {
    image_[0] = 0;
    preimage_[0] = 0;
    if (probe_size_ <= 1) {
      if (extend(1)) {
        record();
      }
      return std::move(entries_);
    }
    enumerate(1);
    return std::move(entries_);
  }

  std::size_t nodes() const { return nodes_; }
  bool truncated() const { return truncated_; }

 private:
  // Colour refinement seeded by (word length, degree). Any ball automorphism
  // fixing the identity preserves the stable colouring.
  static std::vector<std::uint32_t> refine_colors(CayleyBall const& ball) {
    std::size_t const n = ball.size();
    std::vector<std::uint32_t> color(n);
    {
      std::map<std::pair<int, std::size_t>, std::uint32_t> ids;
      for (VertexId v = 0; v < n; ++v) {
        auto key = std::pair{ball.word_length(v), ball.degree(v)};
        color[v] = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size())).first->second;
      }
    }
    std::size_t classes = 0;
    while (true) {
      std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
      std::vector<std::uint32_t> next(n);
      for (VertexId v = 0; v < n; ++v) {
        std::vector<std::uint32_t> sig;
        for (std::size_t s = 0; s < ball.rank(); ++s) {
          VertexId u = ball.neighbor(v, static_cast<GeneratorId>(s));
          if (u != kNoVertex) {
            sig.push_back(color[u]);
          }
        }
        std::sort(sig.begin(), sig.end());
        sig.push_back(color[v]);
        next[v] = ids.try_emplace(std::move(sig), static_cast<std::uint32_t>(ids.size())).first->second;
      }
      color = std::move(next);
      if (ids.size() == classes) {
        return color;
      }
      classes = ids.size();
    }
  }

  bool consistent(VertexId v, VertexId c) const {
    if (dst_color_[c] != src_color_[v] || preimage_[c] != kNoVertex) {
      return false;
    }
    for (std::size_t s = 0; s < ball_.rank(); ++s) {
      VertexId u = ball_.neighbor(v, static_cast<GeneratorId>(s));
      if (u != kNoVertex && image_[u] != kNoVertex && !ball_.edge_label(image_[u], c)) {
        return false;
      }
      VertexId y = ball_.neighbor(c, static_cast<GeneratorId>(s));
      if (y != kNoVertex && preimage_[y] != kNoVertex && !ball_.edge_label(preimage_[y], v)) {
        return false;
      }
    }
    return true;
  }

  std::vector<VertexId> candidates(VertexId v) {
    std::vector<VertexId> out;
    VertexId anchor = image_[parent_[v]];
    for (std::size_t s = 0; s < ball_.rank(); ++s) {
      VertexId c = ball_.neighbor(anchor, static_cast<GeneratorId>(s));
      if (c == kNoVertex) {
        continue;
      }
      if (++nodes_ > max_nodes_) {
        throw GuardExceeded("stabiliser search exceeded "
                            + std::to_string(max_nodes_) + " nodes");
      }
      if (consistent(v, c)) {
        out.push_back(c);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void assign(VertexId v, VertexId c) {
    image_[v] = c;
    preimage_[c] = v;
  }

  // Every unassigned neighbour of v must keep at least one candidate among the
  // neighbours of v's image.
  bool forward_check(VertexId v) {
    VertexId const c = image_[v];
    for (std::size_t s = 0; s < ball_.rank(); ++s) {
      VertexId u = ball_.neighbor(v, static_cast<GeneratorId>(s));
      if (u == kNoVertex || image_[u] != kNoVertex) {
        continue;
      }
      bool any = false;
      for (std::size_t r = 0; r < ball_.rank() && !any; ++r) {
        VertexId x = ball_.neighbor(c, static_cast<GeneratorId>(r));
        if (x == kNoVertex) {
          continue;
        }
        if (++nodes_ > max_nodes_) {
          throw GuardExceeded("stabiliser search exceeded "
                              + std::to_string(max_nodes_) + " nodes");
        }
        any = consistent(u, x);
      }
      if (!any) {
        return false;
      }
    }
    return true;
  }
  void unassign(VertexId v) {
    preimage_[image_[v]] = kNoVertex;
    image_[v] = kNoVertex;
  }

  // Individualises every assigned pair (v, image v) with a shared fresh
  // colour and refines the source and target colourings together. Returns
  // false when the colour histograms diverge, in which case no extension of
  // the current assignment exists.
  bool refine_assignment() {
    std::vector<std::uint32_t> src = color_;
    std::vector<std::uint32_t> dst = color_;
    auto const base = static_cast<std::uint32_t>(n_);
    for (VertexId v = 0; v < n_; ++v) {
      if (image_[v] != kNoVertex) {
        src[v] = base + v;
        dst[image_[v]] = base + v;
      }
    }
    std::size_t classes = 0;
    while (true) {
      std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
      auto relabel = [&](std::vector<std::uint32_t> const& col) {
        std::vector<std::uint32_t> next(n_);
        std::vector<std::uint32_t> sig;
        for (VertexId v = 0; v < n_; ++v) {
          sig.clear();
          for (std::size_t s = 0; s < ball_.rank(); ++s) {
            VertexId u = ball_.neighbor(v, static_cast<GeneratorId>(s));
            if (u != kNoVertex) {
              sig.push_back(col[u]);
            }
          }
          std::sort(sig.begin(), sig.end());
          sig.push_back(col[v]);
          next[v] = ids.try_emplace(sig, static_cast<std::uint32_t>(ids.size())).first->second;
        }
        return next;
      };
      src = relabel(src);
      dst = relabel(dst);
      std::vector<std::uint32_t> hs(src);
      std::vector<std::uint32_t> hd(dst);
      std::sort(hs.begin(), hs.end());
      std::sort(hd.begin(), hd.end());
      if (hs != hd) {
        return false;
      }
      if (ids.size() == classes) {
        break;
      }
      classes = ids.size();
    }
    src_color_ = std::move(src);
    dst_color_ = std::move(dst);
    return true;
  }

  // Every assignment of the probe vertices that extends to the whole ball.
  void enumerate(VertexId v) {
    if (truncated_) {
      return;
    }
    if (v == probe_size_) {
      if (refine_assignment() && extend(v)) {
        record();
        for (VertexId x = static_cast<VertexId>(probe_size_); x < n_; ++x) {
          unassign(x);
        }
      }
      src_color_ = color_;
      dst_color_ = color_;
      return;
    }
    for (VertexId c : candidates(v)) {
      if (truncated_) {
        break;
      }
      assign(v, c);
      if (forward_check(v)) {
        enumerate(v + 1);
      }
      unassign(v);
    }
  }

  // First completion of the remaining vertices; leaves it assigned on success.
  bool extend(VertexId v) {
    if (v == n_) {
      return true;
    }
    for (VertexId c : candidates(v)) {
      assign(v, c);
      if (forward_check(v) && extend(v + 1)) {
        return true;
      }
      unassign(v);
    }
    return false;
  }

  void record() {
    CensusEntry e;
    e.restriction.assign(image_.begin(), image_.begin() + static_cast<std::ptrdiff_t>(probe_size_));
    e.extension.vmap = image_;
    e.extension.interior_radius = ball_.radius();
    entries_.push_back(std::move(e));
    truncated_ = max_entries_ > 0 && entries_.size() >= max_entries_;
  }

  CayleyBall const& ball_;
  std::size_t n_;
  std::size_t probe_size_;
  std::size_t max_nodes_;
  std::size_t max_entries_;
  std::size_t nodes_ = 0;
  bool truncated_ = false;
  std::vector<VertexId> parent_;
  std::vector<VertexId> image_;
  std::vector<VertexId> preimage_;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> src_color_;
  std::vector<std::uint32_t> dst_color_;
  std::vector<CensusEntry> entries_;
};

}  // namespace

StabilizerCensus identity_stabilizer_census(CayleyBall const& ball, int probe_radius,
                                            std::size_t max_entries) {
  if (probe_radius < 0 || probe_radius > ball.radius()) {
    throw InvalidArgument("probe radius must lie in [0, radius]");
  }
  StabilizerCensus census;
  census.radius = ball.radius();
  census.probe_radius = probe_radius;
  census.probe_size = ball.count_within(probe_radius);

  StabilizerSearch search(ball, census.probe_size, ball.engine().limits().max_search_nodes,
                          max_entries);
  census.entries = search.run();
  census.nodes = search.nodes();
  census.truncated = search.truncated();

  std::vector<std::pair<std::vector<VertexId>, DiagramAutomorphism>> diagram_restrictions;
  for (auto const& d : enumerate_diagram_automorphisms(ball.system())) {
    auto a = diagram_aut(ball, d);
    a.vmap.resize(census.probe_size);
    diagram_restrictions.emplace_back(std::move(a.vmap), d);
  }
  for (auto& e : census.entries) {
    for (auto const& [restriction, d] : diagram_restrictions) {
      if (restriction == e.restriction) {
        e.diagram = d;
        break;
      }
    }
  }
  std::sort(census.entries.begin(), census.entries.end(),
            [](CensusEntry const& a, CensusEntry const& b) { return a.restriction < b.restriction; });
  return census;
}

}  // namespace coxaut
