#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coxaut {

using GeneratorId = std::uint8_t;
using Word = std::vector<GeneratorId>;
using Order = std::uint32_t;

inline constexpr Order kInfinity = std::numeric_limits<Order>::max();
inline constexpr std::size_t kMaxGenerators = 12;

struct Relation {
  GeneratorId s;
  GeneratorId t;
  Order m;
};

// A Coxeter system (W, S): generator names in declaration order plus the
// symmetric order matrix. Distinct pairs that were never given a finite order
// are free (order infinity). The diagonal is 1 and never stored explicitly.
class CoxeterSystem {
 public:
  CoxeterSystem(std::vector<std::string> names, std::vector<Relation> relations);

  std::size_t rank() const { return names_.size(); }
  std::string const& name(GeneratorId s) const { return names_.at(s); }
  std::vector<std::string> const& names() const { return names_; }

  std::optional<GeneratorId> find(std::string_view name) const;

  Order order(GeneratorId s, GeneratorId t) const {
    return s == t ? 1 : orders_[s * rank() + t];
  }
  bool finite(GeneratorId s, GeneratorId t) const {
    return order(s, t) != kInfinity;
  }

  // Largest finite off-diagonal order, or 0 if every pair is free.
  Order max_finite_order() const;

  // Finite relations with s < t, sorted.
  std::vector<Relation> relations() const;

  friend bool operator==(CoxeterSystem const&, CoxeterSystem const&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Order> orders_;
};

// Parses the line-oriented diagram format:
//
//   # comment
//   gens s t u
//   pair t u 2
//
// Throws ParseError on malformed input.
CoxeterSystem parse_system(std::string_view text);
CoxeterSystem load_system(std::string const& path);

// A label-preserving permutation of the generators, stored as its image
// sequence.
class DiagramAutomorphism {
 public:
  DiagramAutomorphism() = default;
  explicit DiagramAutomorphism(std::vector<GeneratorId> image);

  static DiagramAutomorphism identity(std::size_t rank);

  GeneratorId operator()(GeneratorId s) const { return image_[s]; }
  Word apply(Word const& w) const;

  std::vector<GeneratorId> const& image() const { return image_; }
  std::size_t size() const { return image_.size(); }
  bool is_identity() const;

  // (a * b)(s) = a(b(s))
  DiagramAutomorphism operator*(DiagramAutomorphism const& other) const;
  DiagramAutomorphism inverse() const;

  bool preserves_orders(CoxeterSystem const& sys) const;

  // Disjoint-cycle notation over generator names, "()" for the identity.
  std::string to_string(CoxeterSystem const& sys) const;

  friend auto operator<=>(DiagramAutomorphism const&,
                          DiagramAutomorphism const&) = default;

 private:
  std::vector<GeneratorId> image_;
};

// All label-preserving automorphisms of the defining diagram, identity first,
// in lexicographic order of image sequence.
std::vector<DiagramAutomorphism> enumerate_diagram_automorphisms(
    CoxeterSystem const& sys);

struct FlexibilityWitness {
  GeneratorId pivot;
  DiagramAutomorphism phi;

  // phi nontrivial, label-preserving, fixes pivot and every finite neighbour.
  bool valid_for(CoxeterSystem const& sys) const;
};

// The witness with the smallest pivot, then the lexicographically smallest
// automorphism; nullopt when the diagram is rigid.
std::optional<FlexibilityWitness> is_flexible(CoxeterSystem const& sys);

}  // namespace coxaut
