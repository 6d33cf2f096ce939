#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "coxaut/coxeter_system.hpp"
#include "coxaut/word_engine.hpp"

namespace testsys {

inline coxaut::CoxeterSystem flex3() { return coxaut::parse_system("gens s t u\npair t u 2\n"); }
inline coxaut::CoxeterSystem c2() { return coxaut::parse_system("gens a\n"); }
inline coxaut::CoxeterSystem a2() { return coxaut::parse_system("gens a b\npair a b 3\n"); }
inline coxaut::CoxeterSystem a3() {
  return coxaut::parse_system("gens a b c\npair a b 3\npair b c 3\npair a c 2\n");
}
inline coxaut::CoxeterSystem b2() { return coxaut::parse_system("gens a b\npair a b 4\n"); }
inline coxaut::CoxeterSystem c2cubed() {
  return coxaut::parse_system("gens a b c\npair a b 2\npair a c 2\npair b c 2\n");
}
inline coxaut::CoxeterSystem affine_a2() {
  return coxaut::parse_system("gens a b c\npair a b 3\npair b c 3\npair a c 3\n");
}
inline coxaut::CoxeterSystem free3() { return coxaut::parse_system("gens a b c\n"); }
inline coxaut::CoxeterSystem pentagon_star() { return coxaut::parse_system("gens s t u\npair t u 5\n"); }
inline coxaut::CoxeterSystem dinf_product() {
  return coxaut::parse_system(
      "gens a1 a2 b1 b2 c1 c2\npair a1 b1 2\npair a1 b2 2\npair a2 b1 2\npair a2 b2 2\n");
}

inline std::shared_ptr<coxaut::WordEngine const> engine(coxaut::CoxeterSystem sys,
                                                        coxaut::Limits limits = {}) {
  return std::make_shared<coxaut::WordEngine const>(std::move(sys), limits);
}

// Random system on n generators; each pair gets an order from {2,3,4,5,6,inf}.
inline coxaut::CoxeterSystem random_system(std::mt19937& rng, std::size_t n) {
  static constexpr coxaut::Order kChoices[] = {2, 3, 4, 5, 6, coxaut::kInfinity};
  std::uniform_int_distribution<int> pick(0, 5);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  std::vector<coxaut::Relation> rels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto m = kChoices[pick(rng)];
      if (m != coxaut::kInfinity) {
        rels.push_back({static_cast<coxaut::GeneratorId>(i), static_cast<coxaut::GeneratorId>(j), m});
      }
    }
  }
  return coxaut::CoxeterSystem(std::move(names), std::move(rels));
}

inline coxaut::Word random_word(std::mt19937& rng, std::size_t rank, std::size_t len) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(rank) - 1);
  coxaut::Word w(len);
  for (auto& g : w) g = static_cast<coxaut::GeneratorId>(pick(rng));
  return w;
}

}  // namespace testsys
