#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coxaut/coxeter_system.hpp"
#include "coxaut/error.hpp"

namespace coxaut {

struct WordHash {
  std::size_t operator()(Word const& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (GeneratorId g : w) {
      h = (h ^ g) * 0x100000001b3ull;
    }
    return h ^ w.size();
  }
};

// A group element, held as the lexicographically least reduced word
// representing it. Two Elements are equal iff they are the same group element.
struct Element {
  Word word;

  std::size_t length() const { return word.size(); }
  bool is_identity() const { return word.empty(); }

  friend auto operator<=>(Element const&, Element const&) = default;
};

struct ElementHash {
  std::size_t operator()(Element const& e) const noexcept {
    return WordHash{}(e.word);
  }
};

// Solves the word problem for one Coxeter system by m-operations and
// deletions of repeated letters. Results of reduction are memoised; the cache
// is guarded by a mutex so one engine can be shared across threads.
class WordEngine {
 public:
  explicit WordEngine(CoxeterSystem sys, Limits limits = {});

  WordEngine(WordEngine const&) = delete;
  WordEngine& operator=(WordEngine const&) = delete;

  CoxeterSystem const& system() const { return sys_; }
  Limits const& limits() const { return limits_; }

  // Replaces the alternating block of length m_st starting at `pos` (which
  // must read s t s ...) by t s t ....
  Word apply_m_operation(Word const& w, std::size_t pos, GeneratorId s,
                         GeneratorId t) const;

  // Every word reachable from w by m-operations, sorted. Requires w reduced.
  std::vector<Word> m_class(Word const& w) const;

  Element reduce(Word const& w) const;
  bool words_equal(Word const& a, Word const& b) const;
  bool is_reduced(Word const& w) const;

  Element multiply(Element const& e, GeneratorId s) const;
  Element product(Element const& a, Element const& b) const;
  Element inverse(Element const& e) const;
  Element identity() const { return {}; }

  // Letterwise image under a diagram automorphism. Reduced words stay reduced
  // so this only has to re-canonicalise.
  Element apply(DiagramAutomorphism const& d, Element const& e) const;

  // Whitespace separated generator names; "e" (or nothing) is the empty word.
  Word parse_word(std::string_view text) const;
  std::string format(Word const& w) const;
  std::string format(Element const& e) const { return format(e.word); }

  std::size_t cache_size() const;

 private:
  // Breadth-first closure under m-operations. `visit` returns false to stop
  // early; the closure is returned in discovery order.
  std::vector<Word> closure(Word const& w,
                            std::function<bool(Word const&)> const& visit) const;
  Word canonical_of_reduced(Word const& w) const;

  CoxeterSystem sys_;
  Limits limits_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<Word, Word, WordHash> cache_;
};

// True iff some adjacent pair of letters coincide.
bool has_adjacent_repeat(Word const& w);

}  // namespace coxaut
