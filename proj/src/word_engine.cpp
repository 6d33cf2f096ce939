#include "coxaut/word_engine.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_set>

namespace coxaut {

bool has_adjacent_repeat(Word const& w) {
  return std::adjacent_find(w.begin(), w.end()) != w.end();
}

WordEngine::WordEngine(CoxeterSystem sys, Limits limits)
    : sys_(std::move(sys)), limits_(limits) {}

Word WordEngine::apply_m_operation(Word const& w, std::size_t pos,
                                   GeneratorId s, GeneratorId t) const {
  if (s >= sys_.rank() || t >= sys_.rank() || s == t) {
    throw InvalidArgument("m-operation needs two distinct generators");
  }
  Order const m = sys_.order(s, t);
  if (m == kInfinity) {
    throw InvalidArgument("m-operation on a free pair (" + sys_.name(s) + " "
                          + sys_.name(t) + ")");
  }
  if (pos > w.size() || w.size() - pos < m) {
    throw InvalidArgument("m-operation position out of range");
  }
  Word out = w;
  for (std::size_t k = 0; k < m; ++k) {
    GeneratorId const expect = (k % 2 == 0) ? s : t;
    if (w[pos + k] != expect) {
      throw InvalidArgument("no alternating block " + sys_.name(s) + sys_.name(t)
                            + "... of length " + std::to_string(m)
                            + " at position " + std::to_string(pos));
    }
    out[pos + k] = (k % 2 == 0) ? t : s;
  }
  return out;
}

std::vector<Word> WordEngine::closure(
    Word const& w, std::function<bool(Word const&)> const& visit) const {
  std::vector<Word> order{w};
  std::unordered_set<Word, WordHash> seen{w};
  if (!visit(w)) {
    return order;
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    Word const current = order[head];
    std::size_t const n = current.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      GeneratorId const a = current[i];
      GeneratorId const b = current[i + 1];
      if (a == b) {
        continue;
      }
      Order const m = sys_.order(a, b);
      if (m == kInfinity || i + m > n) {
        continue;
      }
      bool alternates = true;
      for (std::size_t k = 2; k < m && alternates; ++k) {
        alternates = current[i + k] == current[i + k - 2];
      }
      if (!alternates) {
        continue;
      }
      Word next = current;
      for (std::size_t k = 0; k < m; ++k) {
        next[i + k] = (k % 2 == 0) ? b : a;
      }
      if (seen.insert(next).second) {
        if (seen.size() > limits_.max_closure_states) {
          throw GuardExceeded("m-operation closure exceeded "
                              + std::to_string(limits_.max_closure_states)
                              + " states");
        }
        order.push_back(next);
        if (!visit(order.back())) {
          return order;
        }
      }
    }
  }
  return order;
}

Word WordEngine::canonical_of_reduced(Word const& w) const {
  auto const cls = closure(w, [](Word const&) { return true; });
  return *std::min_element(cls.begin(), cls.end());
}

std::vector<Word> WordEngine::m_class(Word const& w) const {
  for (GeneratorId g : w) {
    if (g >= sys_.rank()) {
      throw InvalidArgument("word contains an unknown generator");
    }
  }
  bool repeat = false;
  auto cls = closure(w, [&](Word const& x) {
    repeat = has_adjacent_repeat(x);
    return !repeat;
  });
  if (repeat) {
    throw InvalidArgument("m_class requires a reduced word, got '" + format(w)
                          + "'");
  }
  std::sort(cls.begin(), cls.end());
  return cls;
}

bool WordEngine::is_reduced(Word const& w) const {
  bool repeat = false;
  closure(w, [&](Word const& x) {
    repeat = has_adjacent_repeat(x);
    return !repeat;
  });
  return !repeat;
}

Element WordEngine::multiply(Element const& e, GeneratorId s) const {
  if (s >= sys_.rank()) {
    throw InvalidArgument("unknown generator id " + std::to_string(s));
  }
  Word key = e.word;
  key.push_back(s);
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) {
      return Element{it->second};
    }
  }
  // e.word is reduced, so e*s is shorter iff some reduced expression of e
  // ends in s; dropping that s gives a reduced expression of e*s.
  Word shorter;
  bool found = false;
  closure(e.word, [&](Word const& x) {
    if (!x.empty() && x.back() == s) {
      shorter.assign(x.begin(), x.end() - 1);
      found = true;
    }
    return !found;
  });
  Word result = canonical_of_reduced(found ? shorter : key);
  {
    std::lock_guard lock(cache_mutex_);
    cache_.try_emplace(std::move(key), result);
  }
  return Element{std::move(result)};
}

Element WordEngine::reduce(Word const& w) const {
  Element acc;
  for (GeneratorId g : w) {
    acc = multiply(acc, g);
  }
  return acc;
}

bool WordEngine::words_equal(Word const& a, Word const& b) const {
  return reduce(a) == reduce(b);
}

Element WordEngine::product(Element const& a, Element const& b) const {
  Element acc = a;
  for (GeneratorId g : b.word) {
    acc = multiply(acc, g);
  }
  return acc;
}

Element WordEngine::inverse(Element const& e) const {
  Word rev(e.word.rbegin(), e.word.rend());
  return Element{canonical_of_reduced(rev)};
}

Element WordEngine::apply(DiagramAutomorphism const& d, Element const& e) const {
  if (!d.preserves_orders(sys_)) {
    return reduce(d.apply(e.word));
  }
  return Element{canonical_of_reduced(d.apply(e.word))};
}

Word WordEngine::parse_word(std::string_view text) const {
  Word out;
  std::size_t i = 0;
  bool saw_identity = false;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    if (j == i) {
      break;
    }
    std::string_view tok = text.substr(i, j - i);
    i = j;
    if (tok == "e") {
      saw_identity = true;
      continue;
    }
    auto g = sys_.find(tok);
    if (!g) {
      throw ParseError("unknown generator '" + std::string(tok) + "' in word");
    }
    out.push_back(*g);
  }
  if (saw_identity && !out.empty()) {
    throw ParseError("'e' denotes the empty word and cannot be mixed with letters");
  }
  return out;
}

std::string WordEngine::format(Word const& w) const {
  if (w.empty()) {
    return "e";
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += sys_.name(w[i]);
  }
  return out;
}

std::size_t WordEngine::cache_size() const {
  std::lock_guard lock(cache_mutex_);
  return cache_.size();
}

}  // namespace coxaut
