#include "coxaut/coxeter_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "coxaut/error.hpp"

namespace coxaut {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
      ++j;
    }
    if (j > i) {
      out.push_back(line.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

std::string at_line(std::size_t lineno) {
  return "line " + std::to_string(lineno) + ": ";
}

}  // namespace

CoxeterSystem::CoxeterSystem(std::vector<std::string> names,
                             std::vector<Relation> relations)
    : names_(std::move(names)) {
  if (names_.empty()) {
    throw InvalidArgument("a Coxeter system needs at least one generator");
  }
  if (names_.size() > kMaxGenerators) {
    throw InvalidArgument("at most " + std::to_string(kMaxGenerators)
                          + " generators are supported, got "
                          + std::to_string(names_.size()));
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) {
        throw InvalidArgument("duplicate generator name '" + names_[i] + "'");
      }
    }
  }
  std::size_t const n = names_.size();
  orders_.assign(n * n, kInfinity);
  for (std::size_t i = 0; i < n; ++i) {
    orders_[i * n + i] = 1;
  }
  for (auto const& r : relations) {
    if (r.s >= n || r.t >= n) {
      throw InvalidArgument("relation refers to an unknown generator");
    }
    if (r.s == r.t) {
      throw InvalidArgument("self-pair for generator '" + names_[r.s] + "'");
    }
    if (r.m < 2) {
      throw InvalidArgument("order of (" + names_[r.s] + " " + names_[r.t]
                            + ") must be at least 2");
    }
    orders_[r.s * n + r.t] = r.m;
    orders_[r.t * n + r.s] = r.m;
  }
}

std::optional<GeneratorId> CoxeterSystem::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      return static_cast<GeneratorId>(i);
    }
  }
  return std::nullopt;
}

Order CoxeterSystem::max_finite_order() const {
  Order best = 0;
  for (auto const& r : relations()) {
    best = std::max(best, r.m);
  }
  return best;
}

std::vector<Relation> CoxeterSystem::relations() const {
  std::vector<Relation> out;
  for (std::size_t s = 0; s < rank(); ++s) {
    for (std::size_t t = s + 1; t < rank(); ++t) {
      Order m = orders_[s * rank() + t];
      if (m != kInfinity) {
        out.push_back({static_cast<GeneratorId>(s), static_cast<GeneratorId>(t), m});
      }
    }
  }
  return out;
}

CoxeterSystem parse_system(std::string_view text) {
  std::vector<std::string> names;
  std::vector<Relation> relations;
  bool have_gens = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;

  auto lookup = [&](std::string_view token, std::size_t line) -> GeneratorId {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == token) {
        return static_cast<GeneratorId>(i);
      }
    }
    throw ParseError(at_line(line) + "unknown generator '" + std::string(token)
                     + "'");
  };

  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = split_ws(line);
    if (tokens.empty()) {
      continue;
    }
    if (!have_gens) {
      if (tokens[0] != "gens") {
        throw ParseError(at_line(lineno) + "expected 'gens' declaration first");
      }
      if (tokens.size() < 2) {
        throw ParseError(at_line(lineno) + "'gens' needs at least one name");
      }
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        std::string name(tokens[i]);
        if (name == "e") {
          throw ParseError(at_line(lineno)
                           + "'e' is reserved for the empty word");
        }
        if (std::find(names.begin(), names.end(), name) != names.end()) {
          throw ParseError(at_line(lineno) + "duplicate generator name '" + name
                           + "'");
        }
        names.push_back(std::move(name));
      }
      if (names.size() > kMaxGenerators) {
        throw ParseError(at_line(lineno) + "at most "
                         + std::to_string(kMaxGenerators)
                         + " generators are supported");
      }
      have_gens = true;
      continue;
    }
    if (tokens[0] == "gens") {
      throw ParseError(at_line(lineno) + "repeated 'gens' declaration");
    }
    if (tokens[0] != "pair") {
      throw ParseError(at_line(lineno) + "unknown directive '"
                       + std::string(tokens[0]) + "'");
    }
    if (tokens.size() != 4) {
      throw ParseError(at_line(lineno) + "expected 'pair <a> <b> <m>'");
    }
    GeneratorId a = lookup(tokens[1], lineno);
    GeneratorId b = lookup(tokens[2], lineno);
    if (a == b) {
      throw ParseError(at_line(lineno) + "self-pair for generator '"
                       + names[a] + "'");
    }
    for (auto const& r : relations) {
      if ((r.s == a && r.t == b) || (r.s == b && r.t == a)) {
        throw ParseError(at_line(lineno) + "pair (" + names[a] + " " + names[b]
                         + ") given twice");
      }
    }
    std::string_view tok = tokens[3];
    if (tok == "inf") {
      // Explicit infinity: same as leaving the pair out, but still counts as
      // a declaration for duplicate detection.
      relations.push_back({a, b, kInfinity});
      continue;
    }
    Order m = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), m);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError(at_line(lineno) + "order '" + std::string(tok)
                       + "' is not an integer or 'inf'");
    }
    if (m < 2) {
      throw ParseError(at_line(lineno) + "order " + std::string(tok)
                       + " is below 2");
    }
    if (m == kInfinity) {
      throw ParseError(at_line(lineno) + "order " + std::string(tok)
                       + " is out of range");
    }
    relations.push_back({a, b, m});
  }
  if (!have_gens) {
    throw ParseError("missing 'gens' declaration");
  }
  std::erase_if(relations, [](Relation const& r) { return r.m == kInfinity; });
  return CoxeterSystem(std::move(names), std::move(relations));
}

CoxeterSystem load_system(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

// --- DiagramAutomorphism ---------------------------------------------------

DiagramAutomorphism::DiagramAutomorphism(std::vector<GeneratorId> image)
    : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (GeneratorId g : image_) {
    if (g >= image_.size() || seen[g]) {
      throw InvalidArgument("diagram automorphism image is not a permutation");
    }
    seen[g] = true;
  }
}

DiagramAutomorphism DiagramAutomorphism::identity(std::size_t rank) {
  std::vector<GeneratorId> img(rank);
  std::iota(img.begin(), img.end(), GeneratorId{0});
  return DiagramAutomorphism(std::move(img));
}

Word DiagramAutomorphism::apply(Word const& w) const {
  Word out(w.size());
  std::transform(w.begin(), w.end(), out.begin(),
                 [this](GeneratorId g) { return image_[g]; });
  return out;
}

bool DiagramAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) {
      return false;
    }
  }
  return true;
}

DiagramAutomorphism DiagramAutomorphism::operator*(
    DiagramAutomorphism const& other) const {
  if (other.size() != size()) {
    throw InvalidArgument("composing diagram automorphisms of different rank");
  }
  std::vector<GeneratorId> img(size());
  for (std::size_t i = 0; i < size(); ++i) {
    img[i] = image_[other.image_[i]];
  }
  return DiagramAutomorphism(std::move(img));
}

DiagramAutomorphism DiagramAutomorphism::inverse() const {
  std::vector<GeneratorId> img(size());
  for (std::size_t i = 0; i < size(); ++i) {
    img[image_[i]] = static_cast<GeneratorId>(i);
  }
  return DiagramAutomorphism(std::move(img));
}

bool DiagramAutomorphism::preserves_orders(CoxeterSystem const& sys) const {
  if (size() != sys.rank()) {
    return false;
  }
  for (std::size_t s = 0; s < size(); ++s) {
    for (std::size_t t = s + 1; t < size(); ++t) {
      auto a = static_cast<GeneratorId>(s);
      auto b = static_cast<GeneratorId>(t);
      if (sys.order(a, b) != sys.order(image_[s], image_[t])) {
        return false;
      }
    }
  }
  return true;
}

std::string DiagramAutomorphism::to_string(CoxeterSystem const& sys) const {
  std::string out;
  std::vector<bool> done(size(), false);
  for (std::size_t i = 0; i < size(); ++i) {
    if (done[i] || image_[i] == i) {
      continue;
    }
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) {
        out += ' ';
      }
      out += sys.name(static_cast<GeneratorId>(j));
      first = false;
      j = image_[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// --- enumeration -------------------------------------------------------------

namespace {

void extend_automorphism(CoxeterSystem const& sys, std::vector<GeneratorId>& img,
                         std::vector<bool>& used,
                         std::vector<DiagramAutomorphism>& out) {
  std::size_t const k = img.size();
  if (k == sys.rank()) {
    out.emplace_back(img);
    return;
  }
  auto const s = static_cast<GeneratorId>(k);
  for (std::size_t c = 0; c < sys.rank(); ++c) {
    if (used[c]) {
      continue;
    }
    auto const cand = static_cast<GeneratorId>(c);
    bool ok = true;
    for (std::size_t t = 0; t < k && ok; ++t) {
      auto const prev = static_cast<GeneratorId>(t);
      ok = sys.order(prev, s) == sys.order(img[t], cand);
    }
    if (!ok) {
      continue;
    }
    used[c] = true;
    img.push_back(cand);
    extend_automorphism(sys, img, used, out);
    img.pop_back();
    used[c] = false;
  }
}

}  // namespace

std::vector<DiagramAutomorphism> enumerate_diagram_automorphisms(
    CoxeterSystem const& sys) {
  std::vector<DiagramAutomorphism> out;
  std::vector<GeneratorId> img;
  std::vector<bool> used(sys.rank(), false);
  extend_automorphism(sys, img, used, out);
  return out;
}

bool FlexibilityWitness::valid_for(CoxeterSystem const& sys) const {
  if (phi.size() != sys.rank() || pivot >= sys.rank()) {
    return false;
  }
  if (phi.is_identity() || !phi.preserves_orders(sys) || phi(pivot) != pivot) {
    return false;
  }
  for (std::size_t t = 0; t < sys.rank(); ++t) {
    auto const g = static_cast<GeneratorId>(t);
    if (sys.finite(pivot, g) && phi(g) != g) {
      return false;
    }
  }
  return true;
}

std::optional<FlexibilityWitness> is_flexible(CoxeterSystem const& sys) {
  auto const auts = enumerate_diagram_automorphisms(sys);
  for (std::size_t s = 0; s < sys.rank(); ++s) {
    for (auto const& phi : auts) {
      FlexibilityWitness w{static_cast<GeneratorId>(s), phi};
      if (w.valid_for(sys)) {
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace coxaut
