#include "coxaut/suite.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "coxaut/automorphisms.hpp"
#include "coxaut/cayley_ball.hpp"
#include "coxaut/cycles.hpp"

namespace coxaut {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kVacuous: return "vacuous";
    case CheckStatus::kIndeterminate: return "indeterminate";
  }
  return "unknown";
}

bool SuiteReport::failed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](CheckResult const& c) { return c.status == CheckStatus::kFail; });
}

bool SuiteReport::indeterminate() const {
  return std::any_of(checks.begin(), checks.end(), [](CheckResult const& c) {
    return c.status == CheckStatus::kIndeterminate;
  });
}

int SuiteReport::exit_code() const {
  if (failed()) {
    return 1;
  }
  return indeterminate() ? 3 : 0;
}

namespace {

struct Outcome {
  CheckStatus status;
  std::string detail;
};

Outcome pass_or_fail(std::size_t violations, std::size_t checked, std::string const& what) {
  std::ostringstream os;
  os << checked << ' ' << what << " checked, " << violations << " violations";
  if (checked == 0) {
    return {CheckStatus::kVacuous, os.str()};
  }
  return {violations == 0 ? CheckStatus::kPass : CheckStatus::kFail, os.str()};
}

void run_check(SuiteReport& report, std::string name, std::function<Outcome()> const& body) {
  CheckResult r;
  r.name = std::move(name);
  try {
    auto out = body();
    r.status = out.status;
    r.detail = std::move(out.detail);
  } catch (GuardExceeded const& e) {
    r.status = CheckStatus::kIndeterminate;
    r.detail = e.what();
  }
  report.checks.push_back(std::move(r));
}

std::vector<Element> elements_up_to(CayleyBall const& ball, int len) {
  std::vector<Element> out;
  for (VertexId v = 0; v < ball.size() && ball.word_length(v) <= len; ++v) {
    out.push_back(ball.element(v));
  }
  return out;
}

}  // namespace

SuiteReport run_invariant_suite(std::shared_ptr<WordEngine const> engine,
                                SuiteOptions const& options) {
  if (options.radius < 0) {
    throw InvalidArgument("radius must be non-negative");
  }
  CoxeterSystem const& sys = engine->system();
  WordEngine const& eng = *engine;
  SuiteReport report;
  report.radius = options.radius;
  report.probe = options.probe >= 0 ? std::min(options.probe, options.radius)
                                    : default_probe_radius(sys, options.radius);
  auto const witness = is_flexible(sys);
  report.flexible = witness.has_value();
  if (witness) {
    report.witness = "pivot=" + sys.name(witness->pivot) + " phi=" + witness->phi.to_string(sys);
  }
  auto const diagrams = enumerate_diagram_automorphisms(sys);

  std::optional<CayleyBall> ball_storage;
  try {
    ball_storage.emplace(CayleyBall::build(engine, options.radius));
  } catch (GuardExceeded const& e) {
    report.checks.push_back({"ball", CheckStatus::kIndeterminate, e.what()});
    report.verdict = "INCONCLUSIVE";
    return report;
  }
  CayleyBall const& ball = *ball_storage;
  int const R = ball.radius();

  run_check(report, "bipartite", [&] {
    std::size_t bad = 0;
    auto const edges = ball.edges();
    for (auto const& e : edges) {
      bad += std::abs(ball.word_length(e.u) - ball.word_length(e.v)) != 1;
    }
    return pass_or_fail(bad, edges.size(), "edges");
  });

  run_check(report, "full-degree", [&] {
    std::size_t bad = 0;
    std::size_t checked = 0;
    for (VertexId v = 0; v < ball.size() && ball.word_length(v) <= R - 1; ++v) {
      ++checked;
      bad += ball.degree(v) != sys.rank();
    }
    return pass_or_fail(bad, checked, "vertices");
  });

  run_check(report, "distance-equals-length", [&] {
    auto const dist = ball.distances_from(0);
    std::size_t bad = 0;
    for (VertexId v = 0; v < ball.size(); ++v) {
      bad += dist[v] != ball.word_length(v);
    }
    return pass_or_fail(bad, ball.size(), "vertices");
  });

  run_check(report, "essential-iff-relator", [&] {
    auto const rep = verify_essential_characterization(ball);
    std::ostringstream os;
    os << rep.certified << " certified cycles, " << rep.certified_essential
       << " essential, " << rep.certified_relator << " relator; "
       << rep.essential_not_relator.size() << " extra, "
       << rep.relator_not_essential.size() << " missing";
    if (rep.certified == 0 && rep.certified_relator == 0) {
      return Outcome{CheckStatus::kVacuous, os.str()};
    }
    return Outcome{rep.pass() ? CheckStatus::kPass : CheckStatus::kFail, os.str()};
  });

  run_check(report, "essential-alternates", [&] {
    std::size_t bad = 0;
    std::size_t checked = 0;
    for (auto const& c : enumerate_embedded_cycles(ball, default_cycle_length(sys))) {
      auto const er = is_essential(ball, c);
      if (er.certified && er.essential) {
        ++checked;
        bad += !check_alternation(c);
      }
    }
    return pass_or_fail(bad, checked, "certified essential cycles");
  });

  run_check(report, "left-multiplication-field", [&] {
    std::size_t bad = 0;
    std::size_t checked = 0;
    for (auto const& w : elements_up_to(ball, R / 2)) {
      auto const a = left_mult(ball, w);
      auto const field = local_permutation_field(ball, a);
      ++checked;
      bool ok = verify_ball_automorphism(ball, a).ok() && field.constant;
      for (auto const& [v, p] : field.at) {
        ok = ok && p.is_identity();
      }
      bad += !ok;
    }
    return pass_or_fail(bad, checked, "left multiplications");
  });

  run_check(report, "diagram-field", [&] {
    std::size_t bad = 0;
    for (auto const& d : diagrams) {
      auto const a = diagram_aut(ball, d);
      auto const field = local_permutation_field(ball, a);
      bool ok = verify_ball_automorphism(ball, a).ok() && field.constant;
      if (ok && !field.at.empty()) {
        ok = field.constant_value() == d;
      }
      bad += !ok;
    }
    return pass_or_fail(bad, R >= 1 ? diagrams.size() : 0, "diagram automorphisms");
  });

  run_check(report, "semidirect-law", [&] {
    std::vector<FactoredAutomorphism> factors;
    for (auto const& w : elements_up_to(ball, std::min(1, R))) {
      for (auto const& d : diagrams) {
        factors.push_back({w, d});
      }
    }
    std::size_t bad = 0;
    std::size_t checked = 0;
    auto const probe = elements_up_to(ball, std::max(0, R - 2));
    for (auto const& f : factors) {
      for (auto const& g : factors) {
        auto const fg = compose_factored(eng, f, g);
        for (auto const& x : probe) {
          ++checked;
          bad += act(eng, fg, x) != act(eng, f, act(eng, g, x));
        }
      }
      auto const inv = inverse_factored(eng, f);
      auto const id = compose_factored(eng, f, inv);
      bad += !(id.w.is_identity() && id.d.is_identity());
    }
    return pass_or_fail(bad, checked, "compositions");
  });

  if (witness) {
    run_check(report, "psi-phi", [&] {
      auto const a = psi_phi(ball, *witness);
      std::size_t bad = verify_ball_automorphism(ball, a).violations.size();
      bad += a.vmap.empty() || a.vmap[0] != 0;
      std::size_t checked = 0;
      ExoticRule const rule{*witness, 0};
      for (VertexId v = 0; v < ball.size(); ++v) {
        ++checked;
        if (a.vmap[v] == kNoVertex || ball.word_length(a.vmap[v]) != ball.word_length(v)) {
          ++bad;
        }
        auto const wd = check_rule_on_m_class(eng, rule, ball.element(v));
        bad += !(wd.consistent && wd.reduced);
      }
      if (R >= 3) {
        // The label-mixing pair needs the star of s and st in the ball.
        bad += local_permutation_field(ball, a).constant;
        bad += decompose(ball, a).has_value();
      }
      return pass_or_fail(bad, checked, "vertices");
    });

    int const n_max = std::min(options.n_max, R / 2);
    run_check(report, "psi-family", [&] {
      if (n_max < 1) {
        return Outcome{CheckStatus::kVacuous, "radius too small for the family"};
      }
      std::size_t bad = 0;
      for (int n = 1; n <= n_max; ++n) {
        auto const a = psi_n(ball, *witness, n);
        bad += !verify_ball_automorphism(ball, a).ok();
        bad += a.vmap[0] != 0;
      }
      auto const fam = psi_family_distinctness(ball, *witness, n_max);
      bad += !fam.pairwise_distinct || !fam.identity_fixed;
      return pass_or_fail(bad, static_cast<std::size_t>(n_max), "family members");
    });
  }

  std::optional<StabilizerCensus> census;
  std::optional<StabilizerCensus> smaller_census;
  run_check(report, "stabilizer-census", [&] {
    // A rigid diagram allows at most |D| entries; one more is a violation.
    std::size_t const cap = witness ? options.census_cap : diagrams.size() + 1;
    census = identity_stabilizer_census(ball, report.probe, cap);
    std::ostringstream os;
    os << census->entries.size() << (census->truncated ? "+" : "")
       << " identity-fixing restrictions to radius " << report.probe << ", "
       << census->diagram_entries() << " diagram, " << diagrams.size()
       << " diagram automorphisms";
    if (witness) {
      if (R >= 1 && report.probe >= 1) {
        auto const smaller = CayleyBall::build(engine, R - 1);
        smaller_census = identity_stabilizer_census(smaller, report.probe - 1, cap);
        os << "; " << smaller_census->entries.size() << (smaller_census->truncated ? "+" : "")
           << " at radius " << R - 1;
      }
      return Outcome{CheckStatus::kPass, os.str()};
    }
    bool const ok = census->diagram_entries() == census->entries.size()
                    && census->entries.size() <= diagrams.size();
    if (ok && report.probe == 0) {
      // Only the identity vertex is probed; nothing is learned.
      return Outcome{CheckStatus::kVacuous, os.str()};
    }
    return Outcome{ok ? CheckStatus::kPass : CheckStatus::kFail, os.str()};
  });

  run_check(report, "adjacent-coupling", [&] {
    if (!census) {
      return Outcome{CheckStatus::kIndeterminate, "no census available"};
    }
    std::size_t bad = 0;
    std::size_t checked = 0;
    for (auto const& e : census->entries) {
      auto const field = local_permutation_field(ball, e.extension, report.probe);
      checked += field.at.size();
      bad += coupling_violations(ball, field).size();
      if (!witness) {
        bad += !field.constant;
      }
    }
    return pass_or_fail(bad, checked, "local permutations");
  });

  if (!census || report.probe == 0) {
    report.verdict = "INCONCLUSIVE";
  } else if (witness) {
    bool const exotic = census->diagram_entries() < census->entries.size();
    bool const grows = census->truncated
                       || (smaller_census && census->entries.size() > smaller_census->entries.size());
    report.verdict = (exotic && grows) ? "NONDISCRETE-EVIDENCE" : "INCONCLUSIVE";
  } else {
    report.verdict = census->diagram_entries() == census->entries.size()
                             && census->entries.size() <= diagrams.size()
                         ? "DISCRETE-EVIDENCE"
                         : "INCONCLUSIVE";
  }
  return report;
}

}  // namespace coxaut
