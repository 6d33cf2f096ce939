// coxaut: command-line front end for Coxeter group Cayley graph automorphisms.
//
// Exit codes: 0 pass, 1 invariant violation, 2 input error, 3 indeterminate
// (a search or size guard was exhausted).

#include <CLI11.hpp>
#include <iostream>
#include <memory>
#include <string>

#include "coxaut/automorphisms.hpp"
#include "coxaut/cayley_ball.hpp"
#include "coxaut/cycles.hpp"
#include "coxaut/report.hpp"
#include "coxaut/suite.hpp"

namespace {

using coxaut::report::json;

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitIndeterminate = 3;

struct RunConfig {
  std::string input;
  std::string format = "text";
  int radius = 5;
  int probe = -1;
  int n = 0;
  int max_len = 0;
  int n_max = 3;
  std::size_t max_entries = 0;
  std::string word;
  coxaut::Limits limits;
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool with_format = true) {
  cmd->add_option("input", cfg.input, "diagram file")->required()->check(CLI::ExistingFile);
  if (with_format) {
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  }
  cmd->add_option("--max-states", cfg.limits.max_closure_states,
                  "m-operation closure state limit")
      ->envname("COXAUT_MAX_STATES")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-vertices", cfg.limits.max_ball_vertices, "ball vertex limit")
      ->envname("COXAUT_MAX_VERTICES")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-nodes", cfg.limits.max_search_nodes, "stabiliser search node limit")
      ->envname("COXAUT_MAX_NODES")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_radius(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--radius", cfg.radius, "ball radius")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

void add_probe(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--probe", cfg.probe,
                  "probe radius (default: radius minus the largest finite order)");
}

std::shared_ptr<coxaut::WordEngine const> load_engine(RunConfig const& cfg) {
  return std::make_shared<coxaut::WordEngine const>(coxaut::load_system(cfg.input),
                                                    cfg.limits);
}

int probe_for(RunConfig const& cfg, coxaut::CoxeterSystem const& sys) {
  return cfg.probe >= 0 ? cfg.probe : coxaut::default_probe_radius(sys, cfg.radius);
}

void emit(RunConfig const& cfg, json const& doc, std::string const& text) {
  if (cfg.format == "json") {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

int cmd_system(RunConfig const& cfg) {
  auto const sys = coxaut::load_system(cfg.input);
  std::string text = "generators";
  for (auto const& n : sys.names()) {
    text += ' ' + n;
  }
  text += '\n';
  for (auto const& r : sys.relations()) {
    text += "pair " + sys.name(r.s) + ' ' + sys.name(r.t) + ' ' + std::to_string(r.m) + '\n';
  }
  emit(cfg, coxaut::report::system_json(sys), text);
  return 0;
}

int cmd_check_flexible(RunConfig const& cfg) {
  auto const sys = coxaut::load_system(cfg.input);
  auto const w = coxaut::is_flexible(sys);
  std::string text = w ? "FLEXIBLE pivot=" + sys.name(w->pivot) + " phi=" + w->phi.to_string(sys)
                       : std::string("NOT FLEXIBLE");
  emit(cfg, coxaut::report::flexibility_json(sys), text + '\n');
  return 0;
}

int cmd_reduce(RunConfig const& cfg) {
  auto const engine = load_engine(cfg);
  auto const word = engine->parse_word(cfg.word);
  auto const doc = coxaut::report::word_json(*engine, word);
  std::string text = doc["canonical"].get<std::string>() + '\n';
  text += "length " + std::to_string(doc["length"].get<std::size_t>()) + '\n';
  text += "m-class size " + std::to_string(doc["m_class_size"].get<std::size_t>()) + '\n';
  emit(cfg, doc, text);
  return 0;
}

int cmd_ball(RunConfig const& cfg) {
  auto const engine = load_engine(cfg);
  auto const ball = coxaut::CayleyBall::build(engine, cfg.radius);
  auto const& sys = ball.system();
  if (cfg.format == "dot") {
    std::cout << "graph cayley {\n";
    for (coxaut::VertexId v = 0; v < ball.size(); ++v) {
      std::cout << "  " << v << " [label=\"" << engine->format(ball.element(v)) << "\"];\n";
    }
    for (auto const& e : ball.edges()) {
      std::cout << "  " << e.u << " -- " << e.v << " [label=\"" << sys.name(e.label) << "\"];\n";
    }
    std::cout << "}\n";
    return 0;
  }
  std::string text = "radius " + std::to_string(ball.radius()) + '\n';
  text += "vertices " + std::to_string(ball.size()) + '\n';
  text += "edges " + std::to_string(ball.edges().size()) + '\n';
  for (coxaut::VertexId v = 0; v < ball.size(); ++v) {
    text += std::to_string(v) + ' ' + engine->format(ball.element(v)) + '\n';
  }
  emit(cfg, coxaut::report::ball_json(ball), text);
  return 0;
}

int cmd_cycles(RunConfig const& cfg) {
  auto const engine = load_engine(cfg);
  auto const ball = coxaut::CayleyBall::build(engine, cfg.radius);
  auto const doc = coxaut::report::cycles_json(ball, cfg.max_len);
  std::string text;
  for (auto const& c : doc["cycles"]) {
    std::string line;
    for (auto const& w : c["words"]) {
      line += (line.empty() ? "(" : ", ") + w.get<std::string>();
    }
    line += ")";
    line += c["essential"].get<bool>() ? " essential" : " non-essential";
    line += c["certified"].get<bool>() ? " certified" : " uncertified";
    if (!c["relator"].is_null()) {
      line += " relator=" + c["relator"][0].get<std::string>() + c["relator"][1].get<std::string>();
    }
    text += line + '\n';
  }
  auto const& ch = doc["characterization"];
  text += std::string("characterization ") + (ch["pass"].get<bool>() ? "PASS" : "FAIL")
          + " certified_essential=" + std::to_string(ch["certified_essential"].get<std::size_t>())
          + " certified_relator=" + std::to_string(ch["certified_relator"].get<std::size_t>())
          + '\n';
  emit(cfg, doc, text);
  return ch["pass"].get<bool>() ? 0 : kExitViolation;
}

int cmd_exotic(RunConfig const& cfg) {
  auto const engine = load_engine(cfg);
  auto const& sys = engine->system();
  auto const witness = coxaut::is_flexible(sys);
  if (!witness) {
    std::cerr << "error: the defining diagram is not flexible; no exotic automorphism\n";
    return kExitInput;
  }
  if (cfg.n < 0) {
    std::cerr << "error: --n must be non-negative\n";
    return kExitInput;
  }
  auto const ball = coxaut::CayleyBall::build(engine, cfg.radius);
  auto const doc = coxaut::report::exotic_json(ball, *witness, cfg.n);
  std::string text;
  for (auto const& pair : doc["map"]) {
    text += pair[0].get<std::string>() + " -> " + pair[1].get<std::string>() + '\n';
  }
  auto const& field = doc["local_permutation_field"];
  text += std::string("verified ") + (doc["verified"].get<bool>() ? "yes" : "no") + '\n';
  text += std::string("label-permuting ") + (field["constant"].get<bool>() ? "yes" : "no") + '\n';
  text += std::string("decomposes ") + (doc["decomposes"].get<bool>() ? "yes" : "no") + '\n';
  emit(cfg, doc, text);
  return doc["verified"].get<bool>() ? 0 : kExitViolation;
}

int cmd_stabilizer(RunConfig const& cfg) {
  auto const engine = load_engine(cfg);
  int const probe = probe_for(cfg, engine->system());
  auto const ball = coxaut::CayleyBall::build(engine, cfg.radius);
  auto const census = coxaut::identity_stabilizer_census(ball, probe, cfg.max_entries);
  auto const doc = coxaut::report::census_json(ball, census);
  std::string text = "radius " + std::to_string(census.radius) + " probe "
                     + std::to_string(census.probe_radius) + '\n';
  text += "entries " + std::to_string(census.entries.size()) + (census.truncated ? "+" : "")
          + " (diagram "
          + std::to_string(census.diagram_entries()) + ")\n";
  for (auto const& e : doc["entries"]) {
    text += e["diagram"].is_null() ? "exotic" : "diagram " + e["diagram"].get<std::string>();
    text += " moves " + std::to_string(e["moved"].size()) + '\n';
  }
  emit(cfg, doc, text);
  return 0;
}

int cmd_verify(RunConfig const& cfg) {
  auto const engine = load_engine(cfg);
  coxaut::SuiteOptions opts;
  opts.radius = cfg.radius;
  opts.probe = cfg.probe;
  opts.n_max = cfg.n_max;
  auto const rep = coxaut::run_invariant_suite(engine, opts);
  std::string text;
  for (auto const& c : rep.checks) {
    text += c.name + ": " + coxaut::to_string(c.status) + " (" + c.detail + ")\n";
  }
  text += "verdict: " + rep.verdict + '\n';
  if (rep.indeterminate() && !rep.failed()) {
    text += "INDETERMINATE\n";
  }
  if (cfg.format == "json") {
    std::cout << coxaut::report::suite_json(rep).dump(2) << '\n';
  } else {
    std::cout << text;
  }
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter group Cayley graph automorphisms"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* system = app.add_subcommand("system", "echo a parsed diagram");
  add_common(system, cfg);

  auto* flex = app.add_subcommand("check-flexible", "decide flexibility of the defining diagram");
  add_common(flex, cfg);

  auto* reduce = app.add_subcommand("reduce", "canonical reduced form of a word");
  add_common(reduce, cfg);
  reduce->add_option("word", cfg.word, "whitespace separated generator names, 'e' for empty")
      ->required();

  auto* ball = app.add_subcommand("ball", "Cayley graph ball");
  add_common(ball, cfg, false);
  ball->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  add_radius(ball, cfg);

  auto* cycles = app.add_subcommand("cycles", "embedded cycles and essentiality");
  add_common(cycles, cfg);
  add_radius(cycles, cfg);
  cycles->add_option("--max-len", cfg.max_len, "longest cycle (default 2 * max finite order)");

  auto* exotic = app.add_subcommand("exotic", "exotic automorphism of a flexible system");
  add_common(exotic, cfg);
  add_radius(exotic, cfg);
  exotic->add_option("--n", cfg.n, "family index; 0 selects the first-pivot map")
      ->capture_default_str();

  auto* stab = app.add_subcommand("stabilizer", "identity stabiliser census");
  add_common(stab, cfg);
  add_radius(stab, cfg);
  add_probe(stab, cfg);
  stab->add_option("--max-entries", cfg.max_entries, "stop after this many entries (0: no limit)")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  add_common(verify, cfg);
  add_radius(verify, cfg);
  add_probe(verify, cfg);
  verify->add_option("--n", cfg.n_max, "largest family index checked")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*system) return cmd_system(cfg);
    if (*flex) return cmd_check_flexible(cfg);
    if (*reduce) return cmd_reduce(cfg);
    if (*ball) return cmd_ball(cfg);
    if (*cycles) return cmd_cycles(cfg);
    if (*exotic) return cmd_exotic(cfg);
    if (*stab) return cmd_stabilizer(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (coxaut::GuardExceeded const& e) {
    std::cerr << "INDETERMINATE: " << e.what() << '\n';
    return kExitIndeterminate;
  } catch (coxaut::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
