// coxsds: command-line front end for the coxsds library.
//
// Exit codes: 0 success, 1 input error, 2 cap exceeded, 3 precondition
// violated (not pi-independent, unsupported label, non-source vertex, ...).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "coxsds/braid.hpp"
#include "coxsds/coxeter.hpp"
#include "coxsds/coxeter_elements.hpp"
#include "coxsds/dynamics_group.hpp"
#include "coxsds/error.hpp"
#include "coxsds/io.hpp"
#include "coxsds/numeric_roots.hpp"
#include "coxsds/orientation.hpp"
#include "coxsds/sds.hpp"
#include "coxsds/tutte.hpp"

namespace {

using namespace coxsds;
using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string graph_file;
  std::string system;
  std::string spec_file;
  std::string rule;
  int n = 0;
  std::vector<std::string> words;
  std::string format;
  std::string action;
  std::string target;
  std::size_t cap_roots = 10000;
  std::size_t cap_group = 20000;
  std::size_t cap_edges = 24;
  std::size_t cap_word = 64;
  int cap_automorphism_n = 10;
  int cap_pi_n = 8;
  int jobs = 1;
  int k_first = 0;
  int k_last = 255;
  bool use_float = false;
  bool list_classes = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GraphCaps graph_caps(const RunConfig& cfg) {
  GraphCaps caps;
  caps.max_edges = cfg.cap_edges;
  caps.max_automorphism_vertices = cfg.cap_automorphism_n;
  return caps;
}

CoxeterCaps coxeter_caps(const RunConfig& cfg) {
  CoxeterCaps caps;
  caps.max_roots = cfg.cap_roots;
  caps.max_group = cfg.cap_group;
  caps.max_word_length = cfg.cap_word;
  return caps;
}

SdsCaps sds_caps(const RunConfig& cfg) {
  SdsCaps caps;
  caps.max_pi_independence_n = cfg.cap_pi_n;
  return caps;
}

Graph load_graph(const RunConfig& cfg) {
  if (!cfg.graph_file.empty()) return io::graph_from_json(read_file(cfg.graph_file));
  if (!cfg.system.empty()) return CoxeterSystem::named(cfg.system).graph();
  if (cfg.n > 0) return Graph::circle(cfg.n);
  throw InvalidInput("give --graph FILE, --system TYPE or --n N");
}

CoxeterSystem load_system(const RunConfig& cfg) {
  if (!cfg.system.empty()) return CoxeterSystem::named(cfg.system);
  if (!cfg.graph_file.empty()) {
    return CoxeterSystem(io::graph_from_json(read_file(cfg.graph_file)));
  }
  throw InvalidInput("give --system TYPE or --graph FILE");
}

SdsSpec load_spec(const RunConfig& cfg) {
  if (!cfg.spec_file.empty()) return io::sds_spec_from_json(read_file(cfg.spec_file));
  if (cfg.rule.empty()) throw InvalidInput("give --spec FILE or --rule RULE");
  const RuleName rule = RuleName::parse(cfg.rule);
  if (!cfg.graph_file.empty()) return SdsSpec::uniform(load_graph(cfg), rule);
  if (cfg.n < 3) throw InvalidInput("--n must be at least 3 for Circ_n");
  return SdsSpec::uniform(Graph::circle(cfg.n), rule);
}

Word parse_word(const RunConfig& cfg, const Graph& g, const std::string& text) {
  Word w = Word::parse(g, text);
  if (w.size() > cfg.cap_word) {
    throw CapExceeded("max_word_length", static_cast<long long>(cfg.cap_word));
  }
  return w;
}

Word identity_word(int n) {
  std::vector<int> letters(n);
  std::iota(letters.begin(), letters.end(), 0);
  return Word(std::move(letters));
}

const std::string& single_word(const RunConfig& cfg, std::size_t count = 1) {
  if (cfg.words.size() != count) {
    throw InvalidInput("this action needs exactly " + std::to_string(count) +
                       " --word value(s)");
  }
  return cfg.words.front();
}

// ---------------------------------------------------------------------------

int cmd_graph(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  const GraphCaps caps = graph_caps(cfg);
  const auto acyc = enumerate_acyclic_orientations(g, caps);
  const auto kappa = kappa_classes(g, caps);
  const auto kappa_bar = kappa_bar_classes(g, caps);
  const auto aut = automorphisms(g, caps);
  const TuttePolynomial t = tutte(g, caps);

  if (cfg.format == "text") {
    std::cout << "vertices: " << g.vertex_count() << "\n"
              << "edges: " << g.edge_count() << "\n"
              << "acyclic orientations: " << acyc.size() << "\n"
              << "kappa classes: " << kappa.size() << "\n"
              << "kappa-bar classes: " << kappa_bar.size() << "\n"
              << "automorphisms: " << aut.size() << "\n"
              << "tutte: " << t.to_string() << "\n"
              << "T(2,0): " << t.evaluate(2, 0).get_str() << "\n"
              << "T(1,0): " << t.evaluate(1, 0).get_str() << "\n"
              << "T(1,1): " << t.evaluate(1, 1).get_str() << "\n";
    if (cfg.list_classes) {
      for (std::size_t c = 0; c < kappa.size(); ++c) {
        std::cout << "kappa class " << c + 1 << ":";
        for (Orientation o : kappa[c]) {
          std::cout << ' ' << linear_extension(g, o).to_string();
        }
        std::cout << "\n";
      }
    }
    return 0;
  }
  if (cfg.format == "dot") {
    for (const auto& cls : kappa) std::cout << io::orientation_to_dot(g, cls.front());
    return 0;
  }
  Json doc;
  doc["n"] = g.vertex_count();
  doc["edges"] = g.edge_count();
  doc["acyc"] = acyc.size();
  doc["kappa"] = kappa.size();
  doc["kappa_bar"] = kappa_bar.size();
  doc["automorphisms"] = aut.size();
  doc["tutte"] = t.to_string();
  doc["tutte_2_0"] = std::stoull(t.evaluate(2, 0).get_str());
  doc["tutte_1_0"] = std::stoull(t.evaluate(1, 0).get_str());
  doc["tutte_1_1"] = std::stoull(t.evaluate(1, 1).get_str());
  if (cfg.list_classes) {
    doc["kappa_classes"] = Json::parse(io::partition_to_json(g, kappa));
    doc["kappa_bar_classes"] = Json::parse(io::partition_to_json(g, kappa_bar));
  }
  std::cout << doc.dump() << "\n";
  return 0;
}

int cmd_eca_classify(const RunConfig& cfg) {
  if (cfg.n < 3) throw InvalidInput("--n must be at least 3");
  int first = cfg.k_first;
  int last = cfg.k_last;
  if (!cfg.rule.empty()) {
    const RuleName rule = RuleName::parse(cfg.rule);
    if (!rule.is_eca) throw InvalidInput("eca-classify takes --rule eca:K");
    first = last = rule.eca_code;
  }
  const auto results =
      classify_eca_range(cfg.n, first, last, cfg.jobs, sds_caps(cfg));
  std::size_t independent = 0;
  for (const auto& r : results) {
    std::cout << io::eca_classification_to_json(r) << "\n";
    if (r.pi_independent) ++independent;
  }
  Json summary;
  summary["summary"] = true;
  summary["n"] = cfg.n;
  summary["rules"] = results.size();
  summary["pi_independent"] = independent;
  std::cout << summary.dump() << "\n";
  return 0;
}

int cmd_dg(const RunConfig& cfg) {
  const SdsSpec spec = load_spec(cfg);
  int k = -1;
  if (cfg.spec_file.empty()) {
    const RuleName rule = RuleName::parse(cfg.rule);
    if (rule.is_eca) k = rule.eca_code;
  }
  DynamicsCaps caps;
  caps.sds = sds_caps(cfg);
  const RestrictedDynamics dyn = restricted_involutions(spec, caps);
  const PermutationGroup group = dynamics_group(dyn);
  const GroupFingerprint fp = fingerprint(group, dyn.n, dyn.points.size());
  const QuotientPresentation q = quotient_presentation(dyn);
  if (cfg.format == "text") {
    std::cout << "n: " << dyn.n << "\n"
              << "|Per|: " << dyn.points.size() << "\n"
              << "order: " << fp.order.get_str() << "\n"
              << "abelian: " << (fp.is_abelian ? "true" : "false") << "\n"
              << "exponent two: " << (fp.exponent_two ? "true" : "false") << "\n"
              << "consistent with:";
    for (const auto& name : fp.matched_names) std::cout << ' ' << name;
    std::cout << "\ncoxeter matrix:\n";
    for (const auto& row : q.matrix) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        std::cout << (j ? " " : "  ") << row[j];
      }
      std::cout << "\n";
    }
    if (q.degenerate) std::cout << "degenerate: some m_ij = 1 off the diagonal\n";
    return 0;
  }
  std::cout << io::dynamics_report_to_json(k, dyn, fp, q) << "\n";
  return 0;
}

void print_roots_text(const std::vector<FieldVector>& roots) {
  std::cout << roots.size() << "\n";
  for (const auto& z : roots) std::cout << to_string(z) << "\n";
}

int cmd_cox_float(const RunConfig& cfg, const Graph& g) {
  auto vec_string = [](const numeric::Vector& z) {
    std::ostringstream out;
    out << '(';
    for (std::size_t k = 0; k < z.size(); ++k) out << (k ? "," : "") << z[k];
    out << ')';
    return out.str();
  };
  if (cfg.action == "reduce") {
    std::cout << numeric::reduce(g, parse_word(cfg, g, single_word(cfg))).to_string(g)
              << "\n";
  } else if (cfg.action == "is-reduced") {
    std::cout << (numeric::is_reduced(g, parse_word(cfg, g, single_word(cfg)))
                      ? "true"
                      : "false")
              << "\n";
  } else if (cfg.action == "roots") {
    const auto roots = numeric::enumerate_positive_roots(g, cfg.cap_roots);
    std::cout << roots.size() << "\n";
    for (const auto& z : roots) std::cout << vec_string(z) << "\n";
  } else if (cfg.action == "root-sequence") {
    const auto seq = numeric::root_sequence(g, parse_word(cfg, g, single_word(cfg)));
    for (const auto& z : seq) {
      std::cout << vec_string(z) << (numeric::root_sign(z) > 0 ? " +" : " -") << "\n";
    }
  } else {
    throw InvalidInput("--float supports reduce, is-reduced, roots, root-sequence");
  }
  return 0;
}

int cmd_cox(const RunConfig& cfg) {
  const CoxeterSystem sys = load_system(cfg);
  const Graph& g = sys.graph();
  const CoxeterCaps caps = coxeter_caps(cfg);
  const bool json = cfg.format == "json";
  if (cfg.use_float) return cmd_cox_float(cfg, g);

  Json doc;
  if (cfg.action == "reduce") {
    const Word w = parse_word(cfg, g, single_word(cfg));
    const Word r = reduce(sys, w);
    if (!json) {
      std::cout << r.to_string(g) << "\n";
      return 0;
    }
    doc["word"] = w.to_string(g);
    doc["reduced"] = r.to_string(g);
    doc["length"] = r.size();
  } else if (cfg.action == "is-reduced") {
    const bool reduced = is_reduced(sys, parse_word(cfg, g, single_word(cfg)));
    if (!json) {
      std::cout << (reduced ? "true" : "false") << "\n";
      return 0;
    }
    doc["reduced"] = reduced;
  } else if (cfg.action == "equal") {
    if (cfg.words.size() != 2) throw InvalidInput("equal needs two --word values");
    const bool eq = words_equal(sys, parse_word(cfg, g, cfg.words[0]),
                                parse_word(cfg, g, cfg.words[1]));
    if (!json) {
      std::cout << (eq ? "true" : "false") << "\n";
      return 0;
    }
    doc["equal"] = eq;
  } else if (cfg.action == "root-sequence") {
    const auto seq = root_sequence(sys, parse_word(cfg, g, single_word(cfg)));
    if (!json) {
      for (const auto& r : seq) {
        std::cout << to_string(r.coords)
                  << (r.sign == RootSign::kPositive ? " +" : " -") << "\n";
      }
      return 0;
    }
    Json list = Json::array();
    for (const auto& r : seq) {
      list.push_back({{"coords", to_string(r.coords)},
                      {"positive", r.sign == RootSign::kPositive}});
    }
    doc["roots"] = list;
  } else if (cfg.action == "roots") {
    const auto roots = enumerate_positive_roots(sys, caps);
    if (!json) {
      print_roots_text(roots);
      return 0;
    }
    doc["positive_roots"] = roots.size();
    Json list = Json::array();
    for (const auto& z : roots) list.push_back(to_string(z));
    doc["roots"] = list;
  } else if (cfg.action == "elements") {
    const auto group = enumerate_group(sys, caps);
    std::size_t longest = 0;
    for (std::size_t k = 0; k < group.size(); ++k) {
      longest = std::max(longest, group.length(k));
    }
    if (!json) {
      std::cout << group.size() << "\n";
      return 0;
    }
    doc["order"] = group.size();
    doc["longest_length"] = longest;
  } else if (cfg.action == "classes") {
    const auto classes = coxeter_conjugacy_classes(sys, graph_caps(cfg));
    if (!json) {
      std::cout << classes.size() << "\n";
      for (const auto& cls : classes) {
        for (std::size_t k = 0; k < cls.size(); ++k) {
          std::cout << (k ? " | " : "") << cls[k].to_string(g);
        }
        std::cout << "\n";
      }
      return 0;
    }
    doc["classes"] = classes.size();
    Json list = Json::array();
    for (const auto& cls : classes) {
      Json members = Json::array();
      for (const auto& w : cls) members.push_back(w.to_string(g));
      list.push_back(members);
    }
    doc["members"] = list;
  } else if (cfg.action == "spectra") {
    const auto spectra = spectral_classes(sys, graph_caps(cfg));
    if (!json) {
      std::cout << spectra.size() << "\n";
      for (const auto& sc : spectra) {
        std::cout << sc.polynomial.to_string() << ":";
        for (const auto& w : sc.elements) std::cout << " [" << w.to_string(g) << "]";
        std::cout << "\n";
      }
      return 0;
    }
    doc["spectral_classes"] = spectra.size();
    Json list = Json::array();
    for (const auto& sc : spectra) {
      Json members = Json::array();
      for (const auto& w : sc.elements) members.push_back(w.to_string(g));
      list.push_back({{"char_poly", sc.polynomial.to_string()}, {"elements", members}});
    }
    doc["members"] = list;
  } else if (cfg.action == "braid-closure") {
    const Word w = parse_word(cfg, g, single_word(cfg));
    if (!is_reduced(sys, w)) throw PreconditionFailed("word is not reduced");
    const auto all = reduced_expressions(sys, w, caps);
    if (!json) {
      std::cout << all.size() << "\n";
      for (const auto& x : all) std::cout << x.to_string(g) << "\n";
      return 0;
    }
    doc["count"] = all.size();
    Json list = Json::array();
    for (const auto& x : all) list.push_back(x.to_string(g));
    doc["expressions"] = list;
  } else {
    throw InvalidInput("unknown cox action '" + cfg.action + "'");
  }
  std::cout << doc.dump() << "\n";
  return 0;
}

int cmd_export(const RunConfig& cfg) {
  const bool json = cfg.format == "json";
  if (cfg.target == "root-automaton") {
    const CoxeterSystem sys = load_system(cfg);
    const RootAutomaton aut = root_automaton(sys, coxeter_caps(cfg));
    std::cout << (json ? io::root_automaton_to_json(aut) + "\n"
                       : io::root_automaton_to_dot(sys, aut));
    return 0;
  }
  const SdsSpec spec = load_spec(cfg);
  if (cfg.target == "phase-space") {
    const Word w = cfg.words.empty() ? identity_word(spec.size())
                                     : parse_word(cfg, spec.graph(), single_word(cfg));
    const PhaseSpace ps = phase_space(spec, w, sds_caps(cfg));
    std::cout << (json ? io::phase_space_to_json(ps) + "\n" : io::phase_space_to_dot(ps));
    return 0;
  }
  if (cfg.target == "state-automaton") {
    const StateAutomaton aut = state_automaton(spec, sds_caps(cfg));
    std::cout << (json ? io::state_automaton_to_json(aut) + "\n"
                       : io::state_automaton_to_dot(aut));
    return 0;
  }
  throw InvalidInput("unknown export target '" + cfg.target + "'");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Sequential dynamical systems and Coxeter groups workbench"};
  app.require_subcommand(1);

  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--cap-roots", cfg.cap_roots, "Positive-root cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap-group", cfg.cap_group, "Group-element cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap-edges", cfg.cap_edges, "Edge cap for orientation enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap-word", cfg.cap_word, "Word-length cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap-automorphism-n", cfg.cap_automorphism_n,
                    "Vertex cap for automorphism search")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap-n", cfg.cap_pi_n, "Vertex cap for pi-independence checks")
        ->check(CLI::PositiveNumber);
  };
  const std::vector<std::string> formats{"json", "dot", "text"};

  auto* graph = app.add_subcommand(
      "graph", "Acyclic orientations, kappa / kappa-bar classes, Tutte polynomial");
  graph->add_option("--graph", cfg.graph_file, "Graph JSON file");
  graph->add_option("--system", cfg.system, "Builtin Coxeter graph (A4, H4, ...)");
  graph->add_option("--n", cfg.n, "Use Circ_n");
  graph->add_flag("--classes", cfg.list_classes, "List class members");
  graph->add_option("--format", cfg.format, "json (default), text or dot")
      ->check(CLI::IsMember(formats))
      ->default_str("json");
  add_caps(graph);

  auto* eca = app.add_subcommand("eca-classify", "Pi-independence sweep over ECA rules on Circ_n");
  eca->add_option("--n", cfg.n, "Ring size")->required();
  eca->add_option("--rule", cfg.rule, "Single rule eca:K");
  eca->add_option("--from", cfg.k_first, "First rule")->check(CLI::Range(0, 255));
  eca->add_option("--to", cfg.k_last, "Last rule")->check(CLI::Range(0, 255));
  eca->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_caps(eca);

  auto* dg = app.add_subcommand("dg", "Dynamics-group report");
  dg->add_option("--spec", cfg.spec_file, "SDS spec JSON file");
  dg->add_option("--rule", cfg.rule, "eca:K or nor, nand, or, and, parity, majority");
  dg->add_option("--graph", cfg.graph_file, "Graph JSON file (default Circ_n)");
  dg->add_option("--n", cfg.n, "Ring size for Circ_n");
  dg->add_option("--format", cfg.format, "json (default) or text")
      ->check(CLI::IsMember(formats))
      ->default_str("json");
  add_caps(dg);

  auto* cox = app.add_subcommand("cox", "Coxeter group computations");
  cox->add_option("action", cfg.action,
                  "reduce, is-reduced, equal, root-sequence, roots, elements, "
                  "classes, spectra, braid-closure")
      ->required();
  cox->add_option("--system", cfg.system, "Builtin type: A<n>, B<n>, D<n>, F4, H3, H4, I2(<m>)");
  cox->add_option("--graph", cfg.graph_file, "Coxeter graph JSON file");
  cox->add_option("--word", cfg.words, "Word, e.g. \"a b d c\" or \"1 2 4 3\" (repeatable)");
  cox->add_option("--format", cfg.format, "text (default) or json")
      ->check(CLI::IsMember(formats))
      ->default_str("text");
  cox->add_flag("--float", cfg.use_float,
                "Floating-point mode for labels without exact values (exploration only)");
  add_caps(cox);

  auto* exp = app.add_subcommand("export", "DOT / JSON export of phase spaces and automata");
  exp->add_option("target", cfg.target, "phase-space, state-automaton or root-automaton")
      ->required();
  exp->add_option("--spec", cfg.spec_file, "SDS spec JSON file");
  exp->add_option("--rule", cfg.rule, "Rule for every vertex");
  exp->add_option("--graph", cfg.graph_file, "Graph JSON file");
  exp->add_option("--system", cfg.system, "Builtin Coxeter type (root-automaton)");
  exp->add_option("--n", cfg.n, "Ring size for Circ_n");
  exp->add_option("--word", cfg.words, "Update word (phase-space; default 1..n)");
  exp->add_option("--format", cfg.format, "dot (default) or json")
      ->check(CLI::IsMember(formats))
      ->default_str("dot");
  add_caps(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (cfg.format.empty()) {
    cfg.format = app.got_subcommand(cox) ? "text" : app.got_subcommand(exp) ? "dot" : "json";
  }

  try {
    if (app.got_subcommand(graph)) return cmd_graph(cfg);
    if (app.got_subcommand(eca)) return cmd_eca_classify(cfg);
    if (app.got_subcommand(dg)) return cmd_dg(cfg);
    if (app.got_subcommand(cox)) return cmd_cox(cfg);
    if (app.got_subcommand(exp)) return cmd_export(cfg);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
