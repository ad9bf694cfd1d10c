// Acceptance run: one PASS/FAIL line per criterion.
//
// Usage: coxsds_acceptance [--expect-fail=3,4]
// Without the flag the exit status is 0 only if every criterion passes.
// With it, the exit status is 0 only if the failing set is exactly the
// listed one, so a known failure cannot hide a new one (or a fix).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coxsds/braid.hpp"
#include "coxsds/coxeter.hpp"
#include "coxsds/coxeter_elements.hpp"
#include "coxsds/dynamics_group.hpp"
#include "coxsds/error.hpp"
#include "coxsds/sds.hpp"
#include "coxsds/tutte.hpp"
#include "oracles.hpp"

namespace {

using namespace coxsds;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Counts checks and keeps the first few distinct failure messages.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 4 &&
        std::find(messages_.begin(), messages_.end(), what) == messages_.end()) {
      messages_.push_back(what);
    }
  }
  Outcome finish() const {
    if (failures_ == 0) return {true, std::to_string(checks_) + " checks"};
    std::string detail = std::to_string(failures_) + "/" + std::to_string(checks_) +
                         " checks failed: ";
    for (std::size_t k = 0; k < messages_.size(); ++k) {
      detail += (k ? "; " : "") + messages_[k];
    }
    return {false, detail};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

Word identity_word(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  return Word(std::move(w));
}

Outcome example_one() {
  Checker c;
  const SdsSpec spec = SdsSpec::uniform(Graph::circle(4), RuleName::parse("nor"));
  const std::vector<std::string> expected = {"(1,0,0,0)", "(1,0,0,0)", "(1,0,1,0)",
                                             "(1,0,1,0)"};
  State x = 0;
  for (int v = 0; v < 4; ++v) {
    x = spec.apply_local(v, x);
    c.expect(format_state(x, 4) == expected[v],
             "step " + std::to_string(v + 1) + " gave " + format_state(x, 4));
  }
  const State image = spec.sds_map(identity_word(4), 0);
  c.expect(format_state(image, 4) == "(1,0,1,0)", "F_pi(0000) = " + format_state(image, 4));
  return c.finish();
}

Outcome eca_classification() {
  Checker c;
  for (int n : {4, 5}) {
    const auto all = classify_eca_range(n, 0, 255, 1);
    const auto count = std::count_if(all.begin(), all.end(),
                                     [](const auto& e) { return e.pi_independent; });
    c.expect(count == 104, "n=" + std::to_string(n) + ": " + std::to_string(count) +
                               " pi-independent rules");
  }
  return c.finish();
}

Outcome dynamics_group_orders() {
  Checker c;
  for (int n : {3, 4, 5}) {
    const mpz_class order = dynamics_group(SdsSpec::eca(n, 60)).order();
    c.expect(order == sl_order(n), "rule 60, n=" + std::to_string(n) +
                                       ": order " + order.get_str());
  }
  for (int k : {28, 29, 51}) {
    for (int n : {4, 5, 6}) {
      const auto dyn = restricted_involutions(SdsSpec::eca(n, k));
      const auto group = dynamics_group(dyn);
      const mpz_class expected = mpz_class(1) << n;
      const std::string where = "rule " + std::to_string(k) + ", n=" + std::to_string(n);
      c.expect(group.order() == expected,
               where + ": order " + group.order().get_str() + ", |Per| " +
                   std::to_string(dyn.points.size()));
      c.expect(group.is_abelian(), where + ": not abelian");
      c.expect(group.exponent_two(), where + ": exponent is not 2");
    }
  }
  return c.finish();
}

Outcome h4_reduction() {
  Checker c;
  const CoxeterSystem h4 = CoxeterSystem::named("H4");
  const Word w = Word::parse(h4.graph(), "abdcabacbca");
  const Word target = Word::parse(h4.graph(), "bdcabacba");
  const Word r = reduce(h4, w);
  c.expect(r == target, "reduce(abdcabacbca) = " + r.to_string(h4.graph()));
  c.expect(is_reduced(h4, target), "bdcabacba not reduced");
  return c.finish();
}

Outcome root_enumeration() {
  Checker c;
  const std::vector<std::pair<const char*, std::size_t>> cases = {
      {"A2", 3}, {"A3", 6}, {"B3", 9}, {"H3", 15}, {"H4", 60}};
  for (const auto& [type, expected] : cases) {
    const CoxeterSystem sys = CoxeterSystem::named(type);
    const auto roots = enumerate_positive_roots(sys);
    const auto closure = oracle::positive_roots_by_group(sys, enumerate_group(sys));
    std::set<std::string> a, b;
    for (const auto& r : roots) a.insert(to_string(r));
    for (const auto& r : closure) b.insert(to_string(r));
    c.expect(roots.size() == expected,
             std::string(type) + ": " + std::to_string(roots.size()) + " roots");
    c.expect(a == b, std::string(type) + ": BFS roots differ from group closure");
  }
  return c.finish();
}

Outcome h4_group_order() {
  Checker c;
  CoxeterCaps caps;
  caps.max_group = 20000;
  const auto group = enumerate_group(CoxeterSystem::named("H4"), caps);
  c.expect(group.size() == 14400, "order " + std::to_string(group.size()));
  return c.finish();
}

Outcome tutte_consistency() {
  Checker c;
  std::vector<Graph> graphs;
  for (int n = 1; n <= 6; ++n) {
    for (auto& g : oracle::connected_graphs(n)) graphs.push_back(std::move(g));
  }
  c.expect(graphs.size() == 1 + 1 + 2 + 6 + 21 + 112, "census size");
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> size(2, 7);
  for (int k = 0; k < 50; ++k) graphs.push_back(oracle::random_graph(size(rng), 0.5, rng));
  for (const Graph& g : graphs) {
    const TuttePolynomial t = tutte(g);
    const auto acyc = enumerate_acyclic_orientations(g).size();
    c.expect(t.evaluate(2, 0) == static_cast<long>(acyc), "T(2,0) mismatch");
    c.expect(acyc == oracle::acyclic_count(g), "acyclic count differs from brute force");
    c.expect(t.evaluate(1, 0) == static_cast<long>(kappa_classes(g).size()),
             "T(1,0) mismatch");
  }
  return c.finish();
}

Outcome conjugacy_theorem() {
  Checker c;
  for (const char* type : {"A3", "B3", "H3"}) {
    const CoxeterSystem sys = CoxeterSystem::named(type);
    const GroupEnumeration group = enumerate_group(sys);
    const auto orientations = enumerate_acyclic_orientations(sys.graph());
    const auto classes = kappa_classes(sys.graph());
    for (Orientation a : orientations) {
      const FieldMatrix ma = representation_matrix(sys, coxeter_element_of(sys, a));
      for (Orientation b : orientations) {
        const FieldMatrix mb = representation_matrix(sys, coxeter_element_of(sys, b));
        const bool same_class = class_of(classes, a) == class_of(classes, b);
        c.expect(same_class == oracle::conjugate(group, ma, mb),
                 std::string(type) + ": kappa and conjugacy disagree");
      }
    }
  }
  return c.finish();
}

Outcome cycle_equivalence_sweep() {
  Checker c;
  std::vector<Graph> graphs = {Graph::circle(4), Graph::circle(5), Graph::circle(6),
                               Graph::path(4)};
  for (const Graph& g : graphs) {
    const auto classes = kappa_classes(g);
    for (const char* rule : {"nor", "parity", "majority"}) {
      const SdsSpec spec = SdsSpec::uniform(g, RuleName::parse(rule));
      std::map<std::size_t, PhaseSpace> representative;
      for (const auto& pi : all_permutations(g.vertex_count())) {
        const std::size_t cls = class_of(classes, orientation_of_permutation(g, pi));
        std::vector<int> letters(pi.images().begin(), pi.images().end());
        PhaseSpace ps = phase_space(spec, Word(letters));
        auto [it, fresh] = representative.try_emplace(cls, ps);
        if (!fresh) {
          c.expect(cycle_equivalent(it->second, ps),
                   std::string(rule) + " on n=" + std::to_string(g.vertex_count()) +
                       ": " + pi.to_string() + " breaks cycle equivalence");
        }
      }
    }
  }
  return c.finish();
}

Outcome matsumoto() {
  Checker c;
  const CoxeterSystem a3 = CoxeterSystem::named("A3");
  const GroupEnumeration group = enumerate_group(a3);
  for (std::size_t k = 0; k < group.size(); ++k) {
    const Word& w = group.words[k];
    std::vector<Word> filtered;
    for (const Word& v : oracle::all_words(a3.rank(), w.size())) {
      if (representation_matrix(a3, v) == group.elements[k]) filtered.push_back(v);
    }
    if (w.empty()) continue;
    c.expect(reduced_expressions(a3, w) == filtered,
             "element " + w.to_string(a3.graph()) + ": braid closure differs");
  }
  return c.finish();
}

Outcome property_suites() {
  Checker c;
  std::mt19937 rng(7);
  for (const char* type : {"A3", "B3", "D4", "F4", "H3", "H4", "I2(5)", "I2(6)"}) {
    const CoxeterSystem sys = CoxeterSystem::named(type);
    const int n = sys.rank();
    for (int i = 0; i < n; ++i) {
      const FieldMatrix si = generator_matrix(sys, i);
      c.expect((si * si).is_identity(), std::string(type) + ": s_i^2 != I");
      for (int j = i + 1; j < n; ++j) {
        const FieldMatrix p = si * generator_matrix(sys, j);
        FieldMatrix acc = FieldMatrix::identity(n);
        for (int e = 0; e < sys.m(i, j).value(); ++e) acc = acc * p;
        c.expect(acc.is_identity(), std::string(type) + ": braid relation fails");
      }
    }
  }
  const CoxeterSystem h4 = CoxeterSystem::named("H4");
  std::uniform_int_distribution<int> letter(0, 3), length(1, 30), coord(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> letters(length(rng));
    for (int& s : letters) s = letter(rng);
    const FieldMatrix m = representation_matrix(h4, Word(letters));
    FieldVector u, v;
    for (int i = 0; i < 4; ++i) {
      u.emplace_back(coord(rng));
      v.emplace_back(coord(rng));
    }
    c.expect(bilinear_form(h4, m * u, m * v) == bilinear_form(h4, u, v),
             "form not preserved");
  }
  int independent = 0;
  for (int k = 0; k < 256; ++k) {
    const SdsSpec spec = SdsSpec::eca(4, k);
    if (!is_pi_independent(spec)) continue;
    ++independent;
    const auto dyn = restricted_involutions(spec);
    const std::set<State> per(dyn.points.begin(), dyn.points.end());
    for (int v = 0; v < 4; ++v) {
      c.expect(is_identity(multiply(dyn.involutions[v], dyn.involutions[v])),
               "rule " + std::to_string(k) + ": restriction is not an involution");
      for (State x : dyn.points) {
        const State y = spec.apply_local(v, x);
        c.expect(per.contains(y) && spec.apply_local(v, y) == x,
                 "rule " + std::to_string(k) + ": F_i does not act bijectively on Per");
      }
    }
  }
  c.expect(independent == 104, "pi-independent count at n=4");
  const SdsSpec nor = SdsSpec::uniform(Graph::circle(4), RuleName::parse("nor"));
  const StateAutomaton aut = state_automaton(nor);
  for (const auto& pi : all_permutations(4)) {
    std::vector<int> letters(pi.images().begin(), pi.images().end());
    c.expect(phase_space_from_automaton(aut, Word(letters)) == phase_space(nor, Word(letters)),
             "automaton phase space differs for " + pi.to_string());
  }
  return c.finish();
}

std::set<int> parse_expect_fail(int argc, char** argv) {
  std::set<int> out;
  const std::string prefix = "--expect-fail=";
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg.rfind(prefix, 0) != 0) {
      std::fprintf(stderr, "unknown argument: %s\n", arg.c_str());
      std::exit(64);
    }
    std::stringstream ss(arg.substr(prefix.size()));
    for (std::string item; std::getline(ss, item, ',');) {
      if (!item.empty()) out.insert(std::stoi(item));
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::set<int> expected_failures = parse_expect_fail(argc, argv);
  const std::vector<Criterion> criteria = {
      {1, "nor-SDS on Circ4 reproduces the worked example", 0.001, example_one},
      {2, "ECA sweep finds 104 pi-independent rules at n=4,5", 10, eca_classification},
      {3, "dynamics-group orders for rules 60, 28, 29, 51", 60, dynamics_group_orders},
      {4, "H4 word reduction example", 1, h4_reduction},
      {5, "positive root counts with group-closure cross-check", 120, root_enumeration},
      {6, "H4 group has 14400 elements", 600, h4_group_order},
      {7, "Tutte evaluations count Acyc and kappa-classes", 300, tutte_consistency},
      {8, "kappa-equivalence equals conjugacy of Coxeter elements", 120,
       conjugacy_theorem},
      {9, "kappa-equivalent orders give cycle-equivalent dynamics", 120,
       cycle_equivalence_sweep},
      {10, "reduced words in A3 are connected by braid moves", 60, matsumoto},
      {11, "representation, form, restriction and automaton properties", 300,
       property_suites},
  };
  std::set<int> failed;
  for (const auto& crit : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = crit.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && seconds > crit.budget_seconds) {
      out = {false, "over time budget of " + std::to_string(crit.budget_seconds) + " s"};
    }
    if (!out.pass) failed.insert(crit.id);
    std::printf("[%s] AC%-2d %s (%.3f s; %s)\n", out.pass ? "PASS" : "FAIL", crit.id,
                crit.title, seconds, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed.size(), criteria.size());
  if (failed != expected_failures) {
    std::printf("failing set differs from the expected set\n");
    return 1;
  }
  return 0;
}
