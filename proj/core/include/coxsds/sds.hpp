#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coxsds/graph.hpp"
#include "coxsds/word.hpp"

namespace coxsds {

/// Global Boolean state, vertex v (0-based) in bit v: vertex 1 is the
/// least-significant bit. Bits at or above n are zero.
using State = std::uint32_t;

/// "(x1,x2,...,xn)".
std::string format_state(State x, int n);
/// Accepts "(1,0,1,0)", "1,0,1,0" or "1010" (x1 first).
State parse_state(std::string_view text, int n);
State state_from_bits(std::initializer_list<int> bits);

enum class SymmetricFunction { kNor, kNand, kOr, kAnd, kParity, kMajority };

/// Boolean vertex function as a truth table. Input index packs the
/// neighborhood states with the first neighbor most significant, so for an
/// ECA (x_{i-1}, x_i, x_{i+1}) the index is 4x_{i-1} + 2x_i + x_{i+1}.
class LocalRule {
 public:
  static LocalRule eca(int k);
  static LocalRule symmetric(SymmetricFunction f, int arity);
  static LocalRule from_table(std::vector<std::uint8_t> table,
                              std::string provenance = "table");

  int arity() const { return arity_; }
  bool output(unsigned index) const { return table_[index] != 0; }
  const std::vector<std::uint8_t>& table() const { return table_; }
  /// "eca:60", "nor", "parity", ... or "table".
  const std::string& provenance() const { return provenance_; }

 private:
  int arity_ = 0;
  std::vector<std::uint8_t> table_;
  std::string provenance_;
};

/// "eca:K" or one of nor, nand, or, and, parity, majority.
/// Symmetric functions take the arity of the vertex they are attached to.
struct RuleName {
  bool is_eca = false;
  int eca_code = 0;
  SymmetricFunction function = SymmetricFunction::kNor;

  static RuleName parse(std::string_view text);
  LocalRule instantiate(int arity) const;
  std::string to_string() const;
};

/// Dependency graph plus one local rule per vertex.
///
/// Neighborhood order: on the standard circle Circ_n it is (v-1, v, v+1)
/// mod n; on any other graph it is the closed neighborhood in ascending
/// vertex order.
class SdsSpec {
 public:
  SdsSpec(Graph graph, std::vector<LocalRule> rules);

  /// Circ_n with every vertex running ECA rule k.
  static SdsSpec eca(int n, int k);
  /// Same rule name on every vertex.
  static SdsSpec uniform(Graph graph, const RuleName& rule);

  int size() const { return graph_.vertex_count(); }
  const Graph& graph() const { return graph_; }
  const LocalRule& rule(int v) const { return rules_[v]; }
  const std::vector<int>& neighborhood(int v) const { return neighborhoods_[v]; }

  /// F_v: recompute bit v from its neighborhood, leave the rest unchanged.
  State apply_local(int v, State x) const;
  /// F_w = F_{w_m} ∘ ... ∘ F_{w_1}: letters applied left to right.
  State sds_map(const Word& w, State x) const;

 private:
  Graph graph_;
  std::vector<LocalRule> rules_;
  std::vector<std::vector<int>> neighborhoods_;
};

struct SdsCaps {
  int max_phase_space_n = 24;
  int max_automaton_n = 16;
  int max_pi_independence_n = 8;
};

/// Functional graph of F_w over all 2^n states.
struct PhaseSpace {
  int n = 0;
  std::vector<State> successor;

  friend bool operator==(const PhaseSpace&, const PhaseSpace&) = default;
};

/// Edges (x, F_v(x)) for every state and vertex; successor[v][x].
struct StateAutomaton {
  int n = 0;
  std::vector<std::vector<State>> successor;

  friend bool operator==(const StateAutomaton&,
                         const StateAutomaton&) = default;
};

PhaseSpace phase_space(const SdsSpec& spec, const Word& w,
                       const SdsCaps& caps = {});

/// Per(F) as the stable image of F^(2^k), ascending.
std::vector<State> periodic_points(const PhaseSpace& ps);
/// Per(F) by walking every trajectory to its cycle, ascending.
std::vector<State> periodic_points_by_cycles(const PhaseSpace& ps);
std::vector<State> periodic_points(const SdsSpec& spec, const Word& w,
                                   const SdsCaps& caps = {});

/// Sorted multiset of cycle lengths on Per.
std::vector<std::size_t> cycle_lengths(const PhaseSpace& ps);
/// Equal cycle types on the periodic sets.
bool cycle_equivalent(const PhaseSpace& a, const PhaseSpace& b);

/// Per(F_π) identical for every permutation π. Throws CapExceeded above
/// caps.max_pi_independence_n.
bool is_pi_independent(const SdsSpec& spec, const SdsCaps& caps = {});

StateAutomaton state_automaton(const SdsSpec& spec, const SdsCaps& caps = {});
/// Follows the labels of w from every state.
PhaseSpace phase_space_from_automaton(const StateAutomaton& aut,
                                      const Word& w);

/// One line of an ECA sweep. per_size is |Per| of the identity order.
struct EcaClassification {
  int k = 0;
  int n = 0;
  bool pi_independent = false;
  std::size_t per_size = 0;
};

EcaClassification classify_eca(int n, int k, const SdsCaps& caps = {});
/// Rules k_first..k_last inclusive, sorted by k. `jobs` worker threads.
std::vector<EcaClassification> classify_eca_range(int n, int k_first,
                                                  int k_last, int jobs = 1,
                                                  const SdsCaps& caps = {});

}  // namespace coxsds
