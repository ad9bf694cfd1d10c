#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coxsds/graph.hpp"
#include "coxsds/linalg.hpp"
#include "coxsds/word.hpp"

namespace coxsds {

/// Coxeter system (W,S) given by its Coxeter graph.
class CoxeterSystem {
 public:
  explicit CoxeterSystem(Graph graph);

  /// Builtin types: "A<n>", "B<n>", "D<n>", "F4", "H3", "H4", "I2(<m>)".
  static CoxeterSystem named(std::string_view type);

  int rank() const { return graph_.vertex_count(); }
  const Graph& graph() const { return graph_; }
  /// Coxeter matrix entry m_ij.
  EdgeLabel m(int i, int j) const { return graph_.label(i, j); }
  /// True when every label admits exact arithmetic.
  bool exact() const { return exact_; }
  /// 2cos(π/m_ij); throws UnsupportedLabel in non-exact systems.
  const FieldScalar& two_cos(int i, int j) const;

 private:
  Graph graph_;
  bool exact_ = true;
  std::string unsupported_;
  std::vector<FieldScalar> two_cos_;
};

enum class RootSign { kPositive, kNegative };

struct Root {
  FieldVector coords;
  RootSign sign;

  friend bool operator==(const Root&, const Root&) = default;
};

struct CoxeterCaps {
  std::size_t max_roots = 10000;
  std::size_t max_group = 20000;
  std::size_t max_word_length = 64;
  std::size_t max_expressions = 100000;
};

/// B(v,u) with B(α_i,α_j) = -cos(π/m_ij).
FieldScalar bilinear_form(const CoxeterSystem& sys, const FieldVector& v,
                          const FieldVector& u);

/// s_i: z_i <- -z_i + Σ_{j≠i} 2cos(π/m_ij) z_j, other coordinates unchanged.
FieldVector apply_generator(const CoxeterSystem& sys, int i, FieldVector z);
FieldMatrix generator_matrix(const CoxeterSystem& sys, int i);

/// Matrix that applies the letters of w left to right: ρ(w)v = s_{w_m}…s_{w_1}v.
FieldMatrix representation_matrix(const CoxeterSystem& sys, const Word& w);

bool words_equal(const CoxeterSystem& sys, const Word& a, const Word& b);

/// Classifies a root by the common sign of its nonzero coordinates.
RootSign root_sign(const FieldVector& coords);

/// e_{x1}, then each following letter applied in turn. Requires nonempty w.
std::vector<Root> root_sequence(const CoxeterSystem& sys, const Word& w);

/// Every suffix's root sequence stays positive.
bool is_reduced(const CoxeterSystem& sys, const Word& w);

/// Repeatedly deletes the letter pair (j, i) where i is the first negative
/// root of the suffix starting at j, rescanning from the start each time.
Word reduce(const CoxeterSystem& sys, const Word& w);

/// Positive roots in BFS order from e_1..e_n. Throws CapExceeded past
/// caps.max_roots (probably infinite).
std::vector<FieldVector> enumerate_positive_roots(const CoxeterSystem& sys,
                                                  const CoxeterCaps& caps = {});

/// The root automaton on Φ = Φ⁺ ∪ Φ⁻ together with the Hasse diagram of
/// the componentwise order.
struct RootAutomaton {
  struct Arc {
    std::size_t from;
    std::size_t to;
    int generator;
  };
  /// Φ⁺ in BFS order, followed by the negatives in the same order.
  std::vector<FieldVector> roots;
  std::vector<RootSign> signs;
  /// (z, s_i z) for every root and generator, loops included.
  std::vector<Arc> arcs;
  /// Cover pairs (lower, upper) of the componentwise order.
  std::vector<std::pair<std::size_t, std::size_t>> hasse;

  std::size_t positive_count() const { return roots.size() / 2; }
};

RootAutomaton root_automaton(const CoxeterSystem& sys,
                             const CoxeterCaps& caps = {});

/// Finite group as matrices, BFS from I by appending generators.
struct GroupEnumeration {
  std::vector<FieldMatrix> elements;
  /// Shortest word for each element (BFS parent chain).
  std::vector<Word> words;
  std::unordered_map<FieldMatrix, std::size_t, FieldMatrixHash> index;

  std::size_t size() const { return elements.size(); }
  std::size_t length(std::size_t k) const { return words[k].size(); }
};

GroupEnumeration enumerate_group(const CoxeterSystem& sys,
                                 const CoxeterCaps& caps = {});

}  // namespace coxsds
