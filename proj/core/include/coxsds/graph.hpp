#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coxsds {

// Vertices are stored 0-based. All text and JSON I/O is 1-based.

/// Coxeter exponent m attached to a pair of generators / an edge.
/// Unlabeled edges carry 3, non-adjacent pairs 2, the diagonal 1.
class EdgeLabel {
 public:
  constexpr EdgeLabel() = default;
  constexpr explicit EdgeLabel(int m) : m_(m) {}
  static constexpr EdgeLabel infinity() { return EdgeLabel(0); }

  constexpr bool is_infinite() const { return m_ == 0; }
  /// The finite value; 0 for infinity.
  constexpr int value() const { return m_; }
  std::string to_string() const;

  friend constexpr bool operator==(EdgeLabel, EdgeLabel) = default;

 private:
  int m_ = 3;
};

struct Edge {
  int u;  // u < v
  int v;
  EdgeLabel label;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph with edge labels; doubles as dependency graph and
/// Coxeter graph.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);

  /// Adds {u,v}. Labels must be >= 3 or infinity.
  void add_edge(int u, int v, EdgeLabel label = EdgeLabel(3));

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Edges sorted lexicographically on (u,v) with u < v.
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int u, int v) const;
  /// Coxeter exponent of the pair: 1 on the diagonal, 2 for non-edges.
  EdgeLabel label(int u, int v) const;
  std::optional<std::size_t> edge_index(int u, int v) const;

  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  std::uint64_t neighbor_mask(int v) const { return neighbor_mask_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_labels() const;

  /// Presentation-layer alias table; defaults to a, b, c, ...
  void set_names(std::vector<std::string> names);
  const std::vector<std::string>& names() const { return names_; }
  bool has_custom_names() const { return custom_names_; }
  std::string vertex_name(int v) const;
  /// Accepts an alias or a 1-based index; returns the 0-based vertex.
  int parse_vertex(std::string_view token) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

  static Graph edgeless(int n);
  static Graph path(int n);
  /// Circ_n: edges {i,i+1} and {n,1}.
  static Graph circle(int n);
  static Graph complete(int n);
  /// Builds from 1-based pairs, for literals in tests and examples.
  static Graph from_one_based(int n,
                              std::initializer_list<std::pair<int, int>> edges);

  /// True iff this is Circ_n in the standard labeling (n >= 3).
  bool is_standard_circle() const;
  bool is_connected() const;

 private:
  void rebuild_index();

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::uint64_t> neighbor_mask_;
  std::vector<int> edge_slot_;  // n*n, -1 when absent
  std::vector<std::string> names_;
  bool custom_names_ = false;
};

/// A bijection of {0..n-1}. Used both for automorphisms (images[v] = γ(v))
/// and for update orders (images[k] = vertex updated k-th).
class VertexPermutation {
 public:
  VertexPermutation() = default;
  explicit VertexPermutation(std::vector<int> images);

  static VertexPermutation identity(int n);
  static VertexPermutation one_based(std::initializer_list<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[v]; }
  int operator[](int k) const { return images_[k]; }
  const std::vector<int>& images() const { return images_; }

  VertexPermutation inverse() const;
  /// (this ∘ other)(v) = this(other(v)).
  VertexPermutation compose(const VertexPermutation& other) const;
  bool is_identity() const;

  /// e.g. "1324" for n <= 9, "1 3 2 4" otherwise.
  std::string to_string() const;

  friend bool operator==(const VertexPermutation&,
                         const VertexPermutation&) = default;
  friend auto operator<=>(const VertexPermutation&,
                          const VertexPermutation&) = default;

 private:
  std::vector<int> images_;
};

/// All n! permutations in lexicographic order.
std::vector<VertexPermutation> all_permutations(int n);

}  // namespace coxsds
