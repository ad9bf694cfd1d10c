#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "coxsds/graph.hpp"

namespace coxsds {

/// Orientation of a graph's edges, one bit per edge in the graph's canonical
/// (lexicographic) edge order. A clear bit orients edge {u,v}, u < v, as
/// u -> v; a set bit as v -> u. The graph is passed alongside.
struct Orientation {
  std::uint64_t reversed = 0;

  friend auto operator<=>(const Orientation&, const Orientation&) = default;
};

/// Equivalence classes; members sorted, classes sorted by first member.
using OrientationPartition = std::vector<std::vector<Orientation>>;

struct GraphCaps {
  std::size_t max_edges = 24;
  int max_automorphism_vertices = 10;
};

/// Directed arcs (tail, head) in canonical edge order.
std::vector<std::pair<int, int>> arcs(const Graph& g, Orientation o);
std::uint64_t in_neighbors(const Graph& g, Orientation o, int v);
std::uint64_t out_neighbors(const Graph& g, Orientation o, int v);
bool is_acyclic(const Graph& g, Orientation o);

std::vector<Orientation> enumerate_acyclic_orientations(
    const Graph& g, const GraphCaps& caps = {});

/// Edge {i,j} points i -> j exactly when i precedes j in `order`.
Orientation orientation_of_permutation(const Graph& g,
                                       const VertexPermutation& order);

/// Canonical topological order: always emit the smallest available source.
VertexPermutation linear_extension(const Graph& g, Orientation o);

/// Reverses every edge at v. Throws PreconditionFailed if v has an in-edge.
Orientation source_to_sink(const Graph& g, Orientation o, int v);
/// Inverse move. Throws PreconditionFailed if v has an out-edge.
Orientation sink_to_source(const Graph& g, Orientation o, int v);

/// Image of o under an automorphism gamma: arc a -> b becomes γ(a) -> γ(b).
Orientation relabel(const Graph& g, Orientation o,
                    const VertexPermutation& gamma);

/// Components of Acyc(g) under source-to-sink moves.
OrientationPartition kappa_classes(const Graph& g, const GraphCaps& caps = {});

/// Label- and adjacency-preserving vertex permutations, lexicographic order.
std::vector<VertexPermutation> automorphisms(const Graph& g,
                                             const GraphCaps& caps = {});

/// kappa_classes coarsened by the Aut(g) action on Acyc(g)/~kappa.
OrientationPartition kappa_bar_classes(const Graph& g,
                                       const GraphCaps& caps = {});

/// Index of the class containing each orientation, for a partition.
std::size_t class_of(const OrientationPartition& partition, Orientation o);

}  // namespace coxsds
