#include "coxsds/orientation.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "coxsds/error.hpp"

namespace coxsds {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

bool edge_forward(Orientation o, std::size_t k) { return !(o.reversed >> k & 1); }

void check_edge_cap(const Graph& g, const GraphCaps& caps) {
  if (g.edge_count() > caps.max_edges || g.edge_count() > 63) {
    throw CapExceeded("max_edges", static_cast<long long>(caps.max_edges));
  }
}

// Groups items by root of `sets` and sorts canonically.
OrientationPartition collect(DisjointSets& sets,
                             const std::vector<Orientation>& items) {
  std::unordered_map<std::size_t, std::size_t> slot;
  OrientationPartition out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto [it, inserted] = slot.try_emplace(sets.find(i), out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(items[i]);
  }
  for (auto& cls : out) std::sort(cls.begin(), cls.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::pair<int, int>> arcs(const Graph& g, Orientation o) {
  std::vector<std::pair<int, int>> out;
  out.reserve(g.edge_count());
  const auto& edges = g.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edge_forward(o, k)) {
      out.emplace_back(edges[k].u, edges[k].v);
    } else {
      out.emplace_back(edges[k].v, edges[k].u);
    }
  }
  return out;
}

std::uint64_t in_neighbors(const Graph& g, Orientation o, int v) {
  std::uint64_t mask = 0;
  for (int w : g.neighbors(v)) {
    const auto k = *g.edge_index(v, w);
    // Arc w -> v: forward edge needs w < v.
    if (edge_forward(o, k) == (w < v)) mask |= std::uint64_t{1} << w;
  }
  return mask;
}

std::uint64_t out_neighbors(const Graph& g, Orientation o, int v) {
  return g.neighbor_mask(v) & ~in_neighbors(g, o, v);
}

bool is_acyclic(const Graph& g, Orientation o) {
  const int n = g.vertex_count();
  std::vector<std::uint64_t> in(n, 0);
  const auto& edges = g.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto [u, v, label] = edges[k];
    if (edge_forward(o, k)) {
      in[v] |= std::uint64_t{1} << u;
    } else {
      in[u] |= std::uint64_t{1} << v;
    }
  }
  std::uint64_t remaining =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  bool progress = true;
  while (remaining && progress) {
    progress = false;
    for (int v = 0; v < n; ++v) {
      if ((remaining >> v & 1) && (in[v] & remaining) == 0) {
        remaining &= ~(std::uint64_t{1} << v);
        progress = true;
      }
    }
  }
  return remaining == 0;
}

std::vector<Orientation> enumerate_acyclic_orientations(const Graph& g,
                                                        const GraphCaps& caps) {
  check_edge_cap(g, caps);
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  std::vector<Orientation> out;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (is_acyclic(g, Orientation{mask})) out.push_back(Orientation{mask});
  }
  return out;
}

Orientation orientation_of_permutation(const Graph& g,
                                       const VertexPermutation& order) {
  if (order.size() != g.vertex_count()) {
    throw InvalidInput("update order length does not match vertex count");
  }
  const auto position = order.inverse();
  Orientation o;
  const auto& edges = g.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (position(edges[k].v) < position(edges[k].u)) {
      o.reversed |= std::uint64_t{1} << k;
    }
  }
  return o;
}

VertexPermutation linear_extension(const Graph& g, Orientation o) {
  const int n = g.vertex_count();
  std::vector<std::uint64_t> in(n);
  for (int v = 0; v < n; ++v) in[v] = in_neighbors(g, o, v);
  std::vector<int> order;
  order.reserve(n);
  std::uint64_t emitted = 0;
  for (int step = 0; step < n; ++step) {
    int next = -1;
    for (int v = 0; v < n; ++v) {
      if (!(emitted >> v & 1) && (in[v] & ~emitted) == 0) {
        next = v;
        break;
      }
    }
    if (next < 0) throw PreconditionFailed("orientation is not acyclic");
    order.push_back(next);
    emitted |= std::uint64_t{1} << next;
  }
  return VertexPermutation(std::move(order));
}

namespace {

Orientation flip_all_at(const Graph& g, Orientation o, int v) {
  for (int w : g.neighbors(v)) {
    o.reversed ^= std::uint64_t{1} << *g.edge_index(v, w);
  }
  return o;
}

}  // namespace

Orientation source_to_sink(const Graph& g, Orientation o, int v) {
  if (in_neighbors(g, o, v) != 0) {
    throw PreconditionFailed("vertex " + std::to_string(v + 1) +
                             " is not a source");
  }
  return flip_all_at(g, o, v);
}

Orientation sink_to_source(const Graph& g, Orientation o, int v) {
  if (out_neighbors(g, o, v) != 0) {
    throw PreconditionFailed("vertex " + std::to_string(v + 1) +
                             " is not a sink");
  }
  return flip_all_at(g, o, v);
}

Orientation relabel(const Graph& g, Orientation o,
                    const VertexPermutation& gamma) {
  Orientation out;
  for (auto [a, b] : arcs(g, o)) {
    const int ga = gamma(a), gb = gamma(b);
    const auto k = g.edge_index(ga, gb);
    if (!k) throw InvalidInput("relabel requires an automorphism");
    if (ga > gb) out.reversed |= std::uint64_t{1} << *k;
  }
  return out;
}

OrientationPartition kappa_classes(const Graph& g, const GraphCaps& caps) {
  const auto acyc = enumerate_acyclic_orientations(g, caps);
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(acyc.size() * 2);
  for (std::size_t i = 0; i < acyc.size(); ++i) index[acyc[i].reversed] = i;

  DisjointSets sets(acyc.size());
  const int n = g.vertex_count();
  for (std::size_t i = 0; i < acyc.size(); ++i) {
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) == 0 || in_neighbors(g, acyc[i], v) != 0) continue;
      const auto moved = flip_all_at(g, acyc[i], v);
      sets.unite(i, index.at(moved.reversed));
    }
  }
  return collect(sets, acyc);
}

std::vector<VertexPermutation> automorphisms(const Graph& g,
                                             const GraphCaps& caps) {
  const int n = g.vertex_count();
  if (n > caps.max_automorphism_vertices) {
    throw CapExceeded("max_automorphism_vertices",
                      caps.max_automorphism_vertices);
  }
  // Sorted multiset of incident labels, a cheap vertex invariant.
  std::vector<std::vector<int>> signature(n);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) signature[v].push_back(g.label(v, w).value());
    std::sort(signature[v].begin(), signature[v].end());
  }

  std::vector<VertexPermutation> out;
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.emplace_back(image);
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c] || signature[c] != signature[v]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        ok = g.label(u, v) == g.label(image[u], c);
      }
      if (!ok) continue;
      image[v] = c;
      used[c] = true;
      self(self, v + 1);
      used[c] = false;
    }
  };
  extend(extend, 0);
  return out;
}

OrientationPartition kappa_bar_classes(const Graph& g, const GraphCaps& caps) {
  const auto kappa = kappa_classes(g, caps);
  const auto group = automorphisms(g, caps);
  std::unordered_map<std::uint64_t, std::size_t> owner;
  for (std::size_t c = 0; c < kappa.size(); ++c)
    for (auto o : kappa[c]) owner[o.reversed] = c;

  DisjointSets sets(kappa.size());
  for (const auto& gamma : group) {
    for (std::size_t c = 0; c < kappa.size(); ++c) {
      sets.unite(c, owner.at(relabel(g, kappa[c].front(), gamma).reversed));
    }
  }

  std::vector<Orientation> members;
  std::vector<std::size_t> member_class;
  for (std::size_t c = 0; c < kappa.size(); ++c) {
    for (auto o : kappa[c]) {
      members.push_back(o);
      member_class.push_back(c);
    }
  }
  DisjointSets by_member(members.size());
  std::unordered_map<std::size_t, std::size_t> first_of_root;
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto [it, inserted] = first_of_root.try_emplace(sets.find(member_class[i]), i);
    if (!inserted) by_member.unite(it->second, i);
  }
  return collect(by_member, members);
}

std::size_t class_of(const OrientationPartition& partition, Orientation o) {
  for (std::size_t c = 0; c < partition.size(); ++c) {
    if (std::binary_search(partition[c].begin(), partition[c].end(), o)) {
      return c;
    }
  }
  throw InvalidInput("orientation not in partition");
}

}  // namespace coxsds
