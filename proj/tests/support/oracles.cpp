#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace coxsds::oracle {

std::size_t acyclic_count(const Graph& g) {
  const int n = g.vertex_count();
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::vector<int>> out(n);
    std::vector<int> indegree(n, 0);
    for (std::size_t e = 0; e < m; ++e) {
      int a = edges[e].u, b = edges[e].v;
      if (mask >> e & 1) std::swap(a, b);
      out[a].push_back(b);
      ++indegree[b];
    }
    std::vector<int> ready;
    for (int v = 0; v < n; ++v) {
      if (indegree[v] == 0) ready.push_back(v);
    }
    int emitted = 0;
    while (!ready.empty()) {
      const int v = ready.back();
      ready.pop_back();
      ++emitted;
      for (int w : out[v]) {
        if (--indegree[w] == 0) ready.push_back(w);
      }
    }
    if (emitted == n) ++count;
  }
  return count;
}

mpz_class spanning_tree_count(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 1;
  const int k = n - 1;
  std::vector<std::vector<mpq_class>> lap(k, std::vector<mpq_class>(k, 0));
  for (int i = 0; i < k; ++i) {
    lap[i][i] = g.degree(i);
    for (int j : g.neighbors(i)) {
      if (j < k) lap[i][j] = -1;
    }
  }
  mpq_class det = 1;
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    while (pivot < k && lap[pivot][col] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != col) {
      std::swap(lap[pivot], lap[col]);
      det = -det;
    }
    det *= lap[col][col];
    for (int r = col + 1; r < k; ++r) {
      if (lap[r][col] == 0) continue;
      const mpq_class f = lap[r][col] / lap[col][col];
      for (int c = col; c < k; ++c) lap[r][c] -= f * lap[col][c];
    }
  }
  return det.get_num();
}

namespace {

int find(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

// Rank of an edge subset in the cycle matroid.
int subset_rank(const Graph& g, std::uint64_t mask) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  int rank = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!(mask >> e & 1)) continue;
    const int a = find(parent, g.edges()[e].u);
    const int b = find(parent, g.edges()[e].v);
    if (a != b) {
      parent[a] = b;
      ++rank;
    }
  }
  return rank;
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::map<std::pair<int, int>, long long> tutte_by_subsets(const Graph& g) {
  const std::size_t m = g.edge_count();
  const int full_rank = subset_rank(g, (std::uint64_t{1} << m) - 1);
  std::map<std::pair<int, int>, long long> poly;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const int r = subset_rank(g, mask);
    const int a = full_rank - r;
    const int b = std::popcount(mask) - r;
    // (x-1)^a (y-1)^b expanded.
    for (int i = 0; i <= a; ++i) {
      for (int j = 0; j <= b; ++j) {
        const long long sign = ((a - i) + (b - j)) % 2 == 0 ? 1 : -1;
        poly[{i, j}] += sign * binomial(a, i) * binomial(b, j);
      }
    }
  }
  for (auto it = poly.begin(); it != poly.end();) {
    it = it->second == 0 ? poly.erase(it) : std::next(it);
  }
  return poly;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> pair_id(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      pair_id[i][j] = pair_id[j][i] = static_cast<int>(pairs.size());
      pairs.emplace_back(i, j);
    }
  }
  // Pair index images under every vertex permutation.
  std::vector<std::vector<int>> maps;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> image(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      image[p] = pair_id[perm[pairs[p].first]][perm[pairs[p].second]];
    }
    maps.push_back(std::move(image));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool canonical = true;
    for (const auto& image : maps) {
      std::uint64_t relabeled = 0;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (mask >> p & 1) relabeled |= std::uint64_t{1} << image[p];
      }
      if (relabeled < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    Graph g(n);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (mask >> p & 1) g.add_edge(pairs[p].first, pairs[p].second);
    }
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

Graph random_graph(int n, double p, std::mt19937& rng, bool connected) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    Graph g(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (coin(rng)) g.add_edge(i, j);
      }
    }
    if (!connected || g.is_connected()) return g;
  }
}

std::size_t kappa_bar_orbit_count(const Graph& g) {
  const auto classes = kappa_classes(g);
  const auto aut = automorphisms(g);
  std::size_t fixed_total = 0;
  for (const auto& gamma : aut) {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (class_of(classes, relabel(g, classes[c].front(), gamma)) == c) {
        ++fixed_total;
      }
    }
  }
  return fixed_total / aut.size();
}

std::vector<FieldVector> positive_roots_by_group(const CoxeterSystem& sys,
                                                 const GroupEnumeration& group) {
  std::set<std::string> seen;
  std::vector<FieldVector> out;
  for (const auto& m : group.elements) {
    for (int i = 0; i < sys.rank(); ++i) {
      FieldVector z = m * unit_vector(sys.rank(), i);
      if (uniform_sign(z) <= 0) continue;
      if (seen.insert(to_string(z)).second) out.push_back(std::move(z));
    }
  }
  return out;
}

bool conjugate(const GroupEnumeration& group, const FieldMatrix& a,
               const FieldMatrix& b) {
  for (const auto& g : group.elements) {
    if (g * a == b * g) return true;
  }
  return false;
}

std::vector<Word> all_words(int rank, std::size_t length) {
  std::vector<Word> out;
  std::vector<int> letters(length, 0);
  for (;;) {
    out.emplace_back(letters);
    std::size_t pos = length;
    while (pos > 0 && letters[pos - 1] == rank - 1) letters[--pos] = 0;
    if (pos == 0) return out;
    ++letters[pos - 1];
  }
}

}  // namespace coxsds::oracle
