#include "coxsds/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "coxsds/error.hpp"

namespace coxsds {

std::string EdgeLabel::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(m_);
}

namespace {

std::string default_name(int v) {
  if (v < 26) return std::string(1, static_cast<char>('a' + v));
  return "v" + std::to_string(v + 1);
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw InvalidInput("vertex count must be in 0.." +
                       std::to_string(kMaxVertices));
  }
  names_.reserve(n);
  for (int v = 0; v < n; ++v) names_.push_back(default_name(v));
  rebuild_index();
}

void Graph::add_edge(int u, int v, EdgeLabel label) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InvalidInput("edge endpoint out of range");
  }
  if (u == v) throw InvalidInput("self-loops are not allowed");
  if (!label.is_infinite() && label.value() < 3) {
    throw InvalidInput("edge labels must be >= 3 or inf (m = 2 is a non-edge)");
  }
  if (u > v) std::swap(u, v);
  if (adjacent(u, v)) throw InvalidInput("duplicate edge");
  Edge e{u, v, label};
  auto pos = std::lower_bound(
      edges_.begin(), edges_.end(), e, [](const Edge& a, const Edge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
      });
  edges_.insert(pos, e);
  rebuild_index();
}

void Graph::rebuild_index() {
  adjacency_.assign(n_, {});
  neighbor_mask_.assign(n_, 0);
  edge_slot_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto& e = edges_[k];
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    neighbor_mask_[e.u] |= std::uint64_t{1} << e.v;
    neighbor_mask_[e.v] |= std::uint64_t{1} << e.u;
    edge_slot_[e.u * n_ + e.v] = static_cast<int>(k);
    edge_slot_[e.v * n_ + e.u] = static_cast<int>(k);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool Graph::adjacent(int u, int v) const {
  return edge_slot_[u * n_ + v] >= 0;
}

EdgeLabel Graph::label(int u, int v) const {
  if (u == v) return EdgeLabel(1);
  const int slot = edge_slot_[u * n_ + v];
  return slot < 0 ? EdgeLabel(2) : edges_[slot].label;
}

std::optional<std::size_t> Graph::edge_index(int u, int v) const {
  const int slot = edge_slot_[u * n_ + v];
  if (slot < 0) return std::nullopt;
  return static_cast<std::size_t>(slot);
}

bool Graph::has_labels() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.label != EdgeLabel(3); });
}

void Graph::set_names(std::vector<std::string> names) {
  if (static_cast<int>(names.size()) != n_) {
    throw InvalidInput("alias table must name every vertex");
  }
  auto sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("duplicate vertex alias");
  }
  for (const auto& s : names) {
    if (s.empty() || std::all_of(s.begin(), s.end(), ::isdigit)) {
      throw InvalidInput("vertex aliases must be non-empty and non-numeric");
    }
  }
  names_ = std::move(names);
  custom_names_ = true;
}

std::string Graph::vertex_name(int v) const { return names_.at(v); }

int Graph::parse_vertex(std::string_view token) const {
  for (int v = 0; v < n_; ++v) {
    if (names_[v] == token) return v;
  }
  int index = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), index);
  if (ec == std::errc() && ptr == token.data() + token.size() && index >= 1 &&
      index <= n_) {
    return index - 1;
  }
  throw InvalidInput("unknown vertex '" + std::string(token) + "'");
}

Graph Graph::edgeless(int n) { return Graph(n); }

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::circle(int n) {
  if (n < 3) throw InvalidInput("Circ_n requires n >= 3");
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::from_one_based(int n,
                            std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
  return g;
}

bool Graph::is_standard_circle() const {
  if (n_ < 3 || edges_.size() != static_cast<std::size_t>(n_)) return false;
  for (int v = 0; v < n_; ++v) {
    if (!adjacent(v, (v + 1) % n_)) return false;
  }
  return true;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (int v = 0; v < n_; ++v) {
      if (frontier >> v & 1) next |= neighbor_mask_[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  const std::uint64_t all =
      n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  return seen == all;
}

VertexPermutation::VertexPermutation(std::vector<int> images)
    : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= size() || hit[x]) {
      throw InvalidInput("not a permutation");
    }
    hit[x] = true;
  }
}

VertexPermutation VertexPermutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return VertexPermutation(std::move(im));
}

VertexPermutation VertexPermutation::one_based(
    std::initializer_list<int> images) {
  std::vector<int> im;
  im.reserve(images.size());
  for (int x : images) im.push_back(x - 1);
  return VertexPermutation(std::move(im));
}

VertexPermutation VertexPermutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int v = 0; v < size(); ++v) inv[images_[v]] = v;
  return VertexPermutation(std::move(inv));
}

VertexPermutation VertexPermutation::compose(
    const VertexPermutation& other) const {
  std::vector<int> im(images_.size());
  for (int v = 0; v < size(); ++v) im[v] = images_[other.images_[v]];
  return VertexPermutation(std::move(im));
}

bool VertexPermutation::is_identity() const {
  for (int v = 0; v < size(); ++v)
    if (images_[v] != v) return false;
  return true;
}

std::string VertexPermutation::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (int k = 0; k < size(); ++k) {
    if (!compact && k > 0) out += ' ';
    out += std::to_string(images_[k] + 1);
  }
  return out;
}

std::vector<VertexPermutation> all_permutations(int n) {
  std::vector<VertexPermutation> out;
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace coxsds
