#include "coxsds/tutte.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "coxsds/error.hpp"

namespace coxsds {

TuttePolynomial TuttePolynomial::one() {
  TuttePolynomial p;
  p.coeffs_[{0, 0}] = 1;
  return p;
}

std::uint64_t TuttePolynomial::coefficient(int a, int b) const {
  auto it = coeffs_.find({a, b});
  return it == coeffs_.end() ? 0 : it->second;
}

TuttePolynomial& TuttePolynomial::operator+=(const TuttePolynomial& other) {
  for (const auto& [e, c] : other.coeffs_) coeffs_[e] += c;
  return *this;
}

TuttePolynomial TuttePolynomial::shifted(int a, int b) const {
  TuttePolynomial out;
  for (const auto& [e, c] : coeffs_) {
    out.coeffs_[{e.first + a, e.second + b}] = c;
  }
  return out;
}

mpz_class TuttePolynomial::evaluate(long x, long y) const {
  mpz_class total = 0;
  for (const auto& [e, c] : coeffs_) {
    mpz_class term, xp, yp;
    mpz_pow_ui(xp.get_mpz_t(), mpz_class(x).get_mpz_t(), e.first);
    mpz_pow_ui(yp.get_mpz_t(), mpz_class(y).get_mpz_t(), e.second);
    term = xp * yp;
    term *= mpz_class(std::to_string(c));
    total += term;
  }
  return total;
}

std::string TuttePolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::vector<std::pair<Exponents, std::uint64_t>> terms(coeffs_.begin(),
                                                         coeffs_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    const int dl = l.first.first + l.first.second;
    const int dr = r.first.first + r.first.second;
    if (dl != dr) return dl > dr;
    return l.first.first > r.first.first;
  });
  auto power = [](const char* var, int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
  };
  std::string out;
  for (const auto& [e, c] : terms) {
    if (!out.empty()) out += " + ";
    std::string mono = power("x", e.first);
    const std::string ys = power("y", e.second);
    if (!mono.empty() && !ys.empty()) mono += "*";
    mono += ys;
    if (mono.empty()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += std::to_string(c) + "*" + mono;
    }
  }
  return out;
}

namespace {

struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // a <= b; a == b is a loop
};

// Drops isolated vertices and relabels by iterated degree refinement so that
// isomorphic-looking multigraphs tend to share a memo key. Any relabeling is
// sound: equal keys mean isomorphic multigraphs.
Multigraph normalize(const Multigraph& g) {
  std::vector<int> degree(g.n, 0);
  for (auto [a, b] : g.edges) {
    ++degree[a];
    ++degree[b];
  }
  std::vector<int> keep;
  for (int v = 0; v < g.n; ++v)
    if (degree[v] > 0) keep.push_back(v);

  std::vector<long long> color(g.n, 0);
  for (int v : keep) color[v] = degree[v];
  for (int round = 0; round < 3; ++round) {
    std::vector<std::vector<long long>> seen(g.n);
    for (auto [a, b] : g.edges) {
      seen[a].push_back(color[b]);
      if (a != b) seen[b].push_back(color[a]);
    }
    std::vector<std::pair<std::vector<long long>, int>> keyed;
    for (int v : keep) {
      std::sort(seen[v].begin(), seen[v].end());
      seen[v].insert(seen[v].begin(), color[v]);
      keyed.emplace_back(seen[v], v);
    }
    std::sort(keyed.begin(), keyed.end());
    long long next = 0;
    std::vector<long long> refined(g.n, 0);
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i > 0 && keyed[i].first != keyed[i - 1].first) ++next;
      refined[keyed[i].second] = next;
    }
    color = std::move(refined);
  }
  std::sort(keep.begin(), keep.end(), [&](int a, int b) {
    return std::pair(color[a], a) < std::pair(color[b], b);
  });
  std::vector<int> relabel(g.n, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    relabel[keep[i]] = static_cast<int>(i);
  }
  Multigraph out;
  out.n = static_cast<int>(keep.size());
  out.edges.reserve(g.edges.size());
  for (auto [a, b] : g.edges) {
    int x = relabel[a], y = relabel[b];
    if (x > y) std::swap(x, y);
    out.edges.emplace_back(x, y);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

std::string key_of(const Multigraph& g) {
  std::string key;
  key.reserve(1 + 2 * g.edges.size());
  key.push_back(static_cast<char>(g.n));
  for (auto [a, b] : g.edges) {
    key.push_back(static_cast<char>(a));
    key.push_back(static_cast<char>(b));
  }
  return key;
}

bool connected_without(const Multigraph& g, std::size_t skip, int from,
                       int to) {
  std::vector<std::vector<int>> adj(g.n);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    if (k == skip) continue;
    auto [a, b] = g.edges[k];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(g.n, false);
  std::vector<int> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return false;
}

Multigraph delete_edge(const Multigraph& g, std::size_t k) {
  Multigraph out = g;
  out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

Multigraph contract_edge(const Multigraph& g, std::size_t k) {
  const auto [a, b] = g.edges[k];
  Multigraph out;
  out.n = g.n - 1;
  auto image = [a = a, b = b](int v) {
    if (v == b) v = a;
    return v > b ? v - 1 : v;
  };
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    if (j == k) continue;
    int x = image(g.edges[j].first), y = image(g.edges[j].second);
    if (x > y) std::swap(x, y);
    out.edges.emplace_back(x, y);
  }
  return out;
}

class TutteSolver {
 public:
  explicit TutteSolver(EdgePolicy policy) : policy_(policy) {}

  TuttePolynomial solve(const Multigraph& raw) {
    Multigraph g;
    g.n = raw.n;
    int loops = 0;
    for (auto e : raw.edges) {
      if (e.first == e.second) {
        ++loops;
      } else {
        g.edges.push_back(e);
      }
    }
    if (loops > 0) return solve(g).shifted(0, loops);
    if (g.edges.empty()) return TuttePolynomial::one();

    g = normalize(g);
    auto key = key_of(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const std::size_t k =
        policy_ == EdgePolicy::kFirst ? 0 : g.edges.size() - 1;
    const auto [a, b] = g.edges[k];
    TuttePolynomial result;
    if (!connected_without(g, k, a, b)) {
      result = solve(contract_edge(g, k)).shifted(1, 0);
    } else {
      result = solve(delete_edge(g, k));
      result += solve(contract_edge(g, k));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  EdgePolicy policy_;
  std::unordered_map<std::string, TuttePolynomial> memo_;
};

}  // namespace

TuttePolynomial tutte(const Graph& g, const GraphCaps& caps,
                      EdgePolicy policy) {
  if (g.edge_count() > caps.max_edges) {
    throw CapExceeded("max_edges", static_cast<long long>(caps.max_edges));
  }
  Multigraph m;
  m.n = g.vertex_count();
  for (const auto& e : g.edges()) m.edges.emplace_back(e.u, e.v);
  return TutteSolver(policy).solve(m);
}

mpz_class tutte_eval(const Graph& g, long x0, long y0, const GraphCaps& caps) {
  return tutte(g, caps).evaluate(x0, y0);
}

}  // namespace coxsds
