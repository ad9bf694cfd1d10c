#include "coxsds/numeric_roots.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "coxsds/error.hpp"

namespace coxsds::numeric {

double two_cos(EdgeLabel m) {
  if (m.is_infinite()) return 2.0;
  return 2.0 * std::cos(std::numbers::pi / m.value());
}

Vector apply_generator(const Graph& g, int i, Vector z) {
  double next = -z[i];
  for (int j : g.neighbors(i)) next += numeric::two_cos(g.label(i, j)) * z[j];
  z[i] = next;
  return z;
}

int root_sign(const Vector& z) {
  int seen = 0;
  for (double x : z) {
    if (std::fabs(x) <= kTolerance) continue;
    const int s = x > 0 ? 1 : -1;
    if (seen != 0 && s != seen) throw PreconditionFailed("mixed-sign vector");
    seen = s;
  }
  return seen;
}

std::vector<Vector> root_sequence(const Graph& g, const Word& w) {
  if (w.empty()) throw PreconditionFailed("root sequence of the empty word");
  std::vector<Vector> out;
  Vector z(g.vertex_count(), 0.0);
  z[w[0]] = 1.0;
  out.push_back(z);
  for (std::size_t k = 1; k < w.size(); ++k) {
    z = apply_generator(g, w[k], std::move(z));
    out.push_back(z);
  }
  return out;
}

namespace {

std::size_t first_negative_from(const Graph& g, const Word& w,
                                std::size_t from) {
  Vector z(g.vertex_count(), 0.0);
  z[w[from]] = 1.0;
  for (std::size_t k = from + 1; k < w.size(); ++k) {
    z = apply_generator(g, w[k], std::move(z));
    if (root_sign(z) < 0) return k;
  }
  return 0;
}

}  // namespace

bool is_reduced(const Graph& g, const Word& w) {
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (first_negative_from(g, w, j) != 0) return false;
  }
  return true;
}

Word reduce(const Graph& g, const Word& w) {
  Word current = w;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = 0; j < current.size(); ++j) {
      if (auto i = first_negative_from(g, current, j); i != 0) {
        current = current.erased(j, i);
        changed = true;
        break;
      }
    }
  }
  return current;
}

std::vector<Vector> enumerate_positive_roots(const Graph& g,
                                             std::size_t max_roots) {
  const int n = g.vertex_count();
  // Rounded coordinates as a dedup key; tolerance is far below the key grid.
  auto key = [](const Vector& z) {
    std::vector<long long> k;
    for (double x : z) k.push_back(std::llround(x * 1e6));
    return k;
  };
  std::vector<Vector> roots;
  std::map<std::vector<long long>, std::size_t> seen;
  auto admit = [&](Vector z) {
    auto k = key(z);
    if (seen.contains(k)) return;
    if (roots.size() >= max_roots) {
      throw CapExceeded("max_roots", static_cast<long long>(max_roots));
    }
    seen.emplace(std::move(k), roots.size());
    roots.push_back(std::move(z));
  };
  for (int i = 0; i < n; ++i) {
    Vector e(n, 0.0);
    e[i] = 1.0;
    admit(std::move(e));
  }
  for (std::size_t head = 0; head < roots.size(); ++head) {
    const Vector z = roots[head];
    for (int i = 0; i < n; ++i) {
      Vector y = apply_generator(g, i, z);
      if (root_sign(y) < 0) continue;
      admit(std::move(y));
    }
  }
  return roots;
}

}  // namespace coxsds::numeric
