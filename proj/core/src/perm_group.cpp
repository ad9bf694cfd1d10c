#include "coxsds/perm_group.hpp"

#include <numeric>

#include "coxsds/error.hpp"

namespace coxsds {

Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

void validate_permutation(const Permutation& p) {
  std::vector<char> hit(p.size(), 0);
  for (auto x : p) {
    if (x >= p.size() || hit[x]) throw InvalidInput("not a permutation");
    hit[x] = 1;
  }
}

bool is_identity(const Permutation& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] != x) return false;
  }
  return true;
}

Permutation multiply(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidInput("permutation degrees differ");
  Permutation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    out[p[x]] = static_cast<std::uint32_t>(x);
  }
  return out;
}

Permutation power(const Permutation& p, std::uint64_t e) {
  Permutation result = identity_permutation(p.size());
  Permutation base = p;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return result;
}

mpz_class element_order(const Permutation& p) {
  mpz_class order = 1;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    unsigned long len = 0;
    for (std::size_t y = x; !seen[y]; y = p[y]) {
      seen[y] = 1;
      ++len;
    }
    mpz_lcm_ui(order.get_mpz_t(), order.get_mpz_t(), len);
  }
  return order;
}

std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == x) continue;
    out += '(';
    for (std::size_t y = x; !seen[y]; y = p[y]) {
      seen[y] = 1;
      if (y != x) out += ' ';
      out += std::to_string(y + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PermutationGroup::PermutationGroup(std::size_t degree,
                                   std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.size() != degree_) throw InvalidInput("generator degree mismatch");
    validate_permutation(g);
  }
  build();
}

bool PermutationGroup::fixes_base_prefix(const Permutation& g,
                                         std::size_t count) const {
  for (std::size_t k = 0; k < count; ++k) {
    if (g[base_[k]] != base_[k]) return false;
  }
  return true;
}

namespace {

std::uint32_t smallest_moved_point(const Permutation& g) {
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (g[x] != x) return static_cast<std::uint32_t>(x);
  }
  throw PreconditionFailed("identity moves no point");
}

}  // namespace

void PermutationGroup::rebuild_level(std::size_t i) {
  Level& level = levels_[i];
  level.base_point = base_[i];
  level.gens.clear();
  for (std::size_t k = 0; k < strong_.size(); ++k) {
    if (fixes_base_prefix(strong_[k], i)) level.gens.push_back(k);
  }
  level.schreier.assign(degree_, -1);
  level.orbit.assign(1, level.base_point);
  level.schreier[level.base_point] = -2;
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const std::uint32_t x = level.orbit[head];
    for (std::size_t k : level.gens) {
      const std::uint32_t y = strong_[k][x];
      if (level.schreier[y] != -1) continue;
      level.schreier[y] = static_cast<std::int32_t>(k);
      level.orbit.push_back(y);
    }
  }
}

Permutation PermutationGroup::transversal(std::size_t i,
                                          std::uint32_t point) const {
  const Level& level = levels_[i];
  std::vector<std::size_t> chain;
  while (level.schreier[point] >= 0) {
    const auto k = static_cast<std::size_t>(level.schreier[point]);
    chain.push_back(k);
    point = strong_inverse_[k][point];
  }
  Permutation u = identity_permutation(degree_);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    u = multiply(u, strong_[*it]);
  }
  return u;
}

std::pair<Permutation, std::size_t> PermutationGroup::sift(
    Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const std::uint32_t beta = g[levels_[i].base_point];
    if (levels_[i].schreier[beta] == -1) return {std::move(g), i};
    g = multiply(g, inverse(transversal(i, beta)));
  }
  return {std::move(g), levels_.size()};
}

void PermutationGroup::build() {
  auto add_strong = [&](Permutation g) {
    strong_inverse_.push_back(inverse(g));
    strong_.push_back(std::move(g));
  };
  for (const auto& g : generators_) {
    if (is_identity(g)) continue;
    if (fixes_base_prefix(g, base_.size())) {
      base_.push_back(smallest_moved_point(g));
    }
    add_strong(g);
  }
  levels_.resize(base_.size());
  for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_level(i);

  auto i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    const auto level = static_cast<std::size_t>(i);
    // Orbit and generators of this level do not change while it is scanned.
    const auto orbit = levels_[level].orbit;
    const auto gens = levels_[level].gens;
    for (std::uint32_t beta : orbit) {
      const Permutation u_beta = transversal(level, beta);
      for (std::size_t k : gens) {
        const std::uint32_t gamma = strong_[k][beta];
        Permutation h = multiply(multiply(u_beta, strong_[k]),
                                 inverse(transversal(level, gamma)));
        auto [residue, stop] = sift(std::move(h), level + 1);
        if (is_identity(residue)) continue;
        if (stop == levels_.size()) {
          base_.push_back(smallest_moved_point(residue));
          levels_.emplace_back();
        }
        add_strong(std::move(residue));
        for (std::size_t l = level + 1; l <= stop; ++l) rebuild_level(l);
        i = static_cast<std::ptrdiff_t>(stop);
        extended = true;
        break;
      }
      if (extended) break;
    }
    if (!extended) --i;
  }
}

std::vector<std::size_t> PermutationGroup::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels_) out.push_back(level.orbit.size());
  return out;
}

mpz_class PermutationGroup::order() const {
  mpz_class order = 1;
  for (const auto& level : levels_) order *= level.orbit.size();
  return order;
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.size() != degree_) return false;
  return is_identity(sift(p, 0).first);
}

bool PermutationGroup::is_abelian() const {
  for (std::size_t a = 0; a < generators_.size(); ++a) {
    for (std::size_t b = a + 1; b < generators_.size(); ++b) {
      if (multiply(generators_[a], generators_[b]) !=
          multiply(generators_[b], generators_[a])) {
        return false;
      }
    }
  }
  return true;
}

bool PermutationGroup::all_generators_involutions() const {
  for (const auto& g : generators_) {
    if (!is_identity(multiply(g, g))) return false;
  }
  return true;
}

bool PermutationGroup::exponent_two() const {
  // Involution generators that commute generate an elementary abelian 2-group,
  // and every group of exponent 2 is abelian.
  return all_generators_involutions() && is_abelian();
}

}  // namespace coxsds
