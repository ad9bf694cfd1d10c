#include "coxsds/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <unordered_set>

#include "coxsds/error.hpp"

namespace coxsds {

CoxeterSystem::CoxeterSystem(Graph graph) : graph_(std::move(graph)) {
  const int n = rank();
  two_cos_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const EdgeLabel label = m(i, j);
      if (!exact_label_supported(label)) {
        exact_ = false;
        unsupported_ = label.to_string();
        continue;
      }
      two_cos_[i * n + j] = coxsds::two_cos(label);
    }
  }
}

const FieldScalar& CoxeterSystem::two_cos(int i, int j) const {
  if (!exact_) {
    throw UnsupportedLabel("label " + unsupported_ +
                           " is not supported in exact mode");
  }
  return two_cos_[i * rank() + j];
}

namespace {

int parse_positive(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 1) {
    throw InvalidInput("bad integer '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

CoxeterSystem CoxeterSystem::named(std::string_view type) {
  if (type.empty()) throw InvalidInput("empty Coxeter type");
  if (type.starts_with("I2(") && type.ends_with(")")) {
    const int m = parse_positive(type.substr(3, type.size() - 4));
    if (m < 2) throw InvalidInput("I2(m) requires m >= 2");
    Graph g(2);
    if (m > 2) g.add_edge(0, 1, EdgeLabel(m));
    return CoxeterSystem(std::move(g));
  }
  if (type == "H3" || type == "H4") {
    const int n = type[1] - '0';
    Graph g(n);
    g.add_edge(0, 1, EdgeLabel(5));
    for (int v = 1; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return CoxeterSystem(std::move(g));
  }
  if (type == "F4") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2, EdgeLabel(4));
    g.add_edge(2, 3);
    return CoxeterSystem(std::move(g));
  }
  const char family = type[0];
  const int n = parse_positive(type.substr(1));
  switch (family) {
    case 'A':
      return CoxeterSystem(Graph::path(n));
    case 'B': {
      if (n < 2) throw InvalidInput("B_n requires n >= 2");
      Graph g(n);
      g.add_edge(0, 1, EdgeLabel(4));
      for (int v = 1; v + 1 < n; ++v) g.add_edge(v, v + 1);
      return CoxeterSystem(std::move(g));
    }
    case 'D': {
      if (n < 4) throw InvalidInput("D_n requires n >= 4");
      Graph g(n);
      for (int v = 0; v + 2 < n; ++v) g.add_edge(v, v + 1);
      g.add_edge(n - 3, n - 1);
      return CoxeterSystem(std::move(g));
    }
    default:
      throw InvalidInput("unknown Coxeter type '" + std::string(type) + "'");
  }
}

namespace {

void check_word(const CoxeterSystem& sys, const Word& w) {
  for (int s : w) {
    if (s < 0 || s >= sys.rank()) throw InvalidInput("letter out of range");
  }
}

void check_dim(const CoxeterSystem& sys, const FieldVector& v) {
  if (static_cast<int>(v.size()) != sys.rank()) {
    throw InvalidInput("vector length does not match rank");
  }
}

}  // namespace

FieldScalar bilinear_form(const CoxeterSystem& sys, const FieldVector& v,
                          const FieldVector& u) {
  check_dim(sys, v);
  check_dim(sys, u);
  const int n = sys.rank();
  FieldScalar total;
  for (int i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (u[j].is_zero()) continue;
      FieldScalar b = sys.two_cos(i, j);
      b *= mpq_class(-1, 2);
      if (!b.is_zero()) total += v[i] * b * u[j];
    }
  }
  return total;
}

FieldVector apply_generator(const CoxeterSystem& sys, int i, FieldVector z) {
  check_dim(sys, z);
  FieldScalar next = -z[i];
  for (int j : sys.graph().neighbors(i)) {
    if (!z[j].is_zero()) next += sys.two_cos(i, j) * z[j];
  }
  z[i] = std::move(next);
  return z;
}

FieldMatrix generator_matrix(const CoxeterSystem& sys, int i) {
  FieldMatrix r = FieldMatrix::identity(sys.rank());
  r(i, i) = FieldScalar(-1);
  for (int j : sys.graph().neighbors(i)) r(i, j) = sys.two_cos(i, j);
  return r;
}

namespace {

// R_s * m: only row s changes.
void left_multiply_generator(const CoxeterSystem& sys, int s, FieldMatrix& m) {
  const int n = sys.rank();
  for (int col = 0; col < n; ++col) {
    FieldScalar next = -m(s, col);
    for (int j : sys.graph().neighbors(s)) {
      if (!m(j, col).is_zero()) next += sys.two_cos(s, j) * m(j, col);
    }
    m(s, col) = std::move(next);
  }
}

}  // namespace

FieldMatrix representation_matrix(const CoxeterSystem& sys, const Word& w) {
  check_word(sys, w);
  FieldMatrix m = FieldMatrix::identity(sys.rank());
  for (int s : w) left_multiply_generator(sys, s, m);
  return m;
}

bool words_equal(const CoxeterSystem& sys, const Word& a, const Word& b) {
  return representation_matrix(sys, a) == representation_matrix(sys, b);
}

RootSign root_sign(const FieldVector& coords) {
  const int s = uniform_sign(coords);
  if (s == 0) throw PreconditionFailed("zero vector is not a root");
  return s > 0 ? RootSign::kPositive : RootSign::kNegative;
}

std::vector<Root> root_sequence(const CoxeterSystem& sys, const Word& w) {
  check_word(sys, w);
  if (w.empty()) throw PreconditionFailed("root sequence of the empty word");
  std::vector<Root> out;
  out.reserve(w.size());
  FieldVector z = unit_vector(sys.rank(), w[0]);
  out.push_back({z, RootSign::kPositive});
  for (std::size_t k = 1; k < w.size(); ++k) {
    z = apply_generator(sys, w[k], std::move(z));
    out.push_back({z, root_sign(z)});
  }
  return out;
}

namespace {

// Index of the first negative root in the root sequence of w[from..], or 0.
std::size_t first_negative_from(const CoxeterSystem& sys, const Word& w,
                                std::size_t from) {
  FieldVector z = unit_vector(sys.rank(), w[from]);
  for (std::size_t k = from + 1; k < w.size(); ++k) {
    z = apply_generator(sys, w[k], std::move(z));
    if (root_sign(z) == RootSign::kNegative) return k;
  }
  return 0;
}

}  // namespace

bool is_reduced(const CoxeterSystem& sys, const Word& w) {
  check_word(sys, w);
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (first_negative_from(sys, w, j) != 0) return false;
  }
  return true;
}

Word reduce(const CoxeterSystem& sys, const Word& w) {
  check_word(sys, w);
  Word current = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < current.size(); ++j) {
      if (auto i = first_negative_from(sys, current, j); i != 0) {
        current = current.erased(j, i);
        changed = true;
        break;
      }
    }
  }
  return current;
}

std::vector<FieldVector> enumerate_positive_roots(const CoxeterSystem& sys,
                                                  const CoxeterCaps& caps) {
  const int n = sys.rank();
  std::vector<FieldVector> roots;
  std::unordered_set<FieldVector, FieldVectorHash> seen;
  std::size_t head = 0;
  auto admit = [&](FieldVector z) {
    if (seen.contains(z)) return;
    if (roots.size() >= caps.max_roots) {
      throw CapExceeded("max_roots", static_cast<long long>(caps.max_roots));
    }
    seen.insert(z);
    roots.push_back(std::move(z));
  };
  for (int i = 0; i < n; ++i) admit(unit_vector(n, i));
  while (head < roots.size()) {
    const FieldVector z = roots[head++];
    for (int i = 0; i < n; ++i) {
      FieldVector y = apply_generator(sys, i, z);
      if (y == z || root_sign(y) == RootSign::kNegative) continue;
      admit(std::move(y));
    }
  }
  return roots;
}

RootAutomaton root_automaton(const CoxeterSystem& sys,
                             const CoxeterCaps& caps) {
  RootAutomaton aut;
  const auto positive = enumerate_positive_roots(sys, caps);
  aut.roots = positive;
  for (const auto& z : positive) {
    FieldVector neg;
    neg.reserve(z.size());
    for (const auto& x : z) neg.push_back(-x);
    aut.roots.push_back(std::move(neg));
  }
  const std::size_t total = aut.roots.size();
  aut.signs.assign(total, RootSign::kPositive);
  std::fill(aut.signs.begin() + static_cast<std::ptrdiff_t>(positive.size()),
            aut.signs.end(), RootSign::kNegative);

  std::unordered_map<FieldVector, std::size_t, FieldVectorHash> index;
  for (std::size_t k = 0; k < total; ++k) index.emplace(aut.roots[k], k);

  const int n = sys.rank();
  for (std::size_t k = 0; k < total; ++k) {
    for (int i = 0; i < n; ++i) {
      auto it = index.find(apply_generator(sys, i, aut.roots[k]));
      if (it == index.end()) {
        throw PreconditionFailed("root set is not closed under reflections");
      }
      aut.arcs.push_back({k, it->second, i});
    }
  }

  // Strict componentwise order as bit rows, then drop non-covers.
  const std::size_t words = (total + 63) / 64;
  std::vector<std::vector<std::uint64_t>> below(total,
                                                std::vector<std::uint64_t>(words));
  for (std::size_t a = 0; a < total; ++a) {
    for (std::size_t b = 0; b < total; ++b) {
      if (a == b) continue;
      bool le = true;
      for (int i = 0; i < n && le; ++i) {
        le = (aut.roots[b][i] - aut.roots[a][i]).sign() >= 0;
      }
      if (le) below[b][a / 64] |= std::uint64_t{1} << (a % 64);
    }
  }
  for (std::size_t b = 0; b < total; ++b) {
    for (std::size_t a = 0; a < total; ++a) {
      if (!(below[b][a / 64] >> (a % 64) & 1)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < total && cover; ++c) {
        if ((below[b][c / 64] >> (c % 64) & 1) &&
            (below[c][a / 64] >> (a % 64) & 1)) {
          cover = false;
        }
      }
      if (cover) aut.hasse.emplace_back(a, b);
    }
  }
  std::sort(aut.hasse.begin(), aut.hasse.end());
  return aut;
}

GroupEnumeration enumerate_group(const CoxeterSystem& sys,
                                 const CoxeterCaps& caps) {
  GroupEnumeration group;
  auto admit = [&](FieldMatrix m, Word w) {
    if (group.index.contains(m)) return;
    if (group.elements.size() >= caps.max_group) {
      throw CapExceeded("max_group", static_cast<long long>(caps.max_group));
    }
    group.index.emplace(m, group.elements.size());
    group.elements.push_back(std::move(m));
    group.words.push_back(std::move(w));
  };
  admit(FieldMatrix::identity(sys.rank()), Word());
  for (std::size_t head = 0; head < group.elements.size(); ++head) {
    for (int s = 0; s < sys.rank(); ++s) {
      FieldMatrix next = group.elements[head];
      left_multiply_generator(sys, s, next);
      Word w = group.words[head];
      w.push_back(s);
      admit(std::move(next), std::move(w));
    }
  }
  return group;
}

}  // namespace coxsds
