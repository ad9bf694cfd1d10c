#include "coxsds/dynamics_group.hpp"

#include <algorithm>
#include <climits>

#include "coxsds/error.hpp"

namespace coxsds {

std::size_t RestrictedDynamics::point_index(State x) const {
  auto it = std::lower_bound(points.begin(), points.end(), x);
  if (it == points.end() || *it != x) {
    throw InvalidInput("state is not periodic");
  }
  return static_cast<std::size_t>(it - points.begin());
}

RestrictedDynamics restricted_involutions(const SdsSpec& spec,
                                          const DynamicsCaps& caps) {
  if (!is_pi_independent(spec, caps.sds)) {
    throw NotPiIndependent("Per(F_pi) depends on the update order");
  }
  RestrictedDynamics dyn;
  dyn.n = spec.size();
  std::vector<int> identity(dyn.n);
  for (int v = 0; v < dyn.n; ++v) identity[v] = v;
  dyn.points = periodic_points(spec, Word(identity), caps.sds);
  if (dyn.points.size() > caps.max_periodic_points) {
    throw CapExceeded("max_periodic_points",
                      static_cast<long long>(caps.max_periodic_points));
  }
  for (int v = 0; v < dyn.n; ++v) {
    Permutation p(dyn.points.size());
    for (std::size_t k = 0; k < dyn.points.size(); ++k) {
      const State y = spec.apply_local(v, dyn.points[k]);
      auto it = std::lower_bound(dyn.points.begin(), dyn.points.end(), y);
      if (it == dyn.points.end() || *it != y) {
        throw PreconditionFailed("F_" + std::to_string(v + 1) +
                                 " does not preserve Per");
      }
      p[k] = static_cast<std::uint32_t>(it - dyn.points.begin());
    }
    validate_permutation(p);
    dyn.involutions.push_back(std::move(p));
  }
  return dyn;
}

std::uint64_t coxeter_exponent(const RestrictedDynamics& dyn, int i, int j) {
  if (i < 0 || j < 0 || i >= dyn.n || j >= dyn.n) {
    throw InvalidInput("vertex out of range");
  }
  // F_i* ∘ F_j*: apply F_j* first.
  const mpz_class order =
      element_order(multiply(dyn.involutions[j], dyn.involutions[i]));
  if (!order.fits_ulong_p()) {
    throw CapExceeded("coxeter_exponent", static_cast<long long>(ULONG_MAX));
  }
  return order.get_ui();
}

std::uint64_t coxeter_exponent(const SdsSpec& spec, int i, int j,
                               const DynamicsCaps& caps) {
  return coxeter_exponent(restricted_involutions(spec, caps), i, j);
}

PermutationGroup dynamics_group(const RestrictedDynamics& dyn) {
  return PermutationGroup(dyn.points.size(), dyn.involutions);
}

PermutationGroup dynamics_group(const SdsSpec& spec, const DynamicsCaps& caps) {
  return dynamics_group(restricted_involutions(spec, caps));
}

mpz_class sl_order(int n) {
  mpz_class order = 1;
  mpz_class full;
  mpz_ui_pow_ui(full.get_mpz_t(), 2, static_cast<unsigned long>(n));
  for (int i = 0; i < n; ++i) {
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), 2, static_cast<unsigned long>(i));
    order *= full - term;
  }
  return order;
}

GroupFingerprint fingerprint(const PermutationGroup& group, int n,
                             std::size_t per_size) {
  GroupFingerprint fp;
  fp.order = group.order();
  fp.is_abelian = group.is_abelian();
  fp.all_generators_involutions = group.all_generators_involutions();
  fp.exponent_two = group.exponent_two();

  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
  mpz_class m_factorial;
  mpz_fac_ui(m_factorial.get_mpz_t(), per_size);
  const std::string ns = std::to_string(n);
  const std::string ms = std::to_string(per_size);

  if (fp.exponent_two && fp.order == two_n) {
    fp.matched_names.push_back("Z2^" + ns);
  }
  if (fp.order == sl_order(n)) fp.matched_names.push_back("SL_" + ns + "(F2)");
  if (fp.order == m_factorial) fp.matched_names.push_back("Sym_" + ms);
  if (per_size >= 2 && 2 * fp.order == m_factorial) {
    fp.matched_names.push_back("Alt_" + ms);
  }
  if (fp.matched_names.empty()) fp.matched_names.push_back("unknown");
  return fp;
}

QuotientPresentation quotient_presentation(const RestrictedDynamics& dyn) {
  QuotientPresentation q;
  const int n = dyn.n;
  q.matrix.assign(n, std::vector<std::uint64_t>(n, 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) q.matrix[i][j] = coxeter_exponent(dyn, i, j);
      if (i != j && q.matrix[i][j] == 1) q.degenerate = true;
    }
  }

  std::vector<int> owner(n, -1);
  for (int v = 0; v < n; ++v) {
    if (is_identity(dyn.involutions[v])) {
      q.trivial.push_back(v);
      continue;
    }
    if (owner[v] != -1) continue;
    owner[v] = v;
    std::vector<int> group{v};
    for (int u = v + 1; u < n; ++u) {
      if (owner[u] == -1 && dyn.involutions[u] == dyn.involutions[v]) {
        owner[u] = v;
        group.push_back(u);
      }
    }
    q.representatives.push_back(v);
    if (group.size() > 1) q.merged.push_back(std::move(group));
  }

  const int r = static_cast<int>(q.representatives.size());
  if (r == 0) return q;
  Graph g(r);
  std::vector<std::string> names;
  for (int a = 0; a < r; ++a) {
    names.push_back("v" + std::to_string(q.representatives[a] + 1));
    for (int b = a + 1; b < r; ++b) {
      const std::uint64_t m =
          q.matrix[q.representatives[a]][q.representatives[b]];
      if (m == 2) continue;
      if (m > static_cast<std::uint64_t>(INT_MAX)) {
        throw CapExceeded("coxeter_exponent", INT_MAX);
      }
      g.add_edge(a, b, EdgeLabel(static_cast<int>(m)));
    }
  }
  g.set_names(std::move(names));
  q.system.emplace(std::move(g));
  return q;
}

QuotientPresentation quotient_presentation(const SdsSpec& spec,
                                           const DynamicsCaps& caps) {
  return quotient_presentation(restricted_involutions(spec, caps));
}

}  // namespace coxsds
