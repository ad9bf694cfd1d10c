#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxsds/coxeter.hpp"
#include "coxsds/perm_group.hpp"
#include "coxsds/sds.hpp"

namespace coxsds {

struct DynamicsCaps {
  std::size_t max_periodic_points = 4096;
  SdsCaps sds;
};

/// The restrictions F_i* of the local maps to Per, as permutations of the
/// periodic points indexed in ascending state order.
struct RestrictedDynamics {
  int n = 0;
  std::vector<State> points;
  std::vector<Permutation> involutions;

  std::size_t point_index(State x) const;
};

/// Throws NotPiIndependent unless Per(F_π) is the same for every order.
RestrictedDynamics restricted_involutions(const SdsSpec& spec,
                                          const DynamicsCaps& caps = {});

/// Order of F_i* ∘ F_j*.
std::uint64_t coxeter_exponent(const RestrictedDynamics& dyn, int i, int j);
std::uint64_t coxeter_exponent(const SdsSpec& spec, int i, int j,
                               const DynamicsCaps& caps = {});

/// DG(F): the group generated by the F_i*.
PermutationGroup dynamics_group(const RestrictedDynamics& dyn);
PermutationGroup dynamics_group(const SdsSpec& spec,
                                const DynamicsCaps& caps = {});

/// |SL_n(F_2)| = ∏_{i<n} (2^n - 2^i).
mpz_class sl_order(int n);

/// Order plus structural predicates. Names are matched on order and
/// predicates only ("consistent with"), never by an isomorphism test.
struct GroupFingerprint {
  mpz_class order;
  bool is_abelian = false;
  bool all_generators_involutions = false;
  bool exponent_two = false;
  /// Subset of "Z2^n", "SL_n(F2)", "Sym_m", "Alt_m" with m = |Per|, or
  /// {"unknown"}.
  std::vector<std::string> matched_names;
};

GroupFingerprint fingerprint(const PermutationGroup& group, int n,
                             std::size_t per_size);

/// The Coxeter matrix m_ij = |F_i* F_j*| and the Coxeter system it presents.
/// Vertices with identical F_i* are merged and vertices with F_i* = id are
/// dropped before building `system`, whose vertex names are "v" plus the 1-based
/// indices of the kept representatives.
struct QuotientPresentation {
  std::vector<std::vector<std::uint64_t>> matrix;
  /// Groups of 0-based vertices sharing one restricted involution (size > 1).
  std::vector<std::vector<int>> merged;
  /// Vertices whose restriction is the identity.
  std::vector<int> trivial;
  /// Some off-diagonal m_ij equals 1.
  bool degenerate = false;
  std::vector<int> representatives;
  /// Absent when no generator survives.
  std::optional<CoxeterSystem> system;
};

QuotientPresentation quotient_presentation(const RestrictedDynamics& dyn);
QuotientPresentation quotient_presentation(const SdsSpec& spec,
                                           const DynamicsCaps& caps = {});

}  // namespace coxsds
