#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace coxsds {

/// Bijection of {0..degree-1}; p[x] is the image of x.
using Permutation = std::vector<std::uint32_t>;

Permutation identity_permutation(std::size_t degree);
/// Throws InvalidInput unless p is a bijection.
void validate_permutation(const Permutation& p);
bool is_identity(const Permutation& p);
/// Apply a first, then b: (a * b)[x] = b[a[x]].
Permutation multiply(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, std::uint64_t e);
/// Multiplicative order (lcm of the cycle lengths).
mpz_class element_order(const Permutation& p);
/// Cycle notation on 1-based points, e.g. "(1 2)(3 4)"; "()" for identity.
std::string cycle_string(const Permutation& p);

/// Permutation group with a stabilizer chain from deterministic
/// Schreier-Sims. Base points are the smallest point moved by the first
/// generator that fixes all earlier base points.
class PermutationGroup {
 public:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<std::uint32_t>& base() const { return base_; }
  /// Fundamental orbit lengths |Δ_i|, one per base point.
  std::vector<std::size_t> orbit_lengths() const;
  const std::vector<Permutation>& strong_generators() const {
    return strong_;
  }

  mpz_class order() const;
  bool contains(const Permutation& p) const;
  bool is_abelian() const;
  bool all_generators_involutions() const;
  /// Every element squares to the identity.
  bool exponent_two() const;

 private:
  struct Level {
    std::uint32_t base_point;
    std::vector<std::size_t> gens;         // indices into strong_
    std::vector<std::int32_t> schreier;    // -1 off orbit, -2 at base point
    std::vector<std::uint32_t> orbit;
  };

  void build();
  void rebuild_level(std::size_t i);
  Permutation transversal(std::size_t i, std::uint32_t point) const;
  /// Sifts from level `from`; returns the residue and the level it stopped.
  std::pair<Permutation, std::size_t> sift(Permutation g,
                                           std::size_t from) const;
  bool fixes_base_prefix(const Permutation& g, std::size_t count) const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<Permutation> strong_inverse_;
  std::vector<std::uint32_t> base_;
  std::vector<Level> levels_;
};

}  // namespace coxsds
