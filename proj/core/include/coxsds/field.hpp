#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coxsds/graph.hpp"

namespace coxsds {

/// Exact element of the real field Q(√2, √3, √5).
///
/// Stored sparsely over the basis {1, √2, √3, √5, √6, √10, √15, √30}.
/// Internally each basis element is addressed by a 3-bit radical mask
/// (bit 0: √2, bit 1: √3, bit 2: √5), so √a·√b = √(a^b)·r(a&b) where r is
/// the product of the shared primes. Terms are kept sorted by mask with
/// nonzero coefficients only; zero is the empty term list.
class FieldScalar {
 public:
  static constexpr int kBasisSize = 8;
  /// Radicands in serialization (basis) order.
  static constexpr std::array<int, kBasisSize> kBasisRadicands = {
      1, 2, 3, 5, 6, 10, 15, 30};

  FieldScalar() = default;
  FieldScalar(long value);  // NOLINT: integers embed implicitly
  explicit FieldScalar(const mpq_class& value);

  /// √d for d one of the basis radicands.
  static FieldScalar sqrt(int d);
  static FieldScalar from_coefficients(
      const std::array<mpq_class, kBasisSize>& basis_coeffs);

  /// Coefficient of the k-th basis element (basis order).
  mpq_class coefficient(int k) const;
  std::array<mpq_class, kBasisSize> coefficients() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  std::size_t term_count() const { return terms_.size(); }

  /// Exact sign in {-1, 0, +1}.
  int sign() const;
  /// Rational interval containing the value, using dyadic enclosures of the
  /// surds at the given number of fractional bits.
  std::pair<mpq_class, mpq_class> enclose(unsigned precision_bits) const;
  double to_double() const;

  /// Throws DivisionByZero for zero.
  FieldScalar inverse() const;

  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& other);
  FieldScalar& operator-=(const FieldScalar& other);
  FieldScalar& operator*=(const FieldScalar& other);
  FieldScalar& operator/=(const FieldScalar& other);
  /// Rational scaling; cheaper than a full product.
  FieldScalar& operator*=(const mpq_class& q);

  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) {
    return a += b;
  }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) {
    return a -= b;
  }
  friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b);
  friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) {
    return a /= b;
  }
  friend bool operator==(const FieldScalar& a, const FieldScalar& b);

  std::size_t hash() const;
  /// e.g. "1/2 + 1/2*sqrt5".
  std::string to_string() const;

 private:
  struct Term {
    std::uint8_t mask;
    mpq_class coeff;
  };
  std::vector<Term> terms_;

  void add_term(std::uint8_t mask, const mpq_class& c);
};

struct FieldScalarHash {
  std::size_t operator()(const FieldScalar& x) const { return x.hash(); }
};

/// Exact 2cos(π/m) for m in {2,3,4,5,6,inf}; also m = 1 gives -2.
/// Throws UnsupportedLabel otherwise.
FieldScalar two_cos(EdgeLabel m);

/// True when two_cos(m) is representable exactly.
bool exact_label_supported(EdgeLabel m);

}  // namespace coxsds
