#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxsds/field.hpp"

namespace coxsds {

using FieldVector = std::vector<FieldScalar>;

FieldVector unit_vector(int n, int i);
/// -1, 0, +1 if every nonzero coordinate has that sign; throws
/// PreconditionFailed on mixed signs.
int uniform_sign(const FieldVector& v);
std::size_t hash_vector(const FieldVector& v);
std::string to_string(const FieldVector& v);

struct FieldVectorHash {
  std::size_t operator()(const FieldVector& v) const { return hash_vector(v); }
};

/// Dense square matrix over FieldScalar, row-major.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  explicit FieldMatrix(int n);

  static FieldMatrix identity(int n);

  int dim() const { return n_; }
  FieldScalar& operator()(int i, int j) { return a_[i * n_ + j]; }
  const FieldScalar& operator()(int i, int j) const { return a_[i * n_ + j]; }

  FieldMatrix operator*(const FieldMatrix& other) const;
  FieldVector operator*(const FieldVector& v) const;
  FieldScalar trace() const;
  FieldMatrix transpose() const;
  bool is_identity() const;

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<FieldScalar> a_;
};

struct FieldMatrixHash {
  std::size_t operator()(const FieldMatrix& m) const { return m.hash(); }
};

/// Polynomial in t with FieldScalar coefficients, lowest degree first.
/// Leading zeros are trimmed; the zero polynomial has no coefficients.
class FieldPolynomial {
 public:
  FieldPolynomial() = default;
  explicit FieldPolynomial(std::vector<FieldScalar> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<FieldScalar>& coefficients() const { return c_; }
  FieldScalar coefficient(int k) const;
  FieldScalar evaluate(const FieldScalar& t) const;

  FieldPolynomial operator*(const FieldPolynomial& other) const;
  /// Remainder of division by a monic polynomial.
  FieldPolynomial remainder_monic(const FieldPolynomial& divisor) const;

  std::string to_string() const;

  friend bool operator==(const FieldPolynomial&,
                         const FieldPolynomial&) = default;

 private:
  void trim();
  std::vector<FieldScalar> c_;
};

/// det(tI - M) by Faddeev-LeVerrier. Throws CapExceeded above max_dim.
FieldPolynomial char_poly(const FieldMatrix& m, int max_dim = 12);

}  // namespace coxsds
