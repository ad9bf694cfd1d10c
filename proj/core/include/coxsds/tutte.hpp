#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "coxsds/graph.hpp"
#include "coxsds/orientation.hpp"

namespace coxsds {

/// Sum of c_ab x^a y^b with non-negative integer coefficients.
class TuttePolynomial {
 public:
  using Exponents = std::pair<int, int>;

  TuttePolynomial() = default;
  static TuttePolynomial one();

  std::uint64_t coefficient(int a, int b) const;
  const std::map<Exponents, std::uint64_t>& coefficients() const {
    return coeffs_;
  }

  TuttePolynomial& operator+=(const TuttePolynomial& other);
  /// Multiplies by x^a y^b.
  TuttePolynomial shifted(int a, int b) const;

  mpz_class evaluate(long x, long y) const;
  /// Highest total degree first, e.g. "x^3 + x^2 + x + y".
  std::string to_string() const;

  friend bool operator==(const TuttePolynomial&,
                         const TuttePolynomial&) = default;

 private:
  std::map<Exponents, std::uint64_t> coeffs_;
};

/// Which edge deletion-contraction branches on.
enum class EdgePolicy { kFirst, kLast };

/// Deletion-contraction over multigraphs, memoized on a relabeled edge multiset.
TuttePolynomial tutte(const Graph& g, const GraphCaps& caps = {},
                      EdgePolicy policy = EdgePolicy::kFirst);

mpz_class tutte_eval(const Graph& g, long x0, long y0,
                     const GraphCaps& caps = {});

}  // namespace coxsds
