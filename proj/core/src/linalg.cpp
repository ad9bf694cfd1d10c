#include "coxsds/linalg.hpp"

#include "coxsds/error.hpp"

namespace coxsds {

FieldVector unit_vector(int n, int i) {
  FieldVector v(n);
  v[i] = FieldScalar(1);
  return v;
}

int uniform_sign(const FieldVector& v) {
  int seen = 0;
  for (const auto& x : v) {
    const int s = x.sign();
    if (s == 0) continue;
    if (seen != 0 && s != seen) {
      throw PreconditionFailed("vector " + to_string(v) + " has mixed signs");
    }
    seen = s;
  }
  return seen;
}

std::size_t hash_vector(const FieldVector& v) {
  std::size_t h = v.size();
  for (const auto& x : v) h = h * 1000003u ^ x.hash();
  return h;
}

std::string to_string(const FieldVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

FieldMatrix::FieldMatrix(int n)
    : n_(n), a_(static_cast<std::size_t>(n) * n) {}

FieldMatrix FieldMatrix::identity(int n) {
  FieldMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = FieldScalar(1);
  return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& other) const {
  if (n_ != other.n_) throw InvalidInput("matrix dimension mismatch");
  FieldMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const auto& aik = (*this)(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        const auto& bkj = other(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

FieldVector FieldMatrix::operator*(const FieldVector& v) const {
  if (static_cast<int>(v.size()) != n_) {
    throw InvalidInput("vector dimension mismatch");
  }
  FieldVector out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const auto& aik = (*this)(i, k);
      if (!aik.is_zero() && !v[k].is_zero()) out[i] += aik * v[k];
    }
  }
  return out;
}

FieldScalar FieldMatrix::trace() const {
  FieldScalar t;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool FieldMatrix::is_identity() const {
  return *this == identity(n_);
}

std::size_t FieldMatrix::hash() const {
  std::size_t h = static_cast<std::size_t>(n_);
  for (const auto& x : a_) h = h * 1000003u ^ x.hash();
  return h;
}

std::string FieldMatrix::to_string() const {
  std::string out = "[";
  for (int i = 0; i < n_; ++i) {
    if (i > 0) out += "; ";
    for (int j = 0; j < n_; ++j) {
      if (j > 0) out += ", ";
      out += (*this)(i, j).to_string();
    }
  }
  return out + "]";
}

FieldPolynomial::FieldPolynomial(std::vector<FieldScalar> coeffs)
    : c_(std::move(coeffs)) {
  trim();
}

void FieldPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldScalar FieldPolynomial::coefficient(int k) const {
  return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : FieldScalar();
}

FieldScalar FieldPolynomial::evaluate(const FieldScalar& t) const {
  FieldScalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

FieldPolynomial FieldPolynomial::operator*(const FieldPolynomial& other) const {
  if (c_.empty() || other.c_.empty()) return {};
  std::vector<FieldScalar> out(c_.size() + other.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < other.c_.size(); ++j)
      out[i + j] += c_[i] * other.c_[j];
  return FieldPolynomial(std::move(out));
}

FieldPolynomial FieldPolynomial::remainder_monic(
    const FieldPolynomial& divisor) const {
  if (divisor.c_.empty() || !(divisor.c_.back() == FieldScalar(1))) {
    throw InvalidInput("divisor must be monic");
  }
  auto r = c_;
  const std::size_t d = divisor.c_.size() - 1;
  while (r.size() > d && !r.empty()) {
    const FieldScalar lead = r.back();
    const std::size_t shift = r.size() - 1 - d;
    for (std::size_t k = 0; k <= d; ++k) r[shift + k] -= lead * divisor.c_[k];
    r.pop_back();
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  return FieldPolynomial(std::move(r));
}

std::string FieldPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const auto& c = c_[k];
    if (c.is_zero()) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    std::string coeff = c.to_string();
    const bool simple = c.term_count() == 1;
    bool negative = simple && c.sign() < 0;
    if (negative) coeff = (-c).to_string();
    if (!simple) coeff = "(" + coeff + ")";
    std::string term;
    if (mono.empty()) {
      term = coeff;
    } else if (coeff == "1") {
      term = mono;
    } else {
      term = coeff + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

FieldPolynomial char_poly(const FieldMatrix& m, int max_dim) {
  const int n = m.dim();
  if (n > max_dim) throw CapExceeded("char_poly dimension", max_dim);
  std::vector<FieldScalar> c(n + 1);
  c[n] = FieldScalar(1);
  FieldMatrix mk(n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    FieldMatrix next = m * mk;
    for (int i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    FieldScalar tr = (m * mk).trace();
    tr *= mpq_class(-1, k);
    c[n - k] = tr;
  }
  return FieldPolynomial(std::move(c));
}

}  // namespace coxsds
