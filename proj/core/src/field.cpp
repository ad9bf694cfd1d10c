#include "coxsds/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "coxsds/error.hpp"

namespace coxsds {

namespace {

// basis index -> radical mask, and back.
constexpr std::array<std::uint8_t, 8> kMaskOfBasis = {0, 1, 2, 4, 3, 5, 6, 7};
constexpr std::array<int, 8> kBasisOfMask = {0, 1, 2, 4, 3, 5, 6, 7};

constexpr int radicand(std::uint8_t mask) {
  return (mask & 1 ? 2 : 1) * (mask & 2 ? 3 : 1) * (mask & 4 ? 5 : 1);
}

std::size_t hash_mpz(mpz_srcptr z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) * 0x9e3779b97f4a7c15ULL;
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

// Lower dyadic bound floor(√r · 2^p) for the given precision, cached.
const mpz_class& sqrt_floor_scaled(int r, unsigned p) {
  static std::mutex mutex;
  static std::map<std::pair<int, unsigned>, mpz_class> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({r, p});
  if (inserted) {
    mpz_class scaled = r;
    scaled <<= 2 * p;
    mpz_sqrt(it->second.get_mpz_t(), scaled.get_mpz_t());
  }
  return it->second;
}

}  // namespace

FieldScalar::FieldScalar(long value) {
  if (value != 0) terms_.push_back({0, mpq_class(value)});
}

FieldScalar::FieldScalar(const mpq_class& value) {
  if (sgn(value) != 0) terms_.push_back({0, value});
}

FieldScalar FieldScalar::sqrt(int d) {
  for (int k = 0; k < kBasisSize; ++k) {
    if (kBasisRadicands[k] == d) {
      FieldScalar x;
      x.terms_.push_back({kMaskOfBasis[k], mpq_class(1)});
      return x;
    }
  }
  throw InvalidInput("sqrt(" + std::to_string(d) + ") is not a basis element");
}

FieldScalar FieldScalar::from_coefficients(
    const std::array<mpq_class, kBasisSize>& basis_coeffs) {
  FieldScalar x;
  for (std::uint8_t mask = 0; mask < 8; ++mask) {
    mpq_class c = basis_coeffs[kBasisOfMask[mask]];
    c.canonicalize();
    if (sgn(c) != 0) x.terms_.push_back({mask, c});
  }
  return x;
}

mpq_class FieldScalar::coefficient(int k) const {
  const auto mask = kMaskOfBasis.at(k);
  for (const auto& t : terms_)
    if (t.mask == mask) return t.coeff;
  return 0;
}

std::array<mpq_class, FieldScalar::kBasisSize> FieldScalar::coefficients()
    const {
  std::array<mpq_class, kBasisSize> out;
  for (const auto& t : terms_) out[kBasisOfMask[t.mask]] = t.coeff;
  return out;
}

bool FieldScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mask == 0);
}

std::pair<mpq_class, mpq_class> FieldScalar::enclose(
    unsigned precision_bits) const {
  mpq_class lo = 0, hi = 0;
  mpz_class denom = 1;
  denom <<= precision_bits;
  for (const auto& t : terms_) {
    if (t.mask == 0) {
      lo += t.coeff;
      hi += t.coeff;
      continue;
    }
    const mpz_class& floor_scaled =
        sqrt_floor_scaled(radicand(t.mask), precision_bits);
    mpq_class s_lo(floor_scaled, denom), s_hi(floor_scaled + 1, denom);
    s_lo.canonicalize();
    s_hi.canonicalize();
    if (sgn(t.coeff) > 0) {
      lo += t.coeff * s_lo;
      hi += t.coeff * s_hi;
    } else {
      lo += t.coeff * s_hi;
      hi += t.coeff * s_lo;
    }
  }
  return {lo, hi};
}

int FieldScalar::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sgn(terms_[0].coeff);
  // Floating-point screen: each term carries relative error below 2^-50, so a
  // sum clearly larger than the accumulated magnitude bound is decided.
  double value = 0, magnitude = 0;
  bool finite = true;
  for (const auto& t : terms_) {
    const double term =
        t.coeff.get_d() * std::sqrt(static_cast<double>(radicand(t.mask)));
    finite = finite && std::isfinite(term) && term != 0.0;
    value += term;
    magnitude += std::fabs(term);
  }
  if (finite && std::fabs(value) > magnitude * 1e-12 &&
      std::fabs(value) > 1e-280) {
    return value > 0 ? 1 : -1;
  }
  // A nonzero element has a nonzero value (the basis is linearly independent
  // over Q), so refinement terminates.
  for (unsigned p = 64;; p *= 2) {
    auto [lo, hi] = enclose(p);
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
  }
}

double FieldScalar::to_double() const {
  double v = 0;
  for (const auto& t : terms_) {
    v += t.coeff.get_d() * std::sqrt(static_cast<double>(radicand(t.mask)));
  }
  return v;
}

void FieldScalar::add_term(std::uint8_t mask, const mpq_class& c) {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), mask,
      [](const Term& t, std::uint8_t m) { return t.mask < m; });
  if (it != terms_.end() && it->mask == mask) {
    it->coeff += c;
    if (sgn(it->coeff) == 0) terms_.erase(it);
  } else if (sgn(c) != 0) {
    terms_.insert(it, Term{mask, c});
  }
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& other) {
  for (const auto& t : other.terms_) add_term(t.mask, t.coeff);
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& other) {
  for (const auto& t : other.terms_) add_term(t.mask, -t.coeff);
  return *this;
}

FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
  FieldScalar out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  std::array<mpq_class, 8> acc;
  std::uint8_t touched = 0;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      const std::uint8_t mask = x.mask ^ y.mask;
      const int shared = radicand(x.mask & y.mask);
      mpq_class prod = x.coeff * y.coeff;
      if (shared != 1) prod *= shared;
      acc[mask] += prod;
      touched |= static_cast<std::uint8_t>(1u << mask);
    }
  }
  for (std::uint8_t mask = 0; mask < 8; ++mask) {
    if ((touched >> mask & 1) && sgn(acc[mask]) != 0) {
      out.terms_.push_back({mask, std::move(acc[mask])});
    }
  }
  return out;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& other) {
  *this = *this * other;
  return *this;
}

FieldScalar& FieldScalar::operator*=(const mpq_class& q) {
  if (sgn(q) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= q;
  }
  return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& other) {
  return *this *= other.inverse();
}

bool operator==(const FieldScalar& a, const FieldScalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mask != b.terms_[i].mask ||
        a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return FieldScalar(mpq_class(1) / terms_[0].coeff);
  if (terms_.size() == 1) {
    // (c√r)^-1 = √r / (c r)
    FieldScalar out;
    out.terms_.push_back(
        {terms_[0].mask, mpq_class(1) / (terms_[0].coeff * radicand(terms_[0].mask))});
    return out;
  }

  // Solve M y = 1 where column j of M is this * (basis element with mask j).
  std::array<std::array<mpq_class, 9>, 8> aug;
  for (std::uint8_t j = 0; j < 8; ++j) {
    for (const auto& t : terms_) {
      const std::uint8_t mask = t.mask ^ j;
      aug[mask][j] += t.coeff * radicand(t.mask & j);
    }
  }
  aug[0][8] = 1;
  for (int col = 0; col < 8; ++col) {
    int pivot = col;
    while (pivot < 8 && sgn(aug[pivot][col]) == 0) ++pivot;
    if (pivot == 8) throw DivisionByZero();
    std::swap(aug[pivot], aug[col]);
    const mpq_class inv = mpq_class(1) / aug[col][col];
    for (int k = col; k < 9; ++k) aug[col][k] *= inv;
    for (int row = 0; row < 8; ++row) {
      if (row == col || sgn(aug[row][col]) == 0) continue;
      const mpq_class f = aug[row][col];
      for (int k = col; k < 9; ++k) aug[row][k] -= f * aug[col][k];
    }
  }
  FieldScalar out;
  for (std::uint8_t mask = 0; mask < 8; ++mask) {
    if (sgn(aug[mask][8]) != 0) out.terms_.push_back({mask, aug[mask][8]});
  }
  return out;
}

std::size_t FieldScalar::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 31 + t.mask;
    h ^= hash_mpz(t.coeff.get_num_mpz_t()) + (h << 7);
    h ^= hash_mpz(t.coeff.get_den_mpz_t()) + (h >> 3);
  }
  return h;
}

std::string FieldScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    mpq_class c = t.coeff;
    if (i > 0) {
      out += sgn(c) < 0 ? " - " : " + ";
      c = abs(c);
    }
    if (t.mask == 0) {
      out += c.get_str();
      continue;
    }
    const std::string radical = "sqrt" + std::to_string(radicand(t.mask));
    if (c == 1) {
      out += radical;
    } else if (c == -1) {
      out += "-" + radical;
    } else {
      out += c.get_str() + "*" + radical;
    }
  }
  return out;
}

bool exact_label_supported(EdgeLabel m) {
  return m.is_infinite() || (m.value() >= 1 && m.value() <= 6);
}

FieldScalar two_cos(EdgeLabel m) {
  if (m.is_infinite()) return FieldScalar(2);
  switch (m.value()) {
    case 1:
      return FieldScalar(-2);
    case 2:
      return FieldScalar(0);
    case 3:
      return FieldScalar(1);
    case 4:
      return FieldScalar::sqrt(2);
    case 5: {
      FieldScalar phi = FieldScalar::sqrt(5) + FieldScalar(1);
      phi *= mpq_class(1, 2);
      return phi;
    }
    case 6:
      return FieldScalar::sqrt(3);
    default:
      throw UnsupportedLabel(
          "label " + m.to_string() +
          " needs 2cos(pi/m) outside Q(sqrt2, sqrt3, sqrt5); use the "
          "floating-point mode");
  }
}

}  // namespace coxsds
