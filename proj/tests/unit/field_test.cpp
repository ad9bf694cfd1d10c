#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "coxsds/error.hpp"
#include "coxsds/field.hpp"

namespace coxsds {
namespace {

const FieldScalar kPhi = two_cos(EdgeLabel(5));

FieldScalar random_scalar(std::mt19937& rng, int density = 8) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5), pick(0, 7);
  std::array<mpq_class, FieldScalar::kBasisSize> c;
  for (int k = 0; k < density; ++k) {
    c[pick(rng)] = mpq_class(num(rng), den(rng));
  }
  for (auto& q : c) q.canonicalize();
  return FieldScalar::from_coefficients(c);
}

TEST(TwoCosTest, ExactValues) {
  EXPECT_EQ(two_cos(EdgeLabel(2)), FieldScalar(0));
  EXPECT_EQ(two_cos(EdgeLabel(3)), FieldScalar(1));
  EXPECT_EQ(two_cos(EdgeLabel(4)), FieldScalar::sqrt(2));
  EXPECT_EQ(kPhi, (FieldScalar(1) + FieldScalar::sqrt(5)) / FieldScalar(2));
  EXPECT_EQ(two_cos(EdgeLabel(6)), FieldScalar::sqrt(3));
  EXPECT_EQ(two_cos(EdgeLabel::infinity()), FieldScalar(2));
  EXPECT_EQ(two_cos(EdgeLabel(1)), FieldScalar(-2));
}

TEST(TwoCosTest, AgreesWithFloatingPoint) {
  for (int m : {2, 3, 4, 5, 6}) {
    EXPECT_NEAR(two_cos(EdgeLabel(m)).to_double(), 2 * std::cos(std::numbers::pi / m), 1e-12);
  }
}

TEST(TwoCosTest, RejectsOtherLabels) {
  EXPECT_THROW(two_cos(EdgeLabel(7)), UnsupportedLabel);
  EXPECT_THROW(two_cos(EdgeLabel(12)), UnsupportedLabel);
  EXPECT_FALSE(exact_label_supported(EdgeLabel(7)));
  EXPECT_TRUE(exact_label_supported(EdgeLabel::infinity()));
}

TEST(FieldScalarTest, GoldenRatioIdentities) {
  EXPECT_EQ(kPhi * kPhi, kPhi + FieldScalar(1));
  EXPECT_EQ(kPhi.inverse(), kPhi - FieldScalar(1));
  EXPECT_EQ(kPhi.inverse() * kPhi, FieldScalar(1));
}

TEST(FieldScalarTest, BasisProducts) {
  EXPECT_EQ(FieldScalar::sqrt(2) * FieldScalar::sqrt(3), FieldScalar::sqrt(6));
  EXPECT_EQ(FieldScalar::sqrt(6) * FieldScalar::sqrt(10),
            FieldScalar(2) * FieldScalar::sqrt(15));
  EXPECT_EQ(FieldScalar::sqrt(30) * FieldScalar::sqrt(30), FieldScalar(30));
  EXPECT_EQ(FieldScalar(2).inverse(), FieldScalar(mpq_class(1, 2)));
}

TEST(FieldScalarTest, ZeroIsCanonical) {
  const FieldScalar x = FieldScalar::sqrt(5) - FieldScalar::sqrt(5);
  EXPECT_TRUE(x.is_zero());
  EXPECT_EQ(x, FieldScalar());
  EXPECT_EQ(x.hash(), FieldScalar().hash());
  EXPECT_THROW(x.inverse(), DivisionByZero);
  EXPECT_THROW(FieldScalar(1) / x, DivisionByZero);
}

TEST(FieldScalarTest, SignExamples) {
  EXPECT_EQ(FieldScalar().sign(), 0);
  EXPECT_EQ((FieldScalar::sqrt(2) - FieldScalar(1)).sign(), 1);
  EXPECT_EQ((FieldScalar(1) - kPhi).sign(), -1);
  // Near-cancellation: 5 - 2√6 = (√3 - √2)^2 ≈ 0.101.
  EXPECT_EQ((FieldScalar(5) - FieldScalar(2) * FieldScalar::sqrt(6)).sign(), 1);
  // 49 - 20√6 ≈ 0.0102 and its negative.
  const FieldScalar tiny = FieldScalar(49) - FieldScalar(20) * FieldScalar::sqrt(6);
  EXPECT_EQ(tiny.sign(), 1);
  EXPECT_EQ((-tiny).sign(), -1);
}

TEST(FieldScalarTest, SignOfHighPowerOfSmallUnit) {
  // (√3 - √2)^12 ≈ 1.06e-6 is a sum of terms of size ~1e5 that cancel.
  FieldScalar base = FieldScalar::sqrt(3) - FieldScalar::sqrt(2);
  FieldScalar p(1);
  for (int k = 0; k < 12; ++k) p *= base;
  EXPECT_EQ(p.sign(), 1);
  EXPECT_EQ((p - FieldScalar(mpq_class(1, 1000000))).sign(), 1);
  EXPECT_EQ((p - FieldScalar(mpq_class(2, 1000000))).sign(), -1);
}

TEST(FieldScalarTest, SerializationOrder) {
  const auto c = (FieldScalar(3) + FieldScalar::sqrt(5) * FieldScalar(mpq_class(1, 2)))
                     .coefficients();
  EXPECT_EQ(c[0], 3);
  EXPECT_EQ(c[3], mpq_class(1, 2));
  for (int k : {1, 2, 4, 5, 6, 7}) EXPECT_EQ(c[k], 0);
  EXPECT_EQ(FieldScalar::sqrt(15).coefficient(6), 1);
}

TEST(FieldScalarTest, ToString) {
  EXPECT_EQ(kPhi.to_string(), "1/2 + 1/2*sqrt5");
  EXPECT_EQ(FieldScalar().to_string(), "0");
  EXPECT_EQ(FieldScalar(-3).to_string(), "-3");
}

TEST(FieldPropertyTest, SignIsMultiplicative) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const FieldScalar x = random_scalar(rng, 1 + trial % 4);
    const FieldScalar y = random_scalar(rng, 1 + trial % 3);
    EXPECT_EQ(x.sign() * y.sign(), (x * y).sign());
  }
}

TEST(FieldPropertyTest, SignAgreesWithDoubleWhenFarFromZero) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const FieldScalar x = random_scalar(rng, 3);
    const double d = x.to_double();
    if (std::fabs(d) > 1e-6) {
      EXPECT_EQ(x.sign(), d > 0 ? 1 : -1);
    }
  }
}

TEST(FieldPropertyTest, InverseTimesSelfIsOne) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const FieldScalar x = random_scalar(rng, 1 + trial % 8);
    if (x.is_zero()) continue;
    EXPECT_EQ(x.inverse() * x, FieldScalar(1));
  }
}

TEST(FieldPropertyTest, RingAxioms) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const FieldScalar a = random_scalar(rng, 3), b = random_scalar(rng, 3),
                      c = random_scalar(rng, 3);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(FieldPropertyTest, EnclosuresNest) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const FieldScalar x = random_scalar(rng, 1 + trial % 8);
    for (unsigned p : {8u, 16u, 32u, 64u}) {
      const auto [lo, hi] = x.enclose(p);
      const auto [lo2, hi2] = x.enclose(2 * p);
      EXPECT_LE(lo, hi);
      EXPECT_LE(lo, lo2);
      EXPECT_GE(hi, hi2);
      EXPECT_LE(lo2, hi2);
    }
  }
}

}  // namespace
}  // namespace coxsds
