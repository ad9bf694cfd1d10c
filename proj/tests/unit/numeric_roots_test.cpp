#include <gtest/gtest.h>

#include <random>

#include "coxsds/coxeter.hpp"
#include "coxsds/error.hpp"
#include "coxsds/numeric_roots.hpp"

namespace coxsds {
namespace {

TEST(NumericRootsTest, DihedralCounts) {
  for (int m : {3, 5, 7, 8, 9, 12}) {
    const CoxeterSystem sys = CoxeterSystem::named("I2(" + std::to_string(m) + ")");
    EXPECT_EQ(numeric::enumerate_positive_roots(sys.graph()).size(),
              static_cast<std::size_t>(m));
  }
}

TEST(NumericRootsTest, AgreesWithExactRoots) {
  for (const char* type : {"A4", "B3", "H3", "H4", "F4", "D4"}) {
    const CoxeterSystem sys = CoxeterSystem::named(type);
    const auto exact = enumerate_positive_roots(sys);
    const auto approx = numeric::enumerate_positive_roots(sys.graph());
    ASSERT_EQ(approx.size(), exact.size()) << type;
    for (std::size_t k = 0; k < exact.size(); ++k) {
      for (int i = 0; i < sys.rank(); ++i) {
        EXPECT_NEAR(approx[k][i], exact[k][i].to_double(), 1e-9);
      }
    }
  }
}

TEST(NumericRootsTest, ReduceAgreesWithExact) {
  std::mt19937 rng(41);
  const CoxeterSystem h4 = CoxeterSystem::named("H4");
  std::uniform_int_distribution<int> letter(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> letters(1 + trial % 16);
    for (int& s : letters) s = letter(rng);
    const Word w(letters);
    EXPECT_EQ(numeric::reduce(h4.graph(), w), reduce(h4, w));
    EXPECT_EQ(numeric::is_reduced(h4.graph(), w), is_reduced(h4, w));
  }
}

TEST(NumericRootsTest, HandlesNonExactLabels) {
  const CoxeterSystem i7 = CoxeterSystem::named("I2(7)");
  std::vector<int> letters;
  for (int k = 0; k < 7; ++k) letters.push_back(k % 2);
  EXPECT_TRUE(numeric::is_reduced(i7.graph(), Word(letters)));
  letters.push_back(1);
  EXPECT_EQ(numeric::reduce(i7.graph(), Word(letters)).size(), 6u);
  EXPECT_THROW(enumerate_positive_roots(i7), UnsupportedLabel);
}

TEST(NumericRootsTest, RootSignTolerance) {
  EXPECT_EQ(numeric::root_sign({1e-12, 0.5}), 1);
  EXPECT_EQ(numeric::root_sign({-1e-12, -0.5}), -1);
  EXPECT_THROW(numeric::root_sign({1.0, -1.0}), PreconditionFailed);
}

}  // namespace
}  // namespace coxsds
