#include <gtest/gtest.h>

#include <random>

#include "coxsds/error.hpp"
#include "coxsds/tutte.hpp"
#include "oracles.hpp"

namespace coxsds {
namespace {

std::map<std::pair<int, int>, long long> as_signed(const TuttePolynomial& t) {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& [e, c] : t.coefficients()) out[e] = static_cast<long long>(c);
  return out;
}

TEST(TutteTest, Examples) {
  EXPECT_EQ(tutte(Graph::edgeless(3)), TuttePolynomial::one());
  EXPECT_EQ(tutte(Graph::path(2)).to_string(), "x");
  EXPECT_EQ(tutte(Graph::circle(4)).to_string(), "x^3 + x^2 + x + y");
  const TuttePolynomial k4 = tutte(Graph::complete(4));
  EXPECT_EQ(k4.coefficient(3, 0), 1u);
  EXPECT_EQ(k4.coefficient(2, 0), 3u);
  EXPECT_EQ(k4.coefficient(1, 0), 2u);
  EXPECT_EQ(k4.coefficient(1, 1), 4u);
  EXPECT_EQ(k4.coefficient(0, 1), 2u);
  EXPECT_EQ(k4.coefficient(0, 2), 3u);
  EXPECT_EQ(k4.coefficient(0, 3), 1u);
  EXPECT_EQ(k4.coefficients().size(), 7u);
}

TEST(TutteTest, Evaluations) {
  const Graph c4 = Graph::circle(4);
  EXPECT_EQ(tutte_eval(c4, 2, 0), 14);
  EXPECT_EQ(tutte_eval(c4, 1, 0), 3);
  EXPECT_EQ(tutte_eval(c4, 1, 1), 4);
  EXPECT_EQ(tutte_eval(Graph::edgeless(4), 7, -3), 1);
}

TEST(TutteTest, MatchesRankExpansionOnCensus) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::connected_graphs(n)) {
      EXPECT_EQ(as_signed(tutte(g)), oracle::tutte_by_subsets(g));
    }
  }
}

TEST(TutteTest, SpanningTreesMatchKirchhoff) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(7, 0.45, rng, true);
    EXPECT_EQ(tutte_eval(g, 1, 1), oracle::spanning_tree_count(g));
  }
}

TEST(TutteTest, IndependentOfEdgePolicy) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(7, 0.5, rng);
    EXPECT_EQ(tutte(g, {}, EdgePolicy::kFirst), tutte(g, {}, EdgePolicy::kLast));
  }
}

TEST(TutteTest, CountsOrientationsAndKappaClasses) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_graph(6, 0.5, rng);
    EXPECT_EQ(tutte_eval(g, 2, 0), enumerate_acyclic_orientations(g).size());
    EXPECT_EQ(tutte_eval(g, 1, 0), kappa_classes(g).size());
  }
}

TEST(TutteTest, EdgeCap) {
  GraphCaps caps;
  caps.max_edges = 5;
  EXPECT_THROW(tutte(Graph::complete(4), caps), CapExceeded);
}

TEST(TuttePolynomialTest, Arithmetic) {
  TuttePolynomial p = TuttePolynomial::one().shifted(1, 0);
  p += TuttePolynomial::one().shifted(0, 2);
  p += TuttePolynomial::one().shifted(1, 0);
  EXPECT_EQ(p.coefficient(1, 0), 2u);
  EXPECT_EQ(p.coefficient(0, 2), 1u);
  EXPECT_EQ(p.evaluate(3, 2), 10);
  EXPECT_EQ(p.to_string(), "y^2 + 2*x");
}

}  // namespace
}  // namespace coxsds
