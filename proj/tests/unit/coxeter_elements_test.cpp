#include <gtest/gtest.h>

#include <set>

#include "coxsds/coxeter_elements.hpp"
#include "coxsds/error.hpp"
#include "oracles.hpp"

namespace coxsds {
namespace {

FieldPolynomial poly(std::initializer_list<long> low_first) {
  std::vector<FieldScalar> c;
  for (long x : low_first) c.emplace_back(x);
  return FieldPolynomial(std::move(c));
}

TEST(CoxeterElementTest, BijectionRoundTripsOnCirc4) {
  const CoxeterSystem sys{Graph::circle(4)};
  std::set<Word> seen;
  for (Orientation o : enumerate_acyclic_orientations(sys.graph())) {
    const Word c = coxeter_element_of(sys, o);
    EXPECT_EQ(c.size(), 4u);
    EXPECT_EQ(orientation_of_coxeter(sys, c), o);
    seen.insert(c);
  }
  EXPECT_EQ(seen.size(), 14u);
}

TEST(CoxeterElementTest, CanonicalWordFollowsLinearExtension) {
  const CoxeterSystem sys{Graph::circle(4)};
  const Orientation o = orientation_of_permutation(
      sys.graph(), VertexPermutation::one_based({1, 3, 2, 4}));
  EXPECT_EQ(coxeter_element_of(sys, o), Word::one_based({1, 3, 2, 4}));
}

TEST(CoxeterElementTest, AnyOrderingOfTheSameOrientationIsEqual) {
  // 1 and 3 are not adjacent in Circ4, so s1 s3 = s3 s1.
  const CoxeterSystem sys{Graph::circle(4)};
  const Word a = Word::one_based({1, 3, 2, 4});
  const Word b = Word::one_based({3, 1, 4, 2});
  EXPECT_EQ(orientation_of_coxeter(sys, a), orientation_of_coxeter(sys, b));
  EXPECT_TRUE(words_equal(sys, a, b));
}

TEST(CoxeterElementTest, RejectsNonCoxeterWords) {
  const CoxeterSystem sys = CoxeterSystem::named("A3");
  EXPECT_THROW(orientation_of_coxeter(sys, Word::one_based({1, 2})), NotACoxeterElement);
  EXPECT_THROW(orientation_of_coxeter(sys, Word::one_based({1, 2, 2})),
               NotACoxeterElement);
  EXPECT_THROW(spectral_class(sys, Word::one_based({1, 1, 2, 3})), NotACoxeterElement);
}

TEST(CoxeterElementTest, ShiftIsConjugationBySourceMove) {
  const CoxeterSystem sys{Graph::circle(5)};
  for (Orientation o : enumerate_acyclic_orientations(sys.graph())) {
    const Word c = coxeter_element_of(sys, o);
    const Word shifted = conjugacy_by_initial_letter(sys, c);
    EXPECT_EQ(shifted.size(), c.size());
    EXPECT_EQ(shifted[shifted.size() - 1], c[0]);
    EXPECT_EQ(orientation_of_coxeter(sys, shifted),
              source_to_sink(sys.graph(), o, c[0]));
    const Word conj = Word({c[0]}) + c + Word({c[0]});
    EXPECT_TRUE(words_equal(sys, conj, shifted));
  }
}

TEST(ConjugacyClassesTest, Counts) {
  EXPECT_EQ(coxeter_conjugacy_classes(CoxeterSystem{Graph::circle(4)}).size(), 3u);
  EXPECT_EQ(coxeter_conjugacy_classes(CoxeterSystem::named("A2")).size(), 1u);
  EXPECT_EQ(coxeter_conjugacy_classes(CoxeterSystem{Graph::edgeless(3)}).size(), 1u);
  EXPECT_EQ(coxeter_conjugacy_classes(CoxeterSystem::named("H4")).size(), 1u);
}

TEST(ConjugacyClassesTest, MembersAreConjugateInFiniteGroups) {
  for (const char* type : {"A3", "B3", "D4"}) {
    const CoxeterSystem sys = CoxeterSystem::named(type);
    const GroupEnumeration group = enumerate_group(sys);
    for (const auto& cls : coxeter_conjugacy_classes(sys)) {
      const FieldMatrix first = representation_matrix(sys, cls.front());
      for (const Word& c : cls) {
        EXPECT_TRUE(oracle::conjugate(group, first, representation_matrix(sys, c)))
            << type;
      }
    }
  }
}

TEST(SpectralClassTest, A2) {
  const CoxeterSystem a2 = CoxeterSystem::named("A2");
  EXPECT_EQ(spectral_class(a2, Word::one_based({1, 2})), poly({1, 1, 1}));
  const auto classes = spectral_classes(a2);
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_EQ(classes[0].elements.size(), 2u);
}

TEST(SpectralClassTest, EdgelessGraphGivesMinusIdentity) {
  const CoxeterSystem sys{Graph::edgeless(3)};
  EXPECT_EQ(spectral_class(sys, Word::one_based({2, 1, 3})), poly({1, 3, 3, 1}));
}

TEST(SpectralClassTest, KappaBarClassesShareAPolynomial) {
  std::mt19937 rng(19);
  std::vector<Graph> graphs = {Graph::circle(4), Graph::circle(5), Graph::path(4),
                               Graph::complete(4)};
  for (int k = 0; k < 6; ++k) graphs.push_back(oracle::random_graph(5, 0.5, rng, true));
  for (const Graph& g : graphs) {
    const CoxeterSystem sys{g};
    for (const auto& cls : kappa_bar_classes(g)) {
      const FieldPolynomial p = spectral_class(sys, coxeter_element_of(sys, cls.front()));
      for (Orientation o : cls) {
        EXPECT_EQ(spectral_class(sys, coxeter_element_of(sys, o)), p);
      }
    }
  }
}

TEST(SpectralClassTest, PartitionCoversAllElements) {
  const CoxeterSystem sys{Graph::circle(5)};
  std::size_t total = 0;
  for (const auto& s : spectral_classes(sys)) total += s.elements.size();
  EXPECT_EQ(total, enumerate_acyclic_orientations(sys.graph()).size());
  EXPECT_LE(spectral_classes(sys).size(), kappa_classes(sys.graph()).size());
}

}  // namespace
}  // namespace coxsds
