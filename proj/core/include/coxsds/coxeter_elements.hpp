#pragma once

#include <vector>

#include "coxsds/coxeter.hpp"
#include "coxsds/orientation.hpp"

namespace coxsds {

// Coxeter elements <-> acyclic orientations of the Coxeter graph.

/// Product of the generators in the canonical linear extension of o.
Word coxeter_element_of(const CoxeterSystem& sys, Orientation o);

/// Edge {i,j} points i -> j when s_i occurs before s_j in c.
/// Throws NotACoxeterElement unless every generator occurs exactly once.
Orientation orientation_of_coxeter(const CoxeterSystem& sys, const Word& c);

/// s c s for s the first letter: the cyclic left shift of c.
Word conjugacy_by_initial_letter(const CoxeterSystem& sys, const Word& c);

/// kappa_classes of the Coxeter graph transported through the bijection.
std::vector<std::vector<Word>> coxeter_conjugacy_classes(
    const CoxeterSystem& sys, const GraphCaps& caps = {});

/// Characteristic polynomial of ρ(c).
FieldPolynomial spectral_class(const CoxeterSystem& sys, const Word& c);

/// Coxeter elements grouped by equal characteristic polynomial; each group
/// lists canonical words in orientation order.
struct SpectralClass {
  FieldPolynomial polynomial;
  std::vector<Word> elements;
};
std::vector<SpectralClass> spectral_classes(const CoxeterSystem& sys,
                                            const GraphCaps& caps = {});

}  // namespace coxsds
