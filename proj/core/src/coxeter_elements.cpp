#include "coxsds/coxeter_elements.hpp"

#include <algorithm>

#include "coxsds/error.hpp"

namespace coxsds {

namespace {

void check_coxeter_element(const CoxeterSystem& sys, const Word& c) {
  std::vector<int> count(sys.rank(), 0);
  for (int s : c) {
    if (s < 0 || s >= sys.rank()) throw InvalidInput("letter out of range");
    ++count[s];
  }
  for (int s = 0; s < sys.rank(); ++s) {
    if (count[s] != 1) {
      throw NotACoxeterElement(
          "generator " + sys.graph().vertex_name(s) +
          (count[s] == 0 ? " is missing" : " repeats"));
    }
  }
}

}  // namespace

Word coxeter_element_of(const CoxeterSystem& sys, Orientation o) {
  return Word(linear_extension(sys.graph(), o).images());
}

Orientation orientation_of_coxeter(const CoxeterSystem& sys, const Word& c) {
  check_coxeter_element(sys, c);
  return orientation_of_permutation(sys.graph(), VertexPermutation(c.letters()));
}

Word conjugacy_by_initial_letter(const CoxeterSystem& sys, const Word& c) {
  check_coxeter_element(sys, c);
  if (c.empty()) return c;
  auto letters = c.letters();
  std::rotate(letters.begin(), letters.begin() + 1, letters.end());
  return Word(std::move(letters));
}

std::vector<std::vector<Word>> coxeter_conjugacy_classes(
    const CoxeterSystem& sys, const GraphCaps& caps) {
  std::vector<std::vector<Word>> out;
  for (const auto& cls : kappa_classes(sys.graph(), caps)) {
    auto& words = out.emplace_back();
    for (auto o : cls) words.push_back(coxeter_element_of(sys, o));
  }
  return out;
}

FieldPolynomial spectral_class(const CoxeterSystem& sys, const Word& c) {
  check_coxeter_element(sys, c);
  return char_poly(representation_matrix(sys, c));
}

std::vector<SpectralClass> spectral_classes(const CoxeterSystem& sys,
                                            const GraphCaps& caps) {
  std::vector<SpectralClass> out;
  for (auto o : enumerate_acyclic_orientations(sys.graph(), caps)) {
    Word c = coxeter_element_of(sys, o);
    FieldPolynomial p = spectral_class(sys, c);
    auto it = std::find_if(out.begin(), out.end(), [&](const SpectralClass& s) {
      return s.polynomial == p;
    });
    if (it == out.end()) {
      out.push_back({std::move(p), {std::move(c)}});
    } else {
      it->elements.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace coxsds
