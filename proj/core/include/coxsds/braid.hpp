#pragma once

#include <cstddef>
#include <vector>

#include "coxsds/coxeter.hpp"

namespace coxsds {

/// Words obtained by replacing one factor <s,t>_m by <t,s>_m, m = m(s,t)
/// finite, at any position. Sorted, without duplicates.
std::vector<Word> braid_neighbors(const CoxeterSystem& sys, const Word& w);

/// Closure of {w} under braid moves, sorted. Throws CapExceeded past
/// caps.max_expressions. For reduced w this is the set of all reduced
/// expressions of the element.
std::vector<Word> reduced_expressions(const CoxeterSystem& sys, const Word& w,
                                      const CoxeterCaps& caps = {});

}  // namespace coxsds
