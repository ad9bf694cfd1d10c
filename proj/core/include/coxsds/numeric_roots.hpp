#pragma once

#include <cstddef>
#include <vector>

#include "coxsds/coxeter.hpp"

namespace coxsds::numeric {

// Floating-point fallback for labels without an exact representation
// (m = 7, 8, ...). Intended for exploration; results are decided with an
// absolute tolerance and carry no exactness guarantee.

inline constexpr double kTolerance = 1e-9;

double two_cos(EdgeLabel m);

using Vector = std::vector<double>;

/// Same coordinate form as the exact apply_generator.
Vector apply_generator(const Graph& g, int i, Vector z);

/// -1, 0, +1 with |x| <= kTolerance treated as zero; throws on mixed signs.
int root_sign(const Vector& z);

std::vector<Vector> root_sequence(const Graph& g, const Word& w);
bool is_reduced(const Graph& g, const Word& w);
Word reduce(const Graph& g, const Word& w);
/// BFS over positive roots, deduplicated within kTolerance.
std::vector<Vector> enumerate_positive_roots(const Graph& g,
                                             std::size_t max_roots = 10000);

}  // namespace coxsds::numeric
