#include "coxsds/braid.hpp"

#include <algorithm>
#include <set>

#include "coxsds/error.hpp"

namespace coxsds {

std::vector<Word> braid_neighbors(const CoxeterSystem& sys, const Word& w) {
  std::set<Word> out;
  const auto& letters = w.letters();
  for (std::size_t p = 0; p + 1 < letters.size(); ++p) {
    const int s = letters[p], t = letters[p + 1];
    if (s == t) continue;
    const EdgeLabel label = sys.m(s, t);
    if (label.is_infinite()) continue;
    const auto m = static_cast<std::size_t>(label.value());
    if (p + m > letters.size()) continue;
    bool alternating = true;
    for (std::size_t k = 0; k < m && alternating; ++k) {
      alternating = letters[p + k] == (k % 2 == 0 ? s : t);
    }
    if (!alternating) continue;
    auto next = letters;
    for (std::size_t k = 0; k < m; ++k) next[p + k] = k % 2 == 0 ? t : s;
    out.insert(Word(std::move(next)));
  }
  return {out.begin(), out.end()};
}

std::vector<Word> reduced_expressions(const CoxeterSystem& sys, const Word& w,
                                      const CoxeterCaps& caps) {
  std::set<Word> seen{w};
  std::vector<Word> frontier{w};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& u : frontier) {
      for (auto& v : braid_neighbors(sys, u)) {
        if (seen.contains(v)) continue;
        if (seen.size() >= caps.max_expressions) {
          throw CapExceeded("max_expressions",
                            static_cast<long long>(caps.max_expressions));
        }
        seen.insert(v);
        next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace coxsds
