#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "coxsds/graph.hpp"

namespace coxsds {

/// Finite sequence of generator indices (0-based).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}
  static Word one_based(std::initializer_list<int> letters);

  /// Whitespace-separated aliases or 1-based indices, validated against g.
  /// A single token made only of aliases one character long is split per
  /// character ("abdc" == "a b d c").
  static Word parse(const Graph& g, std::string_view text);
  /// Space-separated aliases.
  std::string to_string(const Graph& g) const;

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t k) const { return letters_[k]; }
  const std::vector<int>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(int s) { letters_.push_back(s); }
  Word suffix(std::size_t from) const;
  Word erased(std::size_t a, std::size_t b) const;
  Word operator+(const Word& other) const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

}  // namespace coxsds
