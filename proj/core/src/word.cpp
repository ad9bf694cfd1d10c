#include "coxsds/word.hpp"

#include <cctype>

#include "coxsds/error.hpp"

namespace coxsds {

Word Word::one_based(std::initializer_list<int> letters) {
  std::vector<int> out;
  for (int s : letters) out.push_back(s - 1);
  return Word(std::move(out));
}

Word Word::parse(const Graph& g, std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    if (end > pos) tokens.push_back(text.substr(pos, end - pos));
    pos = end;
  }
  Word w;
  for (auto token : tokens) {
    try {
      w.push_back(g.parse_vertex(token));
    } catch (const InvalidInput&) {
      if (token.size() < 2) throw;
      for (char c : token) w.push_back(g.parse_vertex(std::string_view(&c, 1)));
    }
  }
  return w;
}

std::string Word::to_string(const Graph& g) const {
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k > 0) out += ' ';
    out += g.vertex_name(letters_[k]);
  }
  return out;
}

Word Word::suffix(std::size_t from) const {
  return Word(std::vector<int>(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                               letters_.end()));
}

Word Word::erased(std::size_t a, std::size_t b) const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k != a && k != b) out.push_back(letters_[k]);
  }
  return Word(std::move(out));
}

Word Word::operator+(const Word& other) const {
  auto out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = w.size();
  for (int s : w) h = h * 131 + static_cast<std::size_t>(s) + 1;
  return h;
}

}  // namespace coxsds
