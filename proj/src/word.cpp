#include "surf/word.hpp"

#include <charconv>

namespace surf {

Word parse_word(std::string_view text, Genus g) {
  Word w(g);
  std::size_t i = 0;
  const auto is_sep = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',';
  };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    const std::string token(text.substr(i, j - i));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("malformed token '" + token + "'");
    if (value == 0) throw ParseError("token '0' is not a letter (letters are nonzero)");
    if (value > g.alphabet_size() || value < -g.alphabet_size())
      throw ParseError("token '" + token + "' out of range for genus " +
                       std::to_string(g.value()) + " (expected |value| <= " +
                       std::to_string(g.alphabet_size()) + ")");
    w.push_back(Letter(value));
    i = j;
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.at(i).value());
  }
  return out;
}

Word invert(const Word& w) {
  std::vector<Letter> ls;
  ls.reserve(w.size());
  for (std::size_t i = w.size(); i-- > 0;) ls.push_back(w.at(i).inverse());
  return Word(w.genus(), std::move(ls));
}

Word rotate(const Word& w, long long r) {
  if (w.empty()) return w;
  const long long m = static_cast<long long>(w.size());
  long long s = r % m;
  if (s < 0) s += m;
  std::vector<Letter> ls;
  ls.reserve(w.size());
  for (long long i = 0; i < m; ++i) ls.push_back(w.at(static_cast<std::size_t>((i + s) % m)));
  return Word(w.genus(), std::move(ls));
}

Word concat(const Word& a, const Word& b) {
  if (!(a.genus() == b.genus())) throw std::invalid_argument("genus mismatch in concat");
  std::vector<Letter> ls = a.letters();
  ls.insert(ls.end(), b.letters().begin(), b.letters().end());
  return Word(a.genus(), std::move(ls));
}

Word power(const Word& w, int s) {
  if (s < 0) throw std::invalid_argument("power expects s >= 0");
  Word out(w.genus());
  for (int i = 0; i < s; ++i) out = concat(out, w);
  return out;
}

std::strong_ordering compare_lenlex(const Word& a, const Word& b) {
  if (!(a.genus() == b.genus())) throw std::invalid_argument("genus mismatch in compare_lenlex");
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int ra = letter_rank(a.at(i), a.genus());
    const int rb = letter_rank(b.at(i), a.genus());
    if (ra != rb) return ra <=> rb;
  }
  return std::strong_ordering::equal;
}

}  // namespace surf
