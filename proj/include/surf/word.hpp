#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace surf {

/// Genus of the closed orientable surface. Must be at least 2, so the
/// surface is hyperbolic and carries the alphabet c_1, ..., c_{2g}.
class Genus {
 public:
  explicit Genus(int g) : g_(g) {
    if (g < 2) throw std::invalid_argument("genus must be >= 2");
  }
  int value() const noexcept { return g_; }
  int alphabet_size() const noexcept { return 2 * g_; }
  friend bool operator==(Genus, Genus) noexcept = default;

 private:
  int g_;
};

/// A signed generator: +j stands for c_j, -j for c_j^{-1}.
class Letter {
 public:
  explicit Letter(int value) : v_(value) {
    if (v_ == 0) throw std::invalid_argument("letter value must be nonzero");
  }
  Letter(int index, int sign) : Letter(sign * index) {
    if (index < 1 || (sign != 1 && sign != -1))
      throw std::invalid_argument("letter index must be >= 1 and sign +/-1");
  }

  int value() const noexcept { return v_; }
  int index() const noexcept { return v_ < 0 ? -v_ : v_; }
  int sign() const noexcept { return v_ < 0 ? -1 : 1; }
  bool is_inverse() const noexcept { return v_ < 0; }
  Letter inverse() const noexcept { return Letter(-v_); }

  friend bool operator==(Letter, Letter) noexcept = default;

 private:
  int v_;
};

/// Rank of a letter in the generator order
///   c_{2g}^{-1} > ... > c_1^{-1} > c_1 > c_2 > ... > c_{2g}.
/// Larger rank means larger letter.
inline int letter_rank(Letter w, Genus g) noexcept {
  const int n = g.alphabet_size();
  return w.is_inverse() ? n + w.index() : n + 1 - w.index();
}

/// A word in the letters c_j^{+/-1}; the empty word is the identity.
class Word {
 public:
  explicit Word(Genus g) : genus_(g) {}
  Word(Genus g, std::vector<Letter> letters) : genus_(g), letters_(std::move(letters)) {
    for (Letter l : letters_) check_letter(l);
  }

  Genus genus() const noexcept { return genus_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter at(std::size_t i) const { return letters_.at(i); }

  /// Letter u_k with a 1-based cyclic subscript: any integer k is reduced
  /// modulo the length into [1, size]. Word must be nonempty.
  Letter cyclic_letter(long long k) const {
    if (empty()) throw std::logic_error("cyclic_letter on empty word");
    const long long m = static_cast<long long>(size());
    long long i = (k - 1) % m;
    if (i < 0) i += m;
    return letters_[static_cast<std::size_t>(i)];
  }

  void push_back(Letter l) {
    check_letter(l);
    letters_.push_back(l);
  }

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.genus_ == b.genus_ && a.letters_ == b.letters_;
  }

 private:
  void check_letter(Letter l) const {
    if (l.index() > genus_.alphabet_size())
      throw std::invalid_argument("letter index " + std::to_string(l.index()) +
                                  " out of range for genus " + std::to_string(genus_.value()));
  }

  Genus genus_;
  std::vector<Letter> letters_;
};

/// Error raised by parse_word; the message names the offending token.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a word from whitespace- or comma-separated signed integers
/// ("4 3 4 -1"). Blank text yields the empty word.
Word parse_word(std::string_view text, Genus g);

/// Formats a word back to the signed-integer syntax, single-space separated.
std::string format_word(const Word& w);

/// Inverse word: reversed sequence with every sign flipped.
Word invert(const Word& w);

/// Left rotation by r places (r taken modulo the length; empty word is fixed).
Word rotate(const Word& w, long long r);

Word concat(const Word& a, const Word& b);
Word power(const Word& w, int s);

/// Length-lexicographic comparison: longer words are greater; equal lengths
/// compare letterwise by letter_rank. Total order; throws on genus mismatch.
std::strong_ordering compare_lenlex(const Word& a, const Word& b);

}  // namespace surf
