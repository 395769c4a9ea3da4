#pragma once

#include "surf/rewrite.hpp"
#include "surf/word.hpp"

namespace surf {

/// True iff every rotation of w is reduced; equivalently, iff w concatenated
/// with itself is reduced. The empty word is cyclically reduced.
bool is_cyclically_reduced(const Word& w);

/// A word that is cyclically reduced; stands for the free homotopy class of
/// the loop it spells. The constructor enforces the invariant.
class CyclicWord {
 public:
  explicit CyclicWord(Word w) : word_(std::move(w)) {
    if (!is_cyclically_reduced(word_))
      throw std::invalid_argument("word is not cyclically reduced: " + format_word(word_));
  }

  const Word& word() const noexcept { return word_; }
  Genus genus() const noexcept { return word_.genus(); }
  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  Letter cyclic_letter(long long k) const { return word_.cyclic_letter(k); }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) noexcept {
    return a.word_ == b.word_;
  }

 private:
  Word word_;
};

/// A cyclically reduced representative of the conjugacy class of w, found by
/// a breadth-first walk: reduce, then repeatedly normalize reducible
/// rotations. A strictly shorter word restarts the walk; equal-length words
/// are deduplicated, so the walk explores a finite set and terminates. The
/// returned representative is the lenlex-least rotation of the word found,
/// which makes the output deterministic (it is not a conjugacy invariant:
/// distinct cyclically reduced words can still be conjugate).
CyclicWord cyclic_normal_form(const Word& w);

struct PrimeDecomposition {
  Word root;
  int exponent = 1;
};

/// Writes cw as root^q with the largest possible q (smallest literal
/// period). Throws on the empty cyclic word.
PrimeDecomposition prime_decomposition(const CyclicWord& cw);

}  // namespace surf
