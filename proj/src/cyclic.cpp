#include "surf/cyclic.hpp"

#include <deque>
#include <set>

namespace surf {
namespace {

std::vector<int> key_of(const Word& w) {
  std::vector<int> k;
  k.reserve(w.size());
  for (Letter l : w.letters()) k.push_back(l.value());
  return k;
}

Word least_rotation(const Word& w) {
  Word best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    Word cand = rotate(w, static_cast<long long>(r));
    if (compare_lenlex(cand, best) < 0) best = cand;
  }
  return best;
}

}  // namespace

bool is_cyclically_reduced(const Word& w) {
  if (w.empty()) return true;
  return is_reduced(concat(w, w));
}

CyclicWord cyclic_normal_form(const Word& w) {
  Word cur = normal_form(w);
  for (;;) {
    if (is_cyclically_reduced(cur)) return CyclicWord(least_rotation(cur));

    // Explore the words reachable from cur by normalizing rotations, all of
    // the same length; restart from any strictly shorter word found.
    std::set<std::vector<int>> visited;
    std::deque<Word> queue;
    visited.insert(key_of(cur));
    queue.push_back(cur);
    std::optional<Word> shorter;
    std::optional<Word> done;
    while (!queue.empty() && !shorter && !done) {
      const Word x = queue.front();
      queue.pop_front();
      if (is_cyclically_reduced(x)) {
        done = x;
        break;
      }
      for (std::size_t r = 0; r < x.size(); ++r) {
        const Word rot = rotate(x, static_cast<long long>(r));
        if (is_reduced(rot)) continue;
        Word cand = normal_form(rot);
        if (cand.size() < x.size()) {
          shorter = std::move(cand);
          break;
        }
        auto k = key_of(cand);
        if (visited.insert(std::move(k)).second) queue.push_back(std::move(cand));
      }
    }
    if (done) return CyclicWord(least_rotation(*done));
    if (shorter) {
      cur = *shorter;
      continue;
    }
    // Every conjugacy class has a cyclically reduced representative, so an
    // exhausted component means the rewriting rules are broken.
    throw std::logic_error("cyclic reduction exhausted a component without success");
  }
}

PrimeDecomposition prime_decomposition(const CyclicWord& cw) {
  if (cw.empty()) throw std::invalid_argument("trivial class has no prime root");
  const Word& w = cw.word();
  const std::size_t m = w.size();
  for (std::size_t d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    if (rotate(w, static_cast<long long>(d)) == w) {
      std::vector<Letter> root(w.letters().begin(), w.letters().begin() + static_cast<long>(d));
      return PrimeDecomposition{Word(w.genus(), std::move(root)), static_cast<int>(m / d)};
    }
  }
  return PrimeDecomposition{w, 1};  // unreachable: d = m always matches
}

}  // namespace surf
