#include "surf/rewrite.hpp"

namespace surf {
namespace {

// Appends c_k^{sign} for k = lo..hi ascending; empty when lo > hi.
void append_asc(std::vector<Letter>& out, int lo, int hi, int sign) {
  for (int k = lo; k <= hi; ++k) out.emplace_back(k, sign);
}

// Appends c_k^{sign} for k = hi..lo descending; empty when hi < lo.
void append_desc(std::vector<Letter>& out, int hi, int lo, int sign) {
  for (int k = hi; k >= lo; --k) out.emplace_back(k, sign);
}

// Periodic block of family 1: c_{j-1}..c_1 c_{2g}^-1..c_{j+1}^-1.
std::vector<Letter> family1_block(int j, int n) {
  std::vector<Letter> b;
  append_desc(b, j - 1, 1, +1);
  append_desc(b, n, j + 1, -1);
  return b;
}

// Periodic block of family 2: c_{j+1}..c_{2g} c_1^-1..c_{j-1}^-1.
std::vector<Letter> family2_block(int j, int n) {
  std::vector<Letter> b;
  append_asc(b, j + 1, n, +1);
  append_asc(b, 1, j - 1, -1);
  return b;
}

bool window_equals(const Word& w, std::size_t pos, const std::vector<Letter>& pattern) {
  if (pos + pattern.size() > w.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i)
    if (!(w.at(pos + i) == pattern[i])) return false;
  return true;
}

std::vector<Letter> repeated(const std::vector<Letter>& block, int s) {
  std::vector<Letter> out;
  out.reserve(block.size() * static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) out.insert(out.end(), block.begin(), block.end());
  return out;
}

}  // namespace

RuleInstance rule_instance(int family, int j, int s, Genus g) {
  const int n = g.alphabet_size();
  const auto bad = [&] {
    return std::invalid_argument("illegal rule parameters (family=" + std::to_string(family) +
                                 ", j=" + std::to_string(j) + ", s=" + std::to_string(s) + ")");
  };
  std::vector<Letter> lead, repl;
  switch (family) {
    case 1:
    case 2: {
      if (j < 2 || j > n || s < 1) throw bad();
      const auto block = family == 1 ? family1_block(j, n) : family2_block(j, n);
      lead.emplace_back(j, +1);
      const auto body = repeated(block, s);
      lead.insert(lead.end(), body.begin(), body.end());
      lead.emplace_back(j, -1);
      if (family == 1) {
        std::vector<Letter> r;
        append_asc(r, j + 1, n, -1);
        append_asc(r, 1, j - 1, +1);
        repl = repeated(r, s);
      } else {
        std::vector<Letter> r;
        append_desc(r, j - 1, 1, -1);
        append_desc(r, n, j + 1, +1);
        repl = repeated(r, s);
      }
      break;
    }
    case 3:
      if (j != 0 || s != 0) throw bad();
      append_desc(lead, n, 1, -1);
      append_asc(repl, 1, n, -1);
      break;
    case 4:
      if (j != 0 || s != 0) throw bad();
      append_asc(lead, 1, n, +1);
      append_desc(repl, n, 1, +1);
      break;
    case 5:
      if (j < 2 || j > n || s != 0) throw bad();
      append_asc(lead, j, n, -1);
      append_asc(lead, 1, j - 1, +1);
      append_desc(repl, j - 1, 1, +1);
      append_desc(repl, n, j, -1);
      break;
    case 6:
      if (j < 2 || j > n || s != 0) throw bad();
      append_desc(lead, j - 1, 1, -1);
      append_desc(lead, n, j, +1);
      append_asc(repl, j, n, +1);
      append_asc(repl, 1, j - 1, -1);
      break;
    case 7:
      if (j < 1 || j > n || s != 0) throw bad();
      lead.emplace_back(j, -1);
      lead.emplace_back(j, +1);
      break;
    case 8:
      if (j < 1 || j > n || s != 0) throw bad();
      lead.emplace_back(j, +1);
      lead.emplace_back(j, -1);
      break;
    default:
      throw bad();
  }
  return RuleInstance{RuleId{family, j, s}, Word(g, std::move(lead)), Word(g, std::move(repl))};
}

std::optional<RuleMatch> match_at(const Word& w, std::size_t pos) {
  const std::size_t L = w.size();
  if (pos >= L) return std::nullopt;
  const Genus g = w.genus();
  const int n = g.alphabet_size();
  const Letter a = w.at(pos);

  // Free cancellation first.
  if (pos + 2 <= L && w.at(pos + 1) == a.inverse())
    return RuleMatch{RuleId{a.is_inverse() ? 7 : 8, a.index(), 0}, pos, 2};

  // Fixed-length families, span 2g.
  const std::size_t full = static_cast<std::size_t>(n);
  if (pos + full <= L) {
    const auto try_family = [&](int family, int j) -> std::optional<RuleMatch> {
      const RuleInstance inst = rule_instance(family, j, 0, g);
      if (window_equals(w, pos, inst.leading.letters()))
        return RuleMatch{inst.id, pos, full};
      return std::nullopt;
    };
    if (a.is_inverse()) {
      if (a.index() == n)
        if (auto m = try_family(3, 0)) return m;
      if (a.index() >= 2)
        if (auto m = try_family(5, a.index())) return m;
      if (a.index() + 1 <= n)
        if (auto m = try_family(6, a.index() + 1)) return m;
    } else if (a.index() == 1) {
      if (auto m = try_family(4, 0)) return m;
    }
  }

  // Conjugated power families: c_j, then a maximal run of the periodic
  // block, then c_j^-1. The closing letter never occurs inside a block, so
  // the greedy run determines the unique candidate s.
  if (!a.is_inverse() && a.index() >= 2) {
    const int j = a.index();
    const std::size_t bl = static_cast<std::size_t>(n - 1);
    for (int family : {1, 2}) {
      const auto block = family == 1 ? family1_block(j, n) : family2_block(j, n);
      std::size_t p = pos + 1;
      int count = 0;
      while (p + bl <= L && window_equals(w, p, block)) {
        ++count;
        p += bl;
      }
      if (count >= 1 && p < L && w.at(p) == Letter(j, -1))
        return RuleMatch{RuleId{family, j, count}, pos,
                         static_cast<std::size_t>(count) * bl + 2};
    }
  }
  return std::nullopt;
}

std::optional<RuleMatch> find_leftmost_match(const Word& w) {
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    if (auto m = match_at(w, pos)) return m;
  return std::nullopt;
}

std::optional<RuleMatch> find_rightmost_match(const Word& w) {
  for (std::size_t pos = w.size(); pos-- > 0;)
    if (auto m = match_at(w, pos)) return m;
  return std::nullopt;
}

std::vector<RuleMatch> all_matches(const Word& w) {
  std::vector<RuleMatch> ms;
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    if (auto m = match_at(w, pos)) ms.push_back(*m);
  return ms;
}

Word apply_match(const Word& w, const RuleMatch& m) {
  const RuleInstance inst = rule_instance(m.id.family, m.id.j, m.id.s, w.genus());
  if (m.span != inst.leading.size() || m.start + m.span > w.size() ||
      !window_equals(w, m.start, inst.leading.letters()))
    throw std::invalid_argument("stale rule match");
  std::vector<Letter> out;
  out.reserve(w.size() - m.span + inst.replacement.size());
  for (std::size_t i = 0; i < m.start; ++i) out.push_back(w.at(i));
  out.insert(out.end(), inst.replacement.letters().begin(), inst.replacement.letters().end());
  for (std::size_t i = m.start + m.span; i < w.size(); ++i) out.push_back(w.at(i));
  return Word(w.genus(), std::move(out));
}

Word normal_form(const Word& w) {
  Word cur = w;
  while (auto m = find_leftmost_match(cur)) cur = apply_match(cur, *m);
  return cur;
}

Word normal_form_rightmost(const Word& w) {
  Word cur = w;
  while (auto m = find_rightmost_match(cur)) cur = apply_match(cur, *m);
  return cur;
}

Word normal_form_random(const Word& w, std::mt19937_64& rng) {
  Word cur = w;
  for (;;) {
    const auto ms = all_matches(cur);
    if (ms.empty()) return cur;
    std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
    cur = apply_match(cur, ms[pick(rng)]);
  }
}

bool is_reduced(const Word& w) { return !find_leftmost_match(w).has_value(); }

}  // namespace surf
