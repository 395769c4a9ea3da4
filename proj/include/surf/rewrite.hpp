#pragma once

#include <optional>
#include <random>
#include <vector>

#include "surf/word.hpp"

namespace surf {

// The rewriting system has eight rule families over c_1..c_{2g}:
//   (1) c_j (c_{j-1}..c_1 c_{2g}^-1..c_{j+1}^-1)^s c_j^-1  ->  (c_{j+1}^-1..c_{2g}^-1 c_1..c_{j-1})^s
//   (2) c_j (c_{j+1}..c_{2g} c_1^-1..c_{j-1}^-1)^s c_j^-1  ->  (c_{j-1}^-1..c_1^-1 c_{2g}..c_{j+1})^s
//   (3) c_{2g}^-1..c_1^-1                                  ->  c_1^-1..c_{2g}^-1
//   (4) c_1..c_{2g}                                        ->  c_{2g}..c_1
//   (5) c_i^-1..c_{2g}^-1 c_1..c_{i-1}                     ->  c_{i-1}..c_1 c_{2g}^-1..c_i^-1
//   (6) c_{i-1}^-1..c_1^-1 c_{2g}..c_i                     ->  c_i..c_{2g} c_1^-1..c_{i-1}^-1
//   (7) c_i^-1 c_i                                         ->  (empty)
//   (8) c_i c_i^-1                                         ->  (empty)
// Families 1, 2 have j in [2, 2g] and all s >= 1; families 5, 6 have
// i in [2, 2g]; families 7, 8 have i in [1, 2g]. Every left-hand side is
// strictly greater than its replacement under compare_lenlex, so rewriting
// terminates, and the system is closed under compositions (see basis_check),
// so every word has a unique reduced form.

/// Identifies one rule instance. j is the generator parameter (0 for
/// families 3 and 4); s is the repetition count (0 except families 1 and 2).
struct RuleId {
  int family = 0;
  int j = 0;
  int s = 0;
  friend bool operator==(const RuleId&, const RuleId&) noexcept = default;
};

struct RuleInstance {
  RuleId id;
  Word leading;
  Word replacement;
};

/// An occurrence of a rule's leading word inside some word.
struct RuleMatch {
  RuleId id;
  std::size_t start = 0;
  std::size_t span = 0;
  friend bool operator==(const RuleMatch&, const RuleMatch&) noexcept = default;
};

/// Builds the explicit rule instance; throws on an illegal (family, j, s).
RuleInstance rule_instance(int family, int j, int s, Genus g);

/// Match starting exactly at pos, if any. At most one rule can match at a
/// given position; families 1 and 2 are detected by scanning maximal
/// repetitions of their periodic block, so the infinite families never need
/// to be materialized.
std::optional<RuleMatch> match_at(const Word& w, std::size_t pos);

std::optional<RuleMatch> find_leftmost_match(const Word& w);
std::optional<RuleMatch> find_rightmost_match(const Word& w);
std::vector<RuleMatch> all_matches(const Word& w);

/// Replaces the matched span by the rule's replacement. Throws if the match
/// is stale (the subword no longer equals the rule's leading word).
Word apply_match(const Word& w, const RuleMatch& m);

/// The unique reduced form of w, by repeated leftmost rewriting.
Word normal_form(const Word& w);

/// Same fixed point reached by always rewriting the rightmost match; used to
/// exercise confluence.
Word normal_form_rightmost(const Word& w);

/// Same fixed point reached by rewriting a uniformly random match each step.
Word normal_form_random(const Word& w, std::mt19937_64& rng);

/// True iff w contains no leading word.
bool is_reduced(const Word& w);

}  // namespace surf
