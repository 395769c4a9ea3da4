#pragma once

#include <cstddef>
#include <vector>

#include "surf/rewrite.hpp"

namespace surf {

// Machine check that the rule set is closed under compositions. Because every
// rule is a binomial with unit coefficients, the composition formed by an
// overlap (a suffix of one leading word equal to a prefix of another) is a
// difference of two plain words, and it vanishes modulo the system iff the
// two words share a normal form.

/// One composition of intersection: lw(a) = beta * alpha, lw(b) = alpha *
/// beta' with alpha nonempty and shorter than both leading words. The two
/// sides are left = beta * repl(b) and right = repl(a) * beta'.
struct Composition {
  Word left;
  Word right;
  RuleId rule_a;
  RuleId rule_b;
  Word overlap;
};

/// A leading word occurring as a factor of another rule's leading word
/// (composition of including). The system is expected to have none.
struct InclusionOccurrence {
  RuleId outer;
  RuleId inner;
  std::size_t position = 0;
};

/// All rule instances for the given genus with s bounded by max_s in
/// families 1 and 2 (the only infinite families).
std::vector<RuleInstance> basis_rules(Genus g, int max_s);

std::vector<Composition> enumerate_compositions(Genus g, int max_s);
std::vector<InclusionOccurrence> enumerate_inclusions(Genus g, int max_s);

bool composition_reduces_to_zero(const Composition& c);

struct BasisReport {
  std::size_t pairs_checked = 0;
  std::size_t compositions_found = 0;
  std::size_t inclusions_found = 0;
  std::vector<Composition> failures;
  bool ok() const noexcept { return failures.empty() && inclusions_found == 0; }
};

BasisReport verify_basis(Genus g, int max_s);

}  // namespace surf
