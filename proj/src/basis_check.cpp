#include "surf/basis_check.hpp"

namespace surf {
namespace {

Word subword(const Word& w, std::size_t from, std::size_t count) {
  std::vector<Letter> ls(w.letters().begin() + static_cast<long>(from),
                         w.letters().begin() + static_cast<long>(from + count));
  return Word(w.genus(), std::move(ls));
}

bool factor_at(const Word& outer, std::size_t pos, const Word& inner) {
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (!(outer.at(pos + i) == inner.at(i))) return false;
  return true;
}

}  // namespace

std::vector<RuleInstance> basis_rules(Genus g, int max_s) {
  if (max_s < 1) throw std::invalid_argument("max_s must be >= 1");
  const int n = g.alphabet_size();
  std::vector<RuleInstance> rules;
  for (int family : {1, 2})
    for (int j = 2; j <= n; ++j)
      for (int s = 1; s <= max_s; ++s) rules.push_back(rule_instance(family, j, s, g));
  rules.push_back(rule_instance(3, 0, 0, g));
  rules.push_back(rule_instance(4, 0, 0, g));
  for (int family : {5, 6})
    for (int i = 2; i <= n; ++i) rules.push_back(rule_instance(family, i, 0, g));
  for (int family : {7, 8})
    for (int i = 1; i <= n; ++i) rules.push_back(rule_instance(family, i, 0, g));
  return rules;
}

std::vector<Composition> enumerate_compositions(Genus g, int max_s) {
  const auto rules = basis_rules(g, max_s);
  std::vector<Composition> out;
  for (const auto& a : rules) {
    for (const auto& b : rules) {
      const std::size_t m = a.leading.size();
      const std::size_t n = b.leading.size();
      const std::size_t tmax = std::min(m, n) - 1;  // proper overlap on both sides
      for (std::size_t t = 1; t <= tmax; ++t) {
        // suffix_t(lw a) == prefix_t(lw b)?
        bool match = true;
        for (std::size_t i = 0; i < t && match; ++i)
          match = a.leading.at(m - t + i) == b.leading.at(i);
        if (!match) continue;
        const Word beta = subword(a.leading, 0, m - t);
        const Word beta_prime = subword(b.leading, t, n - t);
        out.push_back(Composition{concat(beta, b.replacement), concat(a.replacement, beta_prime),
                                  a.id, b.id, subword(b.leading, 0, t)});
      }
    }
  }
  return out;
}

std::vector<InclusionOccurrence> enumerate_inclusions(Genus g, int max_s) {
  const auto rules = basis_rules(g, max_s);
  std::vector<InclusionOccurrence> out;
  for (const auto& outer : rules) {
    for (const auto& inner : rules) {
      if (outer.id == inner.id) continue;
      if (inner.leading.size() > outer.leading.size()) continue;
      for (std::size_t pos = 0; pos + inner.leading.size() <= outer.leading.size(); ++pos)
        if (factor_at(outer.leading, pos, inner.leading))
          out.push_back(InclusionOccurrence{outer.id, inner.id, pos});
    }
  }
  return out;
}

bool composition_reduces_to_zero(const Composition& c) {
  return normal_form(c.left) == normal_form(c.right);
}

BasisReport verify_basis(Genus g, int max_s) {
  BasisReport report;
  const auto rules = basis_rules(g, max_s);
  report.pairs_checked = rules.size() * rules.size();
  for (const auto& comp : enumerate_compositions(g, max_s)) {
    ++report.compositions_found;
    if (!composition_reduces_to_zero(comp)) report.failures.push_back(comp);
  }
  report.inclusions_found = enumerate_inclusions(g, max_s).size();
  return report;
}

}  // namespace surf
