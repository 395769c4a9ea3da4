#include "surf/intersection.hpp"

namespace surf {
namespace {

int mod4g(int x, Genus g) {
  const int m = 4 * g.value();
  int r = x % m;
  if (r < 0) r += m;
  return r;
}

// Component anchors only mean anything relative to a specific representative,
// so reports keep the caller's word when it is already cyclically reduced.
CyclicWord report_representative(const Word& w) {
  if (is_cyclically_reduced(w)) return CyclicWord(w);
  return cyclic_normal_form(w);
}

}  // namespace

CirclePosition vartheta(Letter w, Genus g) {
  const int j = w.index();
  const int parity = (j % 2 == 0) ? 1 : -1;  // (-1)^j
  const int offset = w.is_inverse() ? (1 + parity) * g.value() : (1 - parity) * g.value();
  return CirclePosition{mod4g(j - 1 + offset, g)};
}

int theta(CirclePosition a, CirclePosition b, CirclePosition c, Genus g) {
  const int pa = mod4g(a.value, g), pb = mod4g(b.value, g), pc = mod4g(c.value, g);
  if (pa == pb || pb == pc || pa == pc) return 0;
  return mod4g(pb - pa, g) < mod4g(pc - pa, g) ? 1 : -1;
}

int component_index(const CyclicWord& mu, const CyclicWord& nu, const ComponentData& c) {
  if (is_infinite(c.kind)) return 0;

  const Genus g = mu.genus();
  const auto U = [&](long long k) { return vartheta(mu.cyclic_letter(k), g); };
  const auto Uneg = [&](long long k) { return vartheta(mu.cyclic_letter(k).inverse(), g); };
  const auto V = [&](long long l) { return vartheta(nu.cyclic_letter(l), g); };
  const auto Vneg = [&](long long l) { return vartheta(nu.cyclic_letter(l).inverse(), g); };

  const long long k = c.anchor_k, l = c.anchor_l, q = c.run;
  int t1 = 0, t2 = 0, sign = 1;
  switch (c.kind) {
    case ComponentKind::Isolated:
      t1 = theta(Uneg(k), Vneg(l), U(k + 1), g);
      t2 = theta(U(k + 1), V(l + 1), Uneg(k), g);
      break;
    case ComponentKind::ParallelRun:
      t1 = theta(Uneg(k), Vneg(l), U(k + 1), g);
      t2 = theta(U(k + q + 1), V(l + q + 1), Uneg(k + q), g);
      break;
    case ComponentKind::AntiparallelRun:
      t1 = theta(Uneg(k), V(l + q + 1), U(k + 1), g);
      t2 = theta(U(k + q + 1), Vneg(l), Uneg(k + q), g);
      sign = -1;
      break;
    default:
      return 0;
  }
  if ((t1 + t2) % 2 != 0)
    throw std::logic_error("component index half-sum is not an integer; component data broken");
  return sign * (t1 + t2) / 2;
}

std::vector<IndexedComponent> indexed_components(const CyclicWord& mu, const CyclicWord& nu) {
  std::vector<IndexedComponent> out;
  for (const ComponentData& c : enumerate_components(mu, nu))
    out.push_back(IndexedComponent{c, component_index(mu, nu, c)});
  return out;
}

int essential_class_count(const CyclicWord& mu, const CyclicWord& nu) {
  int count = 0;
  for (const auto& ic : indexed_components(mu, nu))
    if (ic.index != 0) ++count;
  return count;
}

int geometric_intersection(const Word& a, const Word& b) {
  if (!(a.genus() == b.genus()))
    throw std::invalid_argument("genus mismatch in geometric_intersection");
  const CyclicWord mu = cyclic_normal_form(a);
  const CyclicWord nu = cyclic_normal_form(b);
  if (mu.empty() || nu.empty()) return 0;
  return essential_class_count(mu, nu);
}

int geometric_self_intersection(const Word& a) {
  const CyclicWord cw = cyclic_normal_form(a);
  if (cw.empty()) return 0;
  const PrimeDecomposition pd = prime_decomposition(cw);
  const int essential = essential_class_count(cw, cw);
  if (essential % 2 != 0)
    throw std::logic_error("essential self-class count must be even");
  return essential / 2 + pd.exponent - 1;
}

bool is_prime_class(const Word& a) {
  const CyclicWord cw = cyclic_normal_form(a);
  if (cw.empty()) throw std::invalid_argument("trivial class has no prime root");
  return prime_decomposition(cw).exponent == 1;
}

IntersectionReport intersection_report(const Word& a, const Word& b) {
  if (!(a.genus() == b.genus()))
    throw std::invalid_argument("genus mismatch in intersection_report");
  const CyclicWord mu = report_representative(a);
  const CyclicWord nu = report_representative(b);
  IntersectionReport report{0, 0, 0, 0, mu.word(), nu.word(), {}};
  if (mu.empty() || nu.empty()) return report;
  report.exponent_a = prime_decomposition(mu).exponent;
  report.exponent_b = prime_decomposition(nu).exponent;
  report.components = indexed_components(mu, nu);
  for (const auto& ic : report.components)
    if (ic.index != 0) ++report.essential_count;
  report.result = report.essential_count;
  return report;
}

SelfIntersectionReport self_intersection_report(const Word& a) {
  const CyclicWord cw = report_representative(a);
  SelfIntersectionReport report{0, 0, 0, cw.word(), {}};
  if (cw.empty()) return report;
  report.exponent = prime_decomposition(cw).exponent;
  report.components = indexed_components(cw, cw);
  for (const auto& ic : report.components)
    if (ic.index != 0) ++report.essential_count;
  if (report.essential_count % 2 != 0)
    throw std::logic_error("essential self-class count must be even");
  report.result = report.essential_count / 2 + report.exponent - 1;
  return report;
}

}  // namespace surf
