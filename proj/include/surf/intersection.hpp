#pragma once

#include <vector>

#include "surf/components.hpp"
#include "surf/cyclic.hpp"

namespace surf {

// Index calculus on the boundary circle. Every generator axis ends on the
// circle at a 4g-th root position, so the whole computation is exact integer
// arithmetic in Z_{4g}; no floating point is involved.

/// A point of Z_{4g}: position p stands for the boundary point
/// e^{i p pi / (2g)} of the disk model.
struct CirclePosition {
  int value = 0;
  friend bool operator==(CirclePosition, CirclePosition) noexcept = default;
};

/// Position of the shrinking fixed point of the translation spelled by the
/// letter: c_j at j-1+(1-(-1)^j)g, c_j^{-1} at j-1+(1+(-1)^j)g, mod 4g.
/// Negating a boundary point is vartheta of the inverse letter (shift by 2g).
CirclePosition vartheta(Letter w, Genus g);

/// Cyclic orientation of three circle positions: +1 if (a, b, c) is
/// counterclockwise, -1 if clockwise, 0 if any two coincide.
int theta(CirclePosition a, CirclePosition b, CirclePosition c, Genus g);

/// Local intersection number of one component, in {-1, 0, +1}. The component
/// must come from enumerate_components(mu, nu).
int component_index(const CyclicWord& mu, const CyclicWord& nu, const ComponentData& c);

struct IndexedComponent {
  ComponentData data;
  int index = 0;
};

std::vector<IndexedComponent> indexed_components(const CyclicWord& mu, const CyclicWord& nu);

/// Number of components with nonzero index.
int essential_class_count(const CyclicWord& mu, const CyclicWord& nu);

/// Minimal geometric intersection number of the loops spelled by a and b
/// (any words; conjugacy-invariant). Zero if either is nullhomotopic.
int geometric_intersection(const Word& a, const Word& b);

/// Minimal self-intersection number of the loop spelled by a: with the
/// cyclically reduced form written as root^q and N the essential count over
/// the self grid, the result is N/2 + q - 1 (0 for the trivial class).
int geometric_self_intersection(const Word& a);

/// True iff the class of a is not a proper power. Throws on the trivial class.
bool is_prime_class(const Word& a);

struct IntersectionReport {
  int result = 0;
  int essential_count = 0;
  int exponent_a = 0;  // 0 marks a trivial class
  int exponent_b = 0;
  Word representative_a;
  Word representative_b;
  std::vector<IndexedComponent> components;
};

struct SelfIntersectionReport {
  int result = 0;
  int essential_count = 0;
  int exponent = 0;
  Word representative;
  std::vector<IndexedComponent> components;
};

IntersectionReport intersection_report(const Word& a, const Word& b);
SelfIntersectionReport self_intersection_report(const Word& a);

}  // namespace surf
