#pragma once

#include <complex>
#include <utility>

#include "surf/word.hpp"

namespace surf {

// Floating-point cross-check of the symbolic pipeline. Generators act on the
// upper half-plane as explicit hyperbolic translations; the composite of the
// maps spelled by a word is the matrix product in reverse letter order
// (composition of Moebius actions reverses matrix multiplication).

/// Real 2x2 matrix of unit determinant, taken up to global sign.
struct MoebiusMap {
  double a = 1, b = 0, c = 0, d = 1;

  double det() const noexcept;  // compensated, exact to a few ulp
  double trace() const noexcept { return a + d; }
  MoebiusMap normalized() const;  // rescales so det == 1
  MoebiusMap inverse() const noexcept { return MoebiusMap{d, -b, -c, a}; }
  std::complex<double> apply(std::complex<double> z) const { return (a * z + b) / (c * z + d); }

  static MoebiusMap identity() noexcept { return MoebiusMap{}; }
};

MoebiusMap operator*(const MoebiusMap& x, const MoebiusMap& y);

/// Max entrywise distance of x from +y or -y, whichever is closer.
double distance_up_to_sign(const MoebiusMap& x, const MoebiusMap& y);

/// Same, divided by the largest entry magnitude (at least 1). Entries of
/// hyperbolic word products grow exponentially with the word length, so
/// agreement of long products is meaningful only relative to their scale.
double relative_distance_up_to_sign(const MoebiusMap& x, const MoebiusMap& y);

/// A point of the boundary circle of the disk model, angle in [0, 2pi).
struct BoundaryPoint {
  double angle = 0;
  std::complex<double> point() const { return std::polar(1.0, angle); }
};

/// The translation delta_j = M_g^{-j} Q_g M_g^j for generator c_j.
MoebiusMap generator_matrix(Genus g, int j);

/// Matrix of the composite map spelled by w (reverse-order product; inverse
/// letters contribute matrix inverses). The empty word gives the identity.
/// The product is not rescaled: entries of hyperbolic products grow
/// exponentially in the word length but stay relatively accurate, whereas
/// ad - bc is dominated by cancellation, so dividing by it would wreck the
/// result. Compare outputs entrywise up to sign.
MoebiusMap word_matrix(const Word& w);

/// Boundary fixed points (expanding, shrinking) of a hyperbolic element,
/// carried to the disk model. The half-plane boundary is identified with the
/// circle by z -> e^{-i pi/2g} (z - i)/(z + i); the rotation aligns the
/// generator axes with the 4g-th root positions used by the index calculus.
/// Throws std::domain_error unless |trace| > 2.
std::pair<BoundaryPoint, BoundaryPoint> axis_endpoints_disk(const MoebiusMap& map, Genus g);

/// Common translation length of the generators:
/// 2 ln(cos(pi/4g) + sqrt(cos(pi/2g))) - 2 ln(sin(pi/4g)).
double translation_length(Genus g);

struct HyperbolicReport {
  double fixed_point_max_error = 0;  // axis endpoints vs the closed-form targets
  double relation_error = 0;         // surface relation as matrices, up to sign
  double translation_length = 0;
};

HyperbolicReport verify_hyperbolic(Genus g);

}  // namespace surf
