#include "surf/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace surf {
namespace {

constexpr double kPi = std::numbers::pi;

double scale_factor(Genus g) {
  // (cos(pi/4g) + sqrt(cos(pi/2g))) / sin(pi/4g); the dilation z -> K^2 z is
  // the translation every generator is conjugate to.
  const double x = kPi / (4 * g.value());
  return (std::cos(x) + std::sqrt(std::cos(2 * x))) / std::sin(x);
}

MoebiusMap rotation(double angle) {
  return MoebiusMap{std::cos(angle), std::sin(angle), -std::sin(angle), std::cos(angle)};
}

// Half-plane boundary to disk boundary, with the alignment rotation.
std::complex<double> to_disk(std::complex<double> z, Genus g, bool at_infinity) {
  const std::complex<double> i(0, 1);
  const std::complex<double> cayley = at_infinity ? std::complex<double>(1, 0) : (z - i) / (z + i);
  return std::polar(1.0, -kPi / (2 * g.value())) * cayley;
}

double angle_of(std::complex<double> w) {
  double a = std::arg(w);
  if (a < 0) a += 2 * kPi;
  if (a >= 2 * kPi) a -= 2 * kPi;
  return a;
}

}  // namespace

double MoebiusMap::det() const noexcept {
  // Kahan's compensated 2x2 determinant; the plain ad - bc loses all digits
  // once the entries are large compared with the determinant.
  const double w = b * c;
  const double e = std::fma(-b, c, w);
  const double f = std::fma(a, d, -w);
  return f + e;
}

MoebiusMap MoebiusMap::normalized() const {
  const double dt = det();
  if (!(dt > 0))
    throw std::invalid_argument("cannot normalize matrix with nonpositive determinant");
  const double s = std::sqrt(dt);
  return MoebiusMap{a / s, b / s, c / s, d / s};
}

MoebiusMap operator*(const MoebiusMap& x, const MoebiusMap& y) {
  return MoebiusMap{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                    x.c * y.b + x.d * y.d};
}

double distance_up_to_sign(const MoebiusMap& x, const MoebiusMap& y) {
  const auto dist = [](const MoebiusMap& p, const MoebiusMap& q) {
    return std::max({std::abs(p.a - q.a), std::abs(p.b - q.b), std::abs(p.c - q.c),
                     std::abs(p.d - q.d)});
  };
  const MoebiusMap neg{-y.a, -y.b, -y.c, -y.d};
  return std::min(dist(x, y), dist(x, neg));
}

double relative_distance_up_to_sign(const MoebiusMap& x, const MoebiusMap& y) {
  const double scale = std::max({1.0, std::abs(x.a), std::abs(x.b), std::abs(x.c), std::abs(x.d),
                                 std::abs(y.a), std::abs(y.b), std::abs(y.c), std::abs(y.d)});
  return distance_up_to_sign(x, y) / scale;
}

MoebiusMap generator_matrix(Genus g, int j) {
  if (j < 1 || j > g.alphabet_size())
    throw std::invalid_argument("generator index out of range");
  const double K = scale_factor(g);
  const MoebiusMap q{K, 0, 0, 1 / K};
  const double step = (2 * g.value() - 1) * kPi / (4 * g.value());
  return (rotation(-j * step) * q * rotation(j * step)).normalized();
}

MoebiusMap word_matrix(const Word& w) {
  MoebiusMap p = MoebiusMap::identity();
  for (std::size_t i = w.size(); i-- > 0;) {
    const Letter l = w.at(i);
    const MoebiusMap m = generator_matrix(w.genus(), l.index());
    p = p * (l.is_inverse() ? m.inverse() : m);
  }
  return p;
}

std::pair<BoundaryPoint, BoundaryPoint> axis_endpoints_disk(const MoebiusMap& map, Genus g) {
  const MoebiusMap m = map.normalized();
  if (std::abs(m.trace()) <= 2 + 1e-9)
    throw std::domain_error("not a hyperbolic element (|trace| <= 2)");

  // Fixed points of (az+b)/(cz+d) on the real line: c z^2 + (d-a) z - b = 0.
  constexpr double kEps = 1e-14;
  std::complex<double> fixed[2];
  bool at_inf[2] = {false, false};
  double multiplier[2];
  if (std::abs(m.c) > kEps) {
    const double disc = std::sqrt((m.d - m.a) * (m.d - m.a) + 4 * m.b * m.c);
    // Stable quadratic roots.
    const double p = -(m.d - m.a);
    const double r0 = (p + (p >= 0 ? disc : -disc)) / (2 * m.c);
    const double r1 = (-m.b / m.c) / r0;  // product of roots = -b/c
    fixed[0] = r0;
    fixed[1] = r1;
    for (int i = 0; i < 2; ++i) {
      const double den = m.c * fixed[i].real() + m.d;
      multiplier[i] = 1.0 / (den * den);
    }
  } else {
    // One fixed point at infinity; the map is z -> (a z + b)/d.
    fixed[0] = m.b / (m.d - m.a);
    multiplier[0] = m.a / m.d;
    at_inf[1] = true;
    fixed[1] = 0;
    multiplier[1] = m.d / m.a;
  }

  const int shrink = std::abs(multiplier[0]) < 1 ? 0 : 1;
  const int expand = 1 - shrink;
  const BoundaryPoint pe{angle_of(to_disk(fixed[expand], g, at_inf[expand]))};
  const BoundaryPoint ps{angle_of(to_disk(fixed[shrink], g, at_inf[shrink]))};
  return {pe, ps};
}

double translation_length(Genus g) {
  const double x = kPi / (4 * g.value());
  return 2 * std::log(std::cos(x) + std::sqrt(std::cos(2 * x))) - 2 * std::log(std::sin(x));
}

HyperbolicReport verify_hyperbolic(Genus g) {
  HyperbolicReport report;
  const int n = g.alphabet_size();

  for (int j = 1; j <= n; ++j) {
    const auto [expanding, shrinking] = axis_endpoints_disk(generator_matrix(g, j), g);
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const std::complex<double> target =
        sign * std::polar(1.0, (j - 1) * kPi / (2 * g.value()));
    const double err = std::max(std::abs(shrinking.point() - target),
                                std::abs(expanding.point() + target));
    report.fixed_point_max_error = std::max(report.fixed_point_max_error, err);
  }

  Word forward(g), backward(g);
  for (int j = 1; j <= n; ++j) forward.push_back(Letter(j, +1));
  for (int j = n; j >= 1; --j) backward.push_back(Letter(j, +1));
  report.relation_error = distance_up_to_sign(word_matrix(forward), word_matrix(backward));

  report.translation_length = translation_length(g);
  return report;
}

}  // namespace surf
