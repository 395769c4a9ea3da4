#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "surf/cyclic.hpp"
#include "surf/hyperbolic.hpp"
#include "test_helpers.hpp"

using namespace surf;
using surf::testing::W;

namespace {

constexpr double kPi = std::numbers::pi;

double dilation_factor(int gv) {
  const double x = kPi / (4 * gv);
  return (std::cos(x) + std::sqrt(std::cos(2 * x))) / std::sin(x);
}

// Hyperbolic length of the imaginary-axis segment from i to K^2 i, by
// Simpson quadrature of dt/t; an independent route to the translation length.
double integrated_axis_distance(double upper) {
  const int steps = 20000;
  const double h = (upper - 1.0) / steps;
  double sum = 1.0 + 1.0 / upper;
  for (int i = 1; i < steps; ++i) sum += (i % 2 ? 4.0 : 2.0) / (1.0 + i * h);
  return sum * h / 3.0;
}

}  // namespace

TEST_CASE("dilation factor for genus 2 matches the frozen value") {
  CHECK(dilation_factor(2) == doctest::Approx(4.611581).epsilon(1e-6));
  CHECK(1.0 / dilation_factor(2) == doctest::Approx(0.216846).epsilon(1e-4));
}

TEST_CASE("generator matrices have unit determinant") {
  for (int gv : {2, 3, 4}) {
    const Genus g(gv);
    for (int j = 1; j <= g.alphabet_size(); ++j)
      CHECK(generator_matrix(g, j).det() == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(generator_matrix(Genus(2), 0), std::invalid_argument);
  CHECK_THROWS_AS(generator_matrix(Genus(2), 5), std::invalid_argument);
}

TEST_CASE("axis endpoints of the first generator sit at angles pi and 0") {
  const Genus g(2);
  const auto [expanding, shrinking] = axis_endpoints_disk(generator_matrix(g, 1), g);
  CHECK(shrinking.angle == doctest::Approx(kPi).epsilon(1e-9));
  CHECK(std::min(expanding.angle, 2 * kPi - expanding.angle) == doctest::Approx(0.0).scale(1).epsilon(1e-9));
}

TEST_CASE("axis endpoints match the closed-form boundary positions") {
  for (int gv : {2, 3, 4}) {
    const Genus g(gv);
    for (int j = 1; j <= g.alphabet_size(); ++j) {
      const auto [expanding, shrinking] = axis_endpoints_disk(generator_matrix(g, j), g);
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      const std::complex<double> target = sign * std::polar(1.0, (j - 1) * kPi / (2 * gv));
      CHECK(std::abs(shrinking.point() - target) < 1e-9);
      CHECK(std::abs(expanding.point() + target) < 1e-9);
    }
  }
}

TEST_CASE("shrinking endpoint of the third generator for genus 2") {
  const Genus g(2);
  const auto [expanding, shrinking] = axis_endpoints_disk(generator_matrix(g, 3), g);
  CHECK(shrinking.angle == doctest::Approx(3 * kPi / 2).epsilon(1e-9));
}

TEST_CASE("inverting a map swaps its axis endpoints") {
  const Genus g(2);
  for (int j = 1; j <= 4; ++j) {
    const MoebiusMap m = generator_matrix(g, j);
    const auto [e1, s1] = axis_endpoints_disk(m, g);
    const auto [e2, s2] = axis_endpoints_disk(m.inverse(), g);
    CHECK(std::abs(e1.point() - s2.point()) < 1e-9);
    CHECK(std::abs(s1.point() - e2.point()) < 1e-9);
  }
}

TEST_CASE("non-hyperbolic input is rejected") {
  const Genus g(2);
  CHECK_THROWS_AS(axis_endpoints_disk(MoebiusMap::identity(), g), std::domain_error);
  const double t = 0.3;
  const MoebiusMap elliptic{std::cos(t), std::sin(t), -std::sin(t), std::cos(t)};
  CHECK_THROWS_AS(axis_endpoints_disk(elliptic, g), std::domain_error);
}

TEST_CASE("word_matrix basics") {
  const Genus g(2);
  CHECK(distance_up_to_sign(word_matrix(Word(g)), MoebiusMap::identity()) < 1e-15);
  CHECK(distance_up_to_sign(word_matrix(W(g, {1, -1})), MoebiusMap::identity()) < 1e-10);
}

TEST_CASE("the surface relation holds as matrices up to sign") {
  for (int gv : {2, 3, 4}) {
    const Genus g(gv);
    Word fwd(g), bwd(g);
    for (int j = 1; j <= g.alphabet_size(); ++j) fwd.push_back(Letter(j));
    for (int j = g.alphabet_size(); j >= 1; --j) bwd.push_back(Letter(j));
    CHECK(distance_up_to_sign(word_matrix(fwd), word_matrix(bwd)) < 1e-8);
  }
}

TEST_CASE("translation length: closed form, consistency, monotonicity") {
  for (int gv : {2, 3, 4}) {
    const double K = dilation_factor(gv);
    CHECK(translation_length(Genus(gv)) == doctest::Approx(2 * std::log(K)).epsilon(1e-12));
    CHECK(std::abs(translation_length(Genus(gv)) - integrated_axis_distance(K * K)) < 1e-9);
  }
  CHECK(translation_length(Genus(2)) == doctest::Approx(3.057142).epsilon(1e-5));
  CHECK(translation_length(Genus(3)) > translation_length(Genus(2)));
}

TEST_CASE("reduction preserves the holonomy matrix up to sign") {
  std::mt19937_64 rng(987);
  for (int gv : {2, 3, 4}) {
    const Genus g(gv);
    for (int trial = 0; trial < 120; ++trial) {
      const Word w = surf::testing::random_word(rng, g, 12);
      CHECK(relative_distance_up_to_sign(word_matrix(w), word_matrix(normal_form(w))) < 1e-6);
    }
  }
}

TEST_CASE("rotating a cyclic word preserves the trace magnitude") {
  std::mt19937_64 rng(654);
  const Genus g(2);
  for (int trial = 0; trial < 60; ++trial) {
    const CyclicWord cw = surf::testing::random_cyclic_word(rng, g, 10);
    const double t0 = std::abs(word_matrix(cw.word()).trace());
    for (std::size_t r = 1; r < cw.size(); ++r) {
      const double tr = std::abs(word_matrix(rotate(cw.word(), static_cast<long long>(r))).trace());
      CHECK(t0 == doctest::Approx(tr).epsilon(1e-6));
    }
  }
}

TEST_CASE("verify_hyperbolic reports small errors") {
  for (int gv : {2, 3, 4}) {
    const auto report = verify_hyperbolic(Genus(gv));
    CHECK(report.fixed_point_max_error < 1e-9);
    CHECK(report.relation_error < 1e-8);
    CHECK(report.translation_length == doctest::Approx(2 * std::log(dilation_factor(gv))));
  }
}
