#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "surf/grid_svg.hpp"
#include "test_helpers.hpp"

using namespace surf;
using surf::testing::W;

namespace {

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("worked-example grid: ten component glyphs, two labeled") {
  const Genus g(2);
  const CyclicWord mu(W(g, {4, 3, 4, -1}));
  const CyclicWord nu(W(g, {-4, 3, 4, -3}));
  const auto comps = indexed_components(mu, nu);
  const std::string svg = render_grid_svg(comps, 4, 4);
  CHECK(count_occurrences(svg, "class=\"component\"") == 10);
  CHECK(count_occurrences(svg, "<text") == 2);
  CHECK(count_occurrences(svg, ">+1</text>") == 1);
  CHECK(count_occurrences(svg, ">-1</text>") == 1);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.rfind("</svg>") != std::string::npos);
}

TEST_CASE("empty component list still renders the bare lattice") {
  const std::string svg = render_grid_svg({}, 3, 2);
  CHECK(count_occurrences(svg, "class=\"component\"") == 0);
  CHECK(count_occurrences(svg, "<circle") == 6);  // lattice dots only
  CHECK(svg.find("<svg") == 0);
}

TEST_CASE("1x1 grid with one wrap-around component gives a single glyph") {
  const Genus g(2);
  const auto comps = indexed_components(CyclicWord(W(g, {1})), CyclicWord(W(g, {1})));
  REQUIRE(comps.size() == 1);
  const std::string svg = render_grid_svg(comps, 1, 1);
  CHECK(count_occurrences(svg, "class=\"component\"") == 1);
  CHECK(count_occurrences(svg, "<text") == 0);
}

TEST_CASE("emit_grid_svg writes a file and rejects an unwritable path") {
  const Genus g(2);
  const auto comps = indexed_components(CyclicWord(W(g, {1})), CyclicWord(W(g, {2})));
  const std::string path = "test_grid_out.svg";
  emit_grid_svg(comps, 1, 1, path);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(contents == render_grid_svg(comps, 1, 1));
  in.close();
  std::remove(path.c_str());

  CHECK_THROWS_AS(emit_grid_svg(comps, 1, 1, "no_such_dir/out.svg"), std::runtime_error);
}
