#include <doctest.h>

#include <fstream>
#include <stdexcept>
#include <string>

#include "sperner/io.hpp"
#include "sperner/svg.hpp"

using namespace sperner;

namespace {

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

Labeling load_fixture(const char* name) {
  std::ifstream f(std::string(SPERNER_TEST_DATA_DIR) + "/" + name,
                  std::ios::binary);
  REQUIRE(f.good());
  return read_labeling(f);
}

} // namespace

TEST_CASE("first-choice picture has the expected element census") {
  const std::string svg = render_labeling_svg(first_choice(3, 5));
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count_occurrences(svg, "<circle class=\"vertex") == 21);
  CHECK(count_occurrences(svg, "class=\"cell up") == 15);
  CHECK(count_occurrences(svg, "class=\"cell up mono color-1") == 10);
  CHECK(count_occurrences(svg, "nonmono") == 5);
  CHECK(count_occurrences(svg, "class=\"cell down") == 10);
}

TEST_CASE("rendering is byte-stable") {
  const Labeling lab = random_admissible(3, 4, 5);
  CHECK(render_labeling_svg(lab) == render_labeling_svg(lab));
}

TEST_CASE("the one-rainbow fixture is marked exactly once, on a down cell") {
  const std::string svg =
      render_labeling_svg(load_fixture("k3q5_one_rainbow.txt"));
  CHECK(count_occurrences(svg, "rainbow") == 1);
  CHECK(count_occurrences(svg, "class=\"cell down rainbow\"") == 1);
}

TEST_CASE("q = 1 renders a single cell") {
  const std::string svg = render_labeling_svg(first_choice(3, 1));
  CHECK(count_occurrences(svg, "<circle class=\"vertex") == 3);
  CHECK(count_occurrences(svg, "class=\"cell up") == 1);
  CHECK(count_occurrences(svg, "class=\"cell down") == 0);
}

TEST_CASE("only k = 3 can be drawn") {
  CHECK_THROWS_AS((void)render_labeling_svg(first_choice(4, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)render_voronoi_svg(VoronoiSpec(std::vector<double>(4, 0.25))),
      std::invalid_argument);
}

TEST_CASE("voronoi picture shows three cuts and the exact content") {
  const VoronoiSpec spec(barycenter(3));
  const std::string svg = render_voronoi_svg(spec);
  CHECK(count_occurrences(svg, "class=\"cut cut-") == 3);
  CHECK(count_occurrences(svg, "class=\"base-point\"") == 1);
  CHECK(svg.find("1.224745") != std::string::npos);
  CHECK(render_voronoi_svg(spec) == svg);
}
