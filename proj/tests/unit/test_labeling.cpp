#include <doctest.h>

#include <fstream>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "sperner/io.hpp"
#include "sperner/labeling.hpp"

using namespace sperner;

namespace {

Labeling load_fixture(const char* name) {
  std::ifstream f(std::string(SPERNER_TEST_DATA_DIR) + "/" + name,
                  std::ios::binary);
  REQUIRE(f.good());
  return read_labeling(f);
}

} // namespace

TEST_CASE("nonmono_lower_bound") {
  CHECK(nonmono_lower_bound(3, 5) == 5);
  CHECK(nonmono_lower_bound(4, 7) == 28);
  CHECK(nonmono_lower_bound(2, 9) == 1);
  CHECK(nonmono_lower_bound(2, 1) == 1);
  CHECK(nonmono_lower_bound(6, 20) == 8'855);
}

TEST_CASE("first_choice attains the bound with nonmono cells at b1 = 0") {
  for (const auto [k, q, mono, nonmono] :
       {std::tuple{3, 5, 10ULL, 5ULL}, {4, 7, 56ULL, 28ULL}}) {
    const Labeling lab = first_choice(k, q);
    CHECK(is_admissible(lab));
    const LabelingStats s = compute_stats(lab);
    CHECK(s.admissible);
    CHECK(s.mono == mono);
    CHECK(s.nonmono == nonmono);
    CHECK(s.bound == nonmono);
    CHECK(s.meets_bound);
    CHECK(s.cells == mono + nonmono);

    for (const auto& b : enumerate_cells(k, q)) {
      std::set<int> colors;
      for (const auto& v : cell_vertices(b)) colors.insert(lab.color_at(v));
      CHECK((colors.size() > 1) == (b[0] == 0));
    }
  }
}

TEST_CASE("first_choice on a large instance") {
  const LabelingStats s = compute_stats(first_choice(6, 20));
  CHECK(s.mono == 33'649);
  CHECK(s.nonmono == 8'855);
  CHECK(s.bound == 8'855);
}

TEST_CASE("max_coordinate basics") {
  const Labeling lab = max_coordinate(3, 5);
  CHECK(is_admissible(lab));
  CHECK(lab.color_at(Coords{2, 2, 1}) == 1); // tie goes to the smaller index
  CHECK(lab.color_at(Coords{1, 1, 3}) == 3);
  const LabelingStats s = compute_stats(max_coordinate(5, 25));
  CHECK(s.max_colors_per_cell == 5);
}

TEST_CASE("top_coordinate rule on spot values") {
  const Labeling lab = top_coordinate(4, 16);
  CHECK(lab.color_at(Coords{16, 0, 0, 0}) == 1);
  CHECK(lab.color_at(Coords{4, 4, 4, 4}) == 4);
  CHECK(lab.color_at(Coords{5, 4, 3, 4}) == 3);
  const LabelingStats s = compute_stats(lab);
  CHECK(s.admissible);
  CHECK(s.max_colors_per_cell == 4);
  CHECK(s.mono == 247);
  CHECK(s.nonmono == 569);
}

TEST_CASE("top_coordinate is fenced to its proven domain") {
  CHECK_THROWS_AS((void)top_coordinate(3, 5), std::domain_error);
  CHECK_THROWS_AS((void)top_coordinate(4, 15), std::domain_error);
  CHECK_THROWS_AS((void)top_coordinate(5, 24), std::domain_error);
  const Labeling forced = top_coordinate(3, 5, /*force=*/true);
  CHECK(is_admissible(forced));
}

TEST_CASE("random_admissible is admissible and seed-deterministic") {
  for (const auto [k, q] : {std::pair{3, 5}, {4, 4}}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Labeling lab = random_admissible(k, q, seed);
      CHECK(is_admissible(lab));
    }
    CHECK(random_admissible(k, q, 7).colors() ==
          random_admissible(k, q, 7).colors());
    CHECK(random_admissible(k, q, 7).colors() !=
          random_admissible(k, q, 8).colors());
  }
}

TEST_CASE("admissibility rejects a color off the support") {
  Labeling lab = first_choice(3, 5);
  CHECK(is_admissible(lab));
  lab.set_color_at(Coords{0, 5, 0}, 1);
  CHECK_FALSE(is_admissible(lab));
}

TEST_CASE("q = 1 has a single rainbow cell") {
  const Labeling lab = first_choice(3, 1);
  const LabelingStats s = compute_stats(lab);
  CHECK(s.cells == 1);
  CHECK(s.mono == 0);
  CHECK(s.nonmono == 1);
  CHECK(s.max_colors_per_cell == 3);
}

TEST_CASE("fixture: labeling with a single down rainbow") {
  const Labeling lab = load_fixture("k3q5_one_rainbow.txt");
  const LabelingStats s = compute_stats(lab);
  CHECK(s.admissible);
  CHECK(s.mono == 9);
  CHECK(s.nonmono == 6);
  CHECK(s.per_color_mono == std::vector<std::uint64_t>{3, 3, 3});
  const RainbowCells rc = find_rainbow_cells(lab);
  CHECK(rc.up.empty());
  REQUIRE(rc.down.size() == 1);
  CHECK(rc.down[0] == Coords{1, 1, 1});
}

TEST_CASE("fixture: tight packing witness") {
  const Labeling lab = load_fixture("k3q5_tight_witness.txt");
  const LabelingStats s = compute_stats(lab);
  CHECK(s.admissible);
  CHECK(s.mono == 10);
  CHECK(s.nonmono == 5);
  CHECK(s.per_color_mono == std::vector<std::uint64_t>{2, 4, 4});
  CHECK(s.meets_bound);

  const RainbowCells rc = find_rainbow_cells(lab);
  REQUIRE(rc.up.size() == 1);
  CHECK(rc.up[0] == Coords{2, 1, 1});
  CHECK(rc.down.empty());

  // mono cells inject into V_{3,3} via b -> b - e_color; here all 10
  // points are hit, the equality case of the bound
  const auto witness = mono_packing_witness(lab);
  REQUIRE(witness.size() == 10);
  const Lattice target(3, 3);
  std::set<Coords> images;
  for (const auto& [base, image] : witness) {
    CHECK(target.contains(image));
    Coords expect = base;
    expect[lab.color_at(cell_vertices(base)[0]) - 1] -= 1;
    CHECK(image == expect);
    images.insert(image);
  }
  CHECK(images.size() == 10);
  CHECK(images.size() == target.size());
}

TEST_CASE("packing certificate counts every mono cell") {
  CHECK(verify_mono_packing(first_choice(4, 7)) == 56);
  CHECK(verify_mono_packing(first_choice(3, 5)) == 10);
  CHECK(verify_mono_packing(first_choice(3, 1)) == 0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Labeling lab = random_admissible(4, 4, seed);
    const LabelingStats s = compute_stats(lab);
    CHECK(verify_mono_packing(lab) == s.mono);
    CHECK(s.mono <= Lattice(4, 2).size());
    CHECK(s.nonmono >= s.bound);
  }
}

TEST_CASE("packing certificate requires admissibility") {
  Labeling lab(3, 2); // all colors unset
  CHECK_THROWS_AS((void)mono_packing_witness(lab), std::invalid_argument);
  CHECK_THROWS_AS((void)verify_mono_packing(lab), std::invalid_argument);
}

TEST_CASE("rainbow search requires admissibility") {
  Labeling lab(3, 2);
  CHECK_THROWS_AS((void)find_rainbow_cells(lab), std::invalid_argument);
}

TEST_CASE("every random k=3 labeling has a rainbow triangle") {
  for (int q = 2; q <= 6; ++q)
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const RainbowCells rc = find_rainbow_cells(random_admissible(3, q, seed));
      CHECK(rc.up.size() + rc.down.size() >= 1);
    }
}

TEST_CASE("stats counting identity across instances") {
  for (const auto [k, q] : {std::pair{3, 5}, {4, 4}, {5, 3}, {2, 7}}) {
    const LabelingStats s = compute_stats(first_choice(k, q));
    CHECK(s.cells == Lattice(k, q - 1).size());
    std::uint64_t per_color_total = 0;
    for (const auto c : s.per_color_mono) per_color_total += c;
    CHECK(per_color_total == s.mono);
  }
}
