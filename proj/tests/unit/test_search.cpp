#include <doctest.h>

#include <stdexcept>
#include <tuple>

#include "sperner/search.hpp"

using namespace sperner;

namespace {

void check_witness(const SearchResult& res) {
  REQUIRE(res.best.has_value());
  CHECK(is_admissible(*res.best));
  const LabelingStats s = compute_stats(*res.best);
  const std::uint64_t value = res.objective == Objective::min_nonmono
                                  ? s.nonmono
                                  : static_cast<std::uint64_t>(s.max_colors_per_cell);
  CHECK(value == res.optimum);
}

} // namespace

TEST_CASE("objective names round-trip") {
  CHECK(to_string(Objective::min_nonmono) == "min_nonmono");
  CHECK(objective_from_string("min_max_colors") == Objective::min_max_colors);
  CHECK_THROWS_AS((void)objective_from_string("nope"), std::invalid_argument);
}

TEST_CASE("search space size is reported exactly") {
  // 3 corners with 1 admissible color, 3 edge midpoints with 2: 8 labelings
  CHECK(log2_search_space(3, 2) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("lower bounds") {
  CHECK(objective_lower_bound(Objective::min_nonmono, 3, 5) == 5);
  CHECK(objective_lower_bound(Objective::min_max_colors, 5, 1) == 5);
  CHECK(objective_lower_bound(Objective::min_max_colors, 3, 5) == 2);
}

TEST_CASE("exhaustive min_nonmono proves the packing bound tight") {
  for (const auto [k, q, optimum] : {std::tuple{3, 2, 2ULL},
                                     {3, 3, 3ULL},
                                     {3, 4, 4ULL},
                                     {4, 2, 3ULL},
                                     {4, 3, 6ULL}}) {
    const SearchResult res = exhaustive_search(Objective::min_nonmono, k, q);
    CHECK(res.proven_optimal);
    CHECK(res.optimum == optimum);
    CHECK(res.bound == optimum);
    check_witness(res);
  }
}

TEST_CASE("exhaustive min_max_colors") {
  for (const auto [k, q, optimum] : {std::tuple{3, 2, 2ULL},
                                     {3, 3, 2ULL},
                                     {3, 4, 2ULL},
                                     {4, 2, 3ULL},
                                     {4, 3, 2ULL}}) {
    const SearchResult res = exhaustive_search(Objective::min_max_colors, k, q);
    CHECK(res.proven_optimal);
    CHECK(res.optimum == optimum);
    check_witness(res);
  }
  // a single cell forces all k colors
  for (int k = 3; k <= 5; ++k) {
    const SearchResult res = exhaustive_search(Objective::min_max_colors, k, 1);
    CHECK(res.proven_optimal);
    CHECK(res.optimum == static_cast<std::uint64_t>(k));
  }
}

TEST_CASE("pruning changes the node count, never the answer") {
  for (const auto [k, q] : {std::pair{3, 2}, {3, 3}, {4, 2}}) {
    for (const Objective obj :
         {Objective::min_nonmono, Objective::min_max_colors}) {
      SearchOptions pruned;
      SearchOptions plain;
      plain.prune = false;
      const SearchResult a = exhaustive_search(obj, k, q, pruned);
      const SearchResult b = exhaustive_search(obj, k, q, plain);
      CHECK(a.proven_optimal);
      CHECK(b.proven_optimal);
      CHECK(a.optimum == b.optimum);
      check_witness(a);
      check_witness(b);
    }
  }
}

TEST_CASE("unpruned search beyond the node budget is refused up front") {
  SearchOptions opts;
  opts.prune = false;
  opts.node_budget = 1'000; // (3,4) has 13824 admissible labelings
  CHECK_THROWS_AS(
      (void)exhaustive_search(Objective::min_nonmono, 3, 4, opts),
      std::invalid_argument);
}

TEST_CASE("node budget exhaustion returns the incumbent unproven") {
  SearchOptions opts;
  opts.node_budget = 50;
  const SearchResult res =
      exhaustive_search(Objective::min_nonmono, 4, 3, opts);
  CHECK_FALSE(res.proven_optimal);
  CHECK(res.optimum >= res.bound);
  check_witness(res); // warm start is still a valid witness
}

TEST_CASE("bound_stop proves optimality early when the bound is attained") {
  SearchOptions full;
  SearchOptions stop;
  stop.bound_stop = true;
  const SearchResult a = exhaustive_search(Objective::min_nonmono, 3, 4, full);
  const SearchResult b = exhaustive_search(Objective::min_nonmono, 3, 4, stop);
  CHECK(a.proven_optimal);
  CHECK(b.proven_optimal);
  CHECK(a.optimum == b.optimum);
  CHECK(b.nodes_visited < a.nodes_visited);
}

TEST_CASE("search is deterministic") {
  const SearchResult a = exhaustive_search(Objective::min_nonmono, 3, 3);
  const SearchResult b = exhaustive_search(Objective::min_nonmono, 3, 3);
  CHECK(a.optimum == b.optimum);
  CHECK(a.nodes_visited == b.nodes_visited);
  CHECK(a.best->colors() == b.best->colors());
}

TEST_CASE("heuristic with zero steps returns the initializer") {
  HeuristicOptions opts;
  opts.steps_per_restart = 0;
  const SearchResult mc =
      heuristic_search(Objective::min_max_colors, 4, 16, opts);
  CHECK_FALSE(mc.proven_optimal);
  CHECK(mc.optimum == 4); // top_coordinate initializer
  check_witness(mc);

  const SearchResult nm = heuristic_search(Objective::min_nonmono, 3, 5, opts);
  CHECK(nm.optimum == 5); // first_choice initializer is already optimal
  check_witness(nm);
}

TEST_CASE("heuristic improves or matches its initializer, never violates the bound") {
  HeuristicOptions opts;
  opts.restarts = 3;
  opts.steps_per_restart = 2'000;
  opts.seed = 0;
  const SearchResult res = heuristic_search(Objective::min_max_colors, 3, 6, opts);
  CHECK(res.optimum >= res.bound);
  CHECK(res.optimum <= 3); // max_coordinate initializer gives at most 3 here
  check_witness(res);

  const SearchResult again = heuristic_search(Objective::min_max_colors, 3, 6, opts);
  CHECK(res.optimum == again.optimum);
  CHECK(res.best->colors() == again.best->colors());
}
