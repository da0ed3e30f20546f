#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "sperner/labeling.hpp"

namespace sperner {

enum class Objective {
  min_nonmono,     // fewest non-monochromatic cells
  min_max_colors,  // smallest worst-case number of colors in a cell
};

std::string_view to_string(Objective obj);
Objective objective_from_string(std::string_view s);

struct SearchOptions {
  std::uint64_t node_budget = 100'000'000;
  double time_budget_seconds = 60.0;
  /// Cut branches that cannot beat the incumbent. Off = plain enumeration;
  /// an unpruned search whose labeling count exceeds node_budget is refused
  /// up front (std::invalid_argument) instead of run.
  bool prune = true;
  /// Stop as soon as the incumbent matches the proven lower bound. The
  /// result is still optimal (by the bound), but the search space is not
  /// exhausted; leave off to make the run an independent proof.
  bool bound_stop = false;
};

struct HeuristicOptions {
  int restarts = 10;
  std::uint64_t steps_per_restart = 20'000;
  std::uint64_t stall_limit = 2'000; // steps without improvement before restarting
  std::uint64_t seed = 0;
};

struct SearchResult {
  Objective objective = Objective::min_nonmono;
  std::uint64_t optimum = 0;       // best objective value found
  bool proven_optimal = false;
  std::uint64_t nodes_visited = 0; // assignments tried (exhaustive) / steps (heuristic)
  std::uint64_t bound = 0;         // proven lower bound on the objective
  double search_space_log2 = 0;    // log2 of the admissible labeling count
  std::optional<Labeling> best;    // witness attaining `optimum`
};

/// log2 of the number of admissible labelings of V_{k,q}
/// (= sum over vertices of log2 |admissible colors|).
double log2_search_space(int k, int q);

/// Proven lower bound reported alongside search results: the packing bound
/// C(q+k-3, k-2) for min_nonmono; for min_max_colors, k when q = 1 (the
/// single cell's corners have forced distinct colors) and 2 otherwise (an
/// all-mono labeling is impossible: cells sharing a vertex would chain one
/// color across the connected cell graph, contradicting forced corners).
std::uint64_t objective_lower_bound(Objective obj, int k, int q);

/// Exhaustive branch-and-bound over all admissible labelings. Vertices are
/// assigned in order of increasing admissible-color count; the incumbent is
/// warm-started (first_choice for min_nonmono; top_coordinate when proven,
/// else max_coordinate, for min_max_colors); a branch is cut as soon as its
/// partial objective cannot beat the incumbent. The cut never discards a
/// strictly better completion, so an exhausted run proves optimality.
/// Budget exhaustion returns the incumbent with proven_optimal = false.
/// Instances beyond internal size limits throw std::invalid_argument.
SearchResult exhaustive_search(Objective obj, int k, int q,
                               const SearchOptions& opts = {});

/// Hill climbing with restarts. The first pass starts from the same warm
/// start as the exhaustive search (so with steps_per_restart = 0 the result
/// is exactly the initializer's); later passes start from fresh random
/// admissible labelings. Each step recolors a random vertex within its
/// admissible colors and keeps non-worsening moves; a pass ends after
/// stall_limit steps without strict improvement. Deterministic in seed.
/// proven_optimal is always false.
SearchResult heuristic_search(Objective obj, int k, int q,
                              const HeuristicOptions& opts = {});

} // namespace sperner
