#include "sperner/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sperner/rng.hpp"

namespace sperner {

namespace {

using Clock = std::chrono::steady_clock;

/// Vertex/cell incidence of H_{k,q} in rank space, sized for search.
struct Instance {
  int k, q;
  Lattice V, B; // vertices and cell bases
  std::uint32_t nv, nb;
  std::vector<std::vector<std::uint8_t>> choices; // admissible colors per vertex
  std::vector<std::uint32_t> order;               // vertex ranks, fewest choices first
  // CSR vertex -> incident cell ranks
  std::vector<std::uint32_t> off;
  std::vector<std::uint32_t> cell;

  static int checked(int k, int q) {
    if (q < 1) throw std::invalid_argument("search: q must be >= 1");
    if (k > 64) throw std::invalid_argument("search: k must be <= 64");
    return k;
  }

  Instance(int k_, int q_, std::uint64_t max_vertices, std::uint64_t max_incidence)
      : k(checked(k_, q_)), q(q_), V(k_, q_), B(k_, q_ - 1) {
    if (V.size() > max_vertices)
      throw std::invalid_argument("search: instance has too many vertices");
    const std::uint64_t incidence = B.size() * static_cast<std::uint64_t>(k);
    if (incidence > max_incidence)
      throw std::invalid_argument("search: instance has too many cell slots");
    nv = static_cast<std::uint32_t>(V.size());
    nb = static_cast<std::uint32_t>(B.size());

    choices.resize(nv);
    std::uint32_t r = 0;
    V.for_each([&](std::span<const int> a) {
      auto& c = choices[r++];
      for (int i = 0; i < k; ++i)
        if (a[static_cast<std::size_t>(i)] > 0)
          c.push_back(static_cast<std::uint8_t>(i + 1));
    });

    order.resize(nv);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
      return choices[x].size() < choices[y].size();
    });

    // A vertex v lies in cell e(v - e_i) for each positive coordinate i, so
    // its degree equals its number of admissible colors.
    off.assign(nv + 1, 0);
    for (std::uint32_t v = 0; v < nv; ++v)
      off[v + 1] = off[v] + static_cast<std::uint32_t>(choices[v].size());
    cell.resize(off[nv]);
    std::vector<std::uint32_t> fill(off.begin(), off.end() - 1);
    Coords corner(static_cast<std::size_t>(k));
    std::uint32_t cb = 0;
    B.for_each([&](std::span<const int> b) {
      std::copy(b.begin(), b.end(), corner.begin());
      for (int i = 0; i < k; ++i) {
        corner[static_cast<std::size_t>(i)] += 1;
        const auto v = static_cast<std::uint32_t>(V.rank_unchecked(corner));
        corner[static_cast<std::size_t>(i)] -= 1;
        cell[fill[v]++] = cb;
      }
      ++cb;
    });
  }

  std::span<const std::uint32_t> cells_of(std::uint32_t v) const {
    return {cell.data() + off[v], cell.data() + off[v + 1]};
  }
};

Labeling to_labeling(int k, int q, const std::vector<std::uint8_t>& colors) {
  Labeling lab(k, q);
  for (std::uint64_t r = 0; r < colors.size(); ++r)
    lab.set_color_at_rank(r, colors[r]);
  return lab;
}

std::vector<std::uint8_t> colors_of(const Labeling& lab) {
  return {lab.colors().begin(), lab.colors().end()};
}

Labeling warm_start(Objective obj, int k, int q) {
  if (obj == Objective::min_nonmono) return first_choice(k, q);
  if (k >= 4 && q >= k * k) return top_coordinate(k, q);
  return max_coordinate(k, q);
}

std::uint64_t objective_value(Objective obj, const LabelingStats& st) {
  return obj == Objective::min_nonmono
             ? st.nonmono
             : static_cast<std::uint64_t>(st.max_colors_per_cell);
}

/// Depth-first branch and bound with a trail-based undo of per-cell color
/// sets. Both objectives are monotone along a branch (colors only get
/// added to cells), so cutting at `partial >= incumbent` is safe.
struct Exhaustive {
  const Instance& inst;
  const Objective obj;
  const SearchOptions& opts;
  const std::uint64_t bound;

  std::vector<std::uint64_t> mask;   // colors present per cell
  std::vector<std::uint8_t> distinct;
  std::vector<std::uint8_t> color;   // current assignment by vertex rank
  std::vector<std::uint32_t> trail;  // cells that gained a color
  std::uint64_t partial_nonmono = 0;
  int running_max = 0;

  std::uint64_t incumbent;
  std::vector<std::uint8_t> best;
  std::uint64_t nodes = 0;
  bool aborted = false;
  bool done = false; // bound_stop fired
  Clock::time_point deadline;

  Exhaustive(const Instance& inst_, Objective obj_, const SearchOptions& opts_,
             std::uint64_t bound_, std::uint64_t warm_value,
             std::vector<std::uint8_t> warm_colors)
      : inst(inst_), obj(obj_), opts(opts_), bound(bound_),
        mask(inst.nb, 0), distinct(inst.nb, 0), color(inst.nv, 0),
        incumbent(warm_value), best(std::move(warm_colors)) {
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(opts.time_budget_seconds));
  }

  std::uint64_t current() const {
    return obj == Objective::min_nonmono
               ? partial_nonmono
               : static_cast<std::uint64_t>(running_max);
  }

  void run() {
    if (opts.bound_stop && incumbent <= bound) {
      done = true;
      return;
    }
    descend(0);
  }

  void descend(std::uint32_t depth) {
    if (done || aborted) return;
    if (depth == inst.nv) {
      if (current() < incumbent) {
        incumbent = current();
        best = color;
        if (opts.bound_stop && incumbent <= bound) done = true;
      }
      return;
    }
    const std::uint32_t v = inst.order[depth];
    const auto cells = inst.cells_of(v);
    for (std::uint8_t c : inst.choices[v]) {
      if (++nodes > opts.node_budget) {
        aborted = true;
        return;
      }
      if ((nodes & 0x1fff) == 0 && Clock::now() > deadline) {
        aborted = true;
        return;
      }
      const std::size_t mark = trail.size();
      const int saved_max = running_max;
      const std::uint64_t bit = 1ull << (c - 1);
      for (std::uint32_t j : cells) {
        if (!(mask[j] & bit)) {
          mask[j] |= bit;
          trail.push_back(j);
          if (++distinct[j] == 2) ++partial_nonmono;
          running_max = std::max(running_max, static_cast<int>(distinct[j]));
        }
      }
      color[v] = c;
      if (!opts.prune || current() < incumbent) descend(depth + 1);
      color[v] = 0;
      while (trail.size() > mark) {
        const std::uint32_t j = trail.back();
        trail.pop_back();
        mask[j] &= ~bit;
        if (distinct[j]-- == 2) --partial_nonmono;
      }
      running_max = saved_max;
      if (done || aborted) return;
    }
  }
};

/// Complete-labeling state for local search: per-cell color counts, the
/// distinct-count histogram, and both objective values, updated in O(k)
/// per recoloring.
struct Climber {
  const Instance& inst;
  std::vector<std::uint8_t> cnt;      // nb x k color multiplicities
  std::vector<std::uint8_t> distinct; // per cell
  std::vector<std::uint32_t> hist;    // cells per distinct value, index 0..k
  std::uint64_t nonmono = 0;
  std::vector<std::uint8_t> color;

  explicit Climber(const Instance& i) : inst(i) {}

  void load(const std::vector<std::uint8_t>& colors) {
    color = colors;
    cnt.assign(static_cast<std::size_t>(inst.nb) * inst.k, 0);
    distinct.assign(inst.nb, 0);
    hist.assign(static_cast<std::size_t>(inst.k) + 1, 0);
    nonmono = 0;
    for (std::uint32_t v = 0; v < inst.nv; ++v)
      for (std::uint32_t j : inst.cells_of(v))
        if (cnt[static_cast<std::size_t>(j) * inst.k + color[v] - 1]++ == 0)
          ++distinct[j];
    for (std::uint32_t j = 0; j < inst.nb; ++j) {
      ++hist[distinct[j]];
      if (distinct[j] >= 2) ++nonmono;
    }
  }

  int max_colors() const {
    for (int d = inst.k; d >= 1; --d)
      if (hist[static_cast<std::size_t>(d)] > 0) return d;
    return 0;
  }

  void recolor(std::uint32_t v, std::uint8_t c) {
    const std::uint8_t old = color[v];
    if (old == c) return;
    for (std::uint32_t j : inst.cells_of(v)) {
      auto* row = cnt.data() + static_cast<std::size_t>(j) * inst.k;
      std::uint8_t& d = distinct[j];
      --hist[d];
      if (d >= 2) --nonmono;
      if (--row[old - 1] == 0) --d;
      if (row[c - 1]++ == 0) ++d;
      ++hist[d];
      if (d >= 2) ++nonmono;
    }
    color[v] = c;
  }

  std::uint64_t value(Objective obj) const {
    return obj == Objective::min_nonmono ? nonmono
                                         : static_cast<std::uint64_t>(max_colors());
  }
};

} // namespace

std::string_view to_string(Objective obj) {
  return obj == Objective::min_nonmono ? "min_nonmono" : "min_max_colors";
}

Objective objective_from_string(std::string_view s) {
  if (s == "min_nonmono") return Objective::min_nonmono;
  if (s == "min_max_colors") return Objective::min_max_colors;
  throw std::invalid_argument("unknown objective: " + std::string(s));
}

std::uint64_t objective_lower_bound(Objective obj, int k, int q) {
  if (obj == Objective::min_nonmono) return nonmono_lower_bound(k, q);
  if (k < 2 || q < 1)
    throw std::invalid_argument("objective_lower_bound: need k >= 2, q >= 1");
  return q == 1 ? static_cast<std::uint64_t>(k) : 2;
}

double log2_search_space(int k, int q) {
  double bits = 0.0;
  Lattice(k, q).for_each([&](std::span<const int> a) {
    int sup = 0;
    for (int x : a)
      if (x > 0) ++sup;
    bits += std::log2(static_cast<double>(sup));
  });
  return bits;
}

SearchResult exhaustive_search(Objective obj, int k, int q, const SearchOptions& opts) {
  Instance inst(k, q, /*max_vertices=*/20'000, /*max_incidence=*/1'000'000);
  const std::uint64_t bound = objective_lower_bound(obj, k, q);
  const double space = log2_search_space(k, q);
  if (!opts.prune &&
      space > std::log2(static_cast<double>(std::max<std::uint64_t>(opts.node_budget, 1))))
    throw std::invalid_argument(
        "search: unpruned search space exceeds the node budget; enable pruning");

  const Labeling warm = warm_start(obj, k, q);
  const std::uint64_t warm_value = objective_value(obj, compute_stats(warm));

  Exhaustive ex(inst, obj, opts, bound, warm_value, colors_of(warm));
  ex.run();

  SearchResult res;
  res.objective = obj;
  res.optimum = ex.incumbent;
  res.nodes_visited = ex.nodes;
  res.bound = bound;
  res.search_space_log2 = space;
  res.proven_optimal = !ex.aborted; // exhausted, or stopped at the proven bound
  res.best = to_labeling(k, q, ex.best);
  return res;
}

SearchResult heuristic_search(Objective obj, int k, int q, const HeuristicOptions& opts) {
  Instance inst(k, q, /*max_vertices=*/2'000'000, /*max_incidence=*/50'000'000);
  if (opts.restarts < 1)
    throw std::invalid_argument("heuristic_search: restarts must be >= 1");

  Climber cl(inst);
  std::mt19937_64 g(splitmix64(opts.seed ^ 0xD1B54A32D192ED03ull));

  std::uint64_t best_value = 0;
  std::vector<std::uint8_t> best;
  std::uint64_t steps_total = 0;

  // With zero steps nothing can move, so the warm start is the result.
  const int restarts = opts.steps_per_restart == 0 ? 1 : opts.restarts;
  for (int r = 0; r < restarts; ++r) {
    // First pass climbs from the warm start; later passes from random.
    const std::uint64_t rs = splitmix64(opts.seed ^ (static_cast<std::uint64_t>(r) *
                                                     0x9E3779B97F4A7C15ull));
    cl.load(colors_of(r == 0 ? warm_start(obj, k, q) : random_admissible(k, q, rs)));
    std::uint64_t cur = cl.value(obj);
    if (r == 0 || cur < best_value) {
      best_value = cur;
      best = cl.color;
    }
    std::uint64_t stall = 0;
    for (std::uint64_t s = 0; s < opts.steps_per_restart; ++s) {
      ++steps_total;
      const auto v = uniform_below(g, inst.nv);
      const auto& ch = inst.choices[v];
      const std::uint8_t c = ch[uniform_below(g, static_cast<std::uint32_t>(ch.size()))];
      const std::uint8_t old = cl.color[v];
      if (c == old) {
        ++stall;
      } else {
        cl.recolor(v, c);
        const std::uint64_t val = cl.value(obj);
        if (val > cur) {
          cl.recolor(v, old); // worsening move: revert
          ++stall;
        } else {
          if (val < cur) {
            stall = 0;
            cur = val;
            if (val < best_value) {
              best_value = val;
              best = cl.color;
            }
          } else {
            ++stall; // plateau moves keep the walk alive but count as stall
          }
        }
      }
      if (stall >= opts.stall_limit) break;
    }
  }

  SearchResult res;
  res.objective = obj;
  res.optimum = best_value;
  res.nodes_visited = steps_total;
  res.bound = objective_lower_bound(obj, k, q);
  res.search_space_log2 = log2_search_space(k, q);
  res.proven_optimal = false;
  res.best = to_labeling(k, q, best);
  return res;
}

} // namespace sperner
