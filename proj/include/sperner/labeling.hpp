#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sperner/lattice.hpp"

namespace sperner {

/// A color per lattice point of V_{k,q}, stored densely by canonical rank.
/// Colors are 1..k; 0 means unset. A labeling is admissible when every
/// point's color is one of its admissible colors (a positive coordinate).
class Labeling {
public:
  Labeling(int k, int q);

  int k() const { return lattice_.k(); }
  int q() const { return lattice_.q(); }
  const Lattice& lattice() const { return lattice_; }
  std::uint64_t size() const { return lattice_.size(); }

  int color_at_rank(std::uint64_t r) const { return colors_[r]; }
  int color_at(std::span<const int> a) const {
    return colors_[lattice_.rank(a)];
  }

  void set_color_at_rank(std::uint64_t r, int c);
  void set_color_at(std::span<const int> a, int c) {
    set_color_at_rank(lattice_.rank(a), c);
  }

  const std::vector<std::uint8_t>& colors() const { return colors_; }

private:
  Lattice lattice_;
  std::vector<std::uint8_t> colors_;
};

/// Aggregate cell statistics of a labeling over the hyperedges e(b).
struct LabelingStats {
  bool admissible = false;
  std::uint64_t cells = 0;               // number of hyperedges
  std::uint64_t mono = 0;                // monochromatic cells
  std::uint64_t nonmono = 0;             // cells seeing >= 2 colors
  int max_colors_per_cell = 0;
  std::vector<std::uint64_t> per_color_mono; // index c-1: mono cells of color c
  std::uint64_t bound = 0;               // proven minimum of nonmono
  bool meets_bound = false;              // nonmono >= bound
};

/// Proven lower bound on non-monochromatic cells over all admissible
/// labelings of V_{k,q}: C(q+k-3, k-2).
std::uint64_t nonmono_lower_bound(int k, int q);

/// Label every point with its smallest admissible color. Attains the
/// nonmono lower bound exactly; the nonmono cells are those with b_1 = 0.
Labeling first_choice(int k, int q);

/// Label every point with the index of its largest coordinate (smallest
/// index wins ties). Admissible for every k >= 2, q >= 1.
Labeling max_coordinate(int k, int q);

/// Rank coordinates descending (index breaks ties), find the longest prefix
/// pi(1..t) with a_{pi(j)} >= k-j+1, and label by pi(t). Guarantees at most
/// 4 distinct colors per cell, proven for k >= 4 and q >= k^2; outside that
/// range the builder throws std::domain_error unless force is set, in which
/// case points with no qualifying prefix fall back to pi(1).
Labeling top_coordinate(int k, int q, bool force = false);

/// Independent uniform choice among each point's admissible colors.
/// Deterministic in seed.
Labeling random_admissible(int k, int q, std::uint64_t seed);

/// Whether every point's color is one of its admissible colors.
bool is_admissible(const Labeling& lab);

/// Single-pass statistics over all cells. Runs in O(|cells| * k^2) time and
/// O(k) extra space beyond the labeling itself.
LabelingStats compute_stats(const Labeling& lab);

/// For an admissible labeling, map each monochromatic cell e(b) of color c
/// to b - e_c, a point of V_{k,q-2}. Returns (base, image) pairs in
/// canonical base order. The images are pairwise distinct, which proves
/// mono <= |V_{k,q-2}| and hence the nonmono lower bound on this instance;
/// if distinctness ever failed the library would be wrong, so that case
/// throws std::logic_error. Inadmissible input throws std::invalid_argument.
std::vector<std::pair<Coords, Coords>> mono_packing_witness(const Labeling& lab);

/// Run the packing certificate without materializing it; returns the number
/// of monochromatic cells checked. Same error contract as
/// mono_packing_witness.
std::uint64_t verify_mono_packing(const Labeling& lab);

/// Cells whose vertices carry three distinct colors, k = 3 only: both the
/// upright cells e(b) and the inverted (down) cells of the triangulation.
/// Requires an admissible labeling; at least one rainbow triangle always
/// exists then.
struct RainbowCells {
  std::vector<Coords> up;   // cell bases, sum q-1
  std::vector<Coords> down; // down-cell bases, sum q-2
};

RainbowCells find_rainbow_cells(const Labeling& lab);

} // namespace sperner
