#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sperner/binomial.hpp"

namespace sperner {

/// Integer coordinate vector of a lattice point or cell base.
using Coords = std::vector<int>;

/// The point set V_{k,q}: integer vectors a >= 0 with sum(a) = q, for the
/// simplex scaled by q. Canonical order is lexicographic descending on the
/// coordinate vector, so (q,0,...,0) is first and (0,...,0,q) is last.
///
/// Ranking and unranking against the canonical order are exact; all counts
/// use 64-bit integers and constructing a lattice whose size would not fit
/// throws std::overflow_error.
class Lattice {
public:
  Lattice(int k, int q);

  int k() const { return k_; }
  int q() const { return q_; }
  std::uint64_t size() const { return size_; }

  /// First point in canonical order: (q, 0, ..., 0).
  Coords first() const;

  /// Advance to the successor in canonical order. Returns false (leaving
  /// the input unchanged) when called on the last point.
  bool next(std::span<int> a) const;

  /// Position of a point in canonical order, in [0, size()).
  std::uint64_t rank(std::span<const int> a) const;

  /// rank() without the membership check, for hot loops whose inputs are
  /// constructed valid.
  std::uint64_t rank_unchecked(std::span<const int> a) const;

  Coords unrank(std::uint64_t r) const;

  /// Membership: non-negative integer coordinates summing to q.
  bool contains(std::span<const int> a) const;

  /// Visit every point in canonical order. The span passed to the callback
  /// is a reused buffer, valid only during the call.
  template <typename F> void for_each(F&& f) const {
    Coords a = first();
    do {
      f(std::span<const int>(a));
    } while (next(a));
  }

  /// All points, materialized in canonical order.
  std::vector<Coords> points() const;

  const BinomialTable& table() const { return table_; }

private:
  int k_;
  int q_;
  std::uint64_t size_;
  BinomialTable table_;
};

/// All points of V_{k,q} in canonical order.
std::vector<Coords> enumerate_vertices(int k, int q);

/// Bases b (sum q-1) of the hyperedges e(b) of H_{k,q}, canonical order.
std::vector<Coords> enumerate_cells(int k, int q);

/// The k vertices b + e_1, ..., b + e_k of the cell with base b, in index
/// order.
std::vector<Coords> cell_vertices(std::span<const int> base);

/// Admissible colors of a point: the 1-based indices of its positive
/// coordinates, ascending. Throws std::invalid_argument for the zero point
/// (q = 0), whose list would be empty.
std::vector<int> admissible_colors(std::span<const int> a);

/// Whether two distinct cell bases share a vertex: they must differ by +1
/// and -1 in exactly two coordinates. A cell is not adjacent to itself.
bool cells_adjacent(std::span<const int> b1, std::span<const int> b2);

/// k=3 only: bases d (sum q-2) of the inverted triangles that complete the
/// up-cells of E_{3,q} to a triangulation of the big triangle.
std::vector<Coords> enumerate_down_cells(int q);

/// The 3 vertices d+e_i+e_j (pairs (1,2), (1,3), (2,3)) of a down cell.
std::vector<Coords> down_cell_vertices(std::span<const int> base);

} // namespace sperner
