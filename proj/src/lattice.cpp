#include "sperner/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sperner {

namespace {

constexpr std::int64_t kMaxKQ = 1'000'000;
constexpr std::uint64_t kMaxMaterialize = 100'000'000;

int checked_table_extent(int k, int q) {
  if (k < 2) throw std::invalid_argument("lattice: k must be >= 2");
  if (q < 0) throw std::invalid_argument("lattice: q must be >= 0");
  if (static_cast<std::int64_t>(k) * std::max(q, 1) > kMaxKQ)
    throw std::invalid_argument("lattice: k*q exceeds the supported limit of 1e6");
  return q + k;
}

} // namespace

Lattice::Lattice(int k, int q)
    : k_(k), q_(q), size_(0), table_(checked_table_extent(k, q), k - 1) {
  size_ = composition_count(k, q);
}

Coords Lattice::first() const {
  Coords a(static_cast<std::size_t>(k_), 0);
  a[0] = q_;
  return a;
}

bool Lattice::next(std::span<int> a) const {
  // Lex-descending successor: take the rightmost positive coordinate among
  // the first k-1, decrement it, and move everything to its right (plus the
  // unit just freed) into the slot immediately after it.
  const int k = k_;
  for (int i = k - 2; i >= 0; --i) {
    if (a[i] > 0) {
      int tail = 1;
      for (int j = i + 1; j < k; ++j) {
        tail += a[j];
        a[j] = 0;
      }
      a[i] -= 1;
      a[i + 1] = tail;
      return true;
    }
  }
  return false;
}

std::uint64_t Lattice::rank(std::span<const int> a) const {
  if (!contains(a)) throw std::invalid_argument("rank: point not in lattice");
  return rank_unchecked(a);
}

std::uint64_t Lattice::rank_unchecked(std::span<const int> a) const {
  // Points preceding a share a prefix and then have a strictly larger
  // coordinate; count them position by position.
  std::uint64_t r = 0;
  int rem = q_;
  for (int i = 0; i < k_ - 1; ++i) {
    const int m = k_ - 1 - i; // slots after position i
    // Choices v > a[i] at position i leave rem - v to distribute; summed in
    // closed form via the hockey-stick identity.
    r += table_(rem - a[i] - 1 + m, m);
    rem -= a[i];
  }
  return r;
}

Coords Lattice::unrank(std::uint64_t r) const {
  if (r >= size_) throw std::invalid_argument("unrank: rank out of range");
  Coords a(static_cast<std::size_t>(k_), 0);
  int rem = q_;
  for (int i = 0; i < k_ - 1; ++i) {
    const int m = k_ - 1 - i;
    int v = rem;
    std::uint64_t before = 0; // points with a larger coordinate at i
    while (v > 0) {
      std::uint64_t c = table_(rem - v + m, m);
      if (c > r) break;
      before = c;
      --v;
    }
    // `before` counts vectors whose i-th coordinate exceeds v.
    a[static_cast<std::size_t>(i)] = v;
    r -= before;
    rem -= v;
  }
  a[static_cast<std::size_t>(k_ - 1)] = rem;
  return a;
}

bool Lattice::contains(std::span<const int> a) const {
  if (static_cast<int>(a.size()) != k_) return false;
  std::int64_t sum = 0;
  for (int x : a) {
    if (x < 0) return false;
    sum += x;
  }
  return sum == q_;
}

std::vector<Coords> Lattice::points() const {
  if (size_ > kMaxMaterialize)
    throw std::invalid_argument("lattice: too many points to materialize");
  std::vector<Coords> out;
  out.reserve(static_cast<std::size_t>(size_));
  for_each([&](std::span<const int> a) { out.emplace_back(a.begin(), a.end()); });
  return out;
}

std::vector<Coords> enumerate_vertices(int k, int q) {
  return Lattice(k, q).points();
}

std::vector<Coords> enumerate_cells(int k, int q) {
  if (q < 1) throw std::invalid_argument("cells: q must be >= 1");
  return Lattice(k, q - 1).points();
}

std::vector<Coords> cell_vertices(std::span<const int> base) {
  std::vector<Coords> out;
  out.reserve(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    Coords v(base.begin(), base.end());
    v[i] += 1;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<int> admissible_colors(std::span<const int> a) {
  std::vector<int> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0) out.push_back(static_cast<int>(i) + 1);
  if (out.empty())
    throw std::invalid_argument("admissible_colors: zero point has no admissible color");
  return out;
}

bool cells_adjacent(std::span<const int> b1, std::span<const int> b2) {
  if (b1.size() != b2.size())
    throw std::invalid_argument("cells_adjacent: dimension mismatch");
  // e(b1) and e(b2) intersect iff b2 = b1 - e_i + e_j for some i != j: the
  // shared vertex is then b1 + e_j = b2 + e_i.
  int plus = 0, minus = 0, diff = 0;
  for (std::size_t i = 0; i < b1.size(); ++i) {
    int d = b2[i] - b1[i];
    if (d == 0) continue;
    ++diff;
    if (d == 1) ++plus;
    else if (d == -1) ++minus;
    else return false;
  }
  return diff == 2 && plus == 1 && minus == 1;
}

std::vector<Coords> enumerate_down_cells(int q) {
  if (q < 2) return {};
  return Lattice(3, q - 2).points();
}

std::vector<Coords> down_cell_vertices(std::span<const int> base) {
  if (base.size() != 3)
    throw std::invalid_argument("down_cell_vertices: base must have k = 3");
  std::vector<Coords> out;
  out.reserve(3);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      Coords v(base.begin(), base.end());
      v[static_cast<std::size_t>(i)] += 1;
      v[static_cast<std::size_t>(j)] += 1;
      out.push_back(std::move(v));
    }
  }
  return out;
}

} // namespace sperner
