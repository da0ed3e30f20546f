#include "sperner/labeling.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sperner/rng.hpp"

namespace sperner {

namespace {

constexpr std::uint64_t kMaxLabelingSize = 1'000'000'000;

/// Colors of the k corners of the cell with base b (holds the scratch).
class CornerColors {
public:
  explicit CornerColors(const Labeling& lab)
      : lab_(lab), scratch_(static_cast<std::size_t>(lab.k())) {}

  void load(std::span<const int> b) {
    std::copy(b.begin(), b.end(), scratch_.begin());
  }

  int color(int i) {
    scratch_[static_cast<std::size_t>(i)] += 1;
    int c = lab_.color_at_rank(lab_.lattice().rank_unchecked(scratch_));
    scratch_[static_cast<std::size_t>(i)] -= 1;
    return c;
  }

private:
  const Labeling& lab_;
  Coords scratch_;
};

template <typename F>
Labeling build_labeling(int k, int q, F&& color_of) {
  Labeling lab(k, q);
  std::uint64_t r = 0; // enumeration order is rank order
  lab.lattice().for_each([&](std::span<const int> a) {
    lab.set_color_at_rank(r++, color_of(a));
  });
  return lab;
}

void require_complete(const Labeling& lab) {
  for (std::uint64_t r = 0; r < lab.size(); ++r)
    if (lab.color_at_rank(r) == 0)
      throw std::invalid_argument("labeling has unset colors");
}

/// Visit each monochromatic cell of an admissible labeling together with
/// its packing image b - e_c, verifying injectivity as it goes.
template <typename F>
std::uint64_t walk_mono_packing(const Labeling& lab, F&& visit) {
  if (!is_admissible(lab))
    throw std::invalid_argument("mono packing: labeling not admissible");
  const int k = lab.k();
  const int q = lab.q();
  if (q < 2) return 0; // the single q=1 cell is forced rainbow
  Lattice bases(k, q - 1);
  Lattice images(k, q - 2);
  std::vector<bool> seen(images.size(), false);
  CornerColors corners(lab);
  std::uint64_t mono = 0;
  Coords img(static_cast<std::size_t>(k));
  bases.for_each([&](std::span<const int> b) {
    corners.load(b);
    const int c0 = corners.color(0);
    for (int i = 1; i < k; ++i)
      if (corners.color(i) != c0) return;
    // Every corner except b + e_c0 keeps coordinate c0 equal to b[c0-1],
    // and admissibility forces it positive there.
    if (b[static_cast<std::size_t>(c0 - 1)] <= 0)
      throw std::logic_error("mono packing: admissible mono cell with zero base coordinate");
    std::copy(b.begin(), b.end(), img.begin());
    img[static_cast<std::size_t>(c0 - 1)] -= 1;
    const std::uint64_t r = images.rank_unchecked(img);
    if (seen[r])
      throw std::logic_error("mono packing: image collision; injectivity violated");
    seen[r] = true;
    ++mono;
    visit(b, std::span<const int>(img), c0);
  });
  return mono;
}

} // namespace

Labeling::Labeling(int k, int q) : lattice_(k, q) {
  if (q < 1)
    throw std::invalid_argument("labeling: q must be >= 1");
  if (k > 255)
    throw std::invalid_argument("labeling: k must be <= 255 colors");
  if (lattice_.size() > kMaxLabelingSize)
    throw std::invalid_argument("labeling: lattice too large for dense storage");
  colors_.assign(static_cast<std::size_t>(lattice_.size()), 0);
}

void Labeling::set_color_at_rank(std::uint64_t r, int c) {
  if (c < 1 || c > k())
    throw std::invalid_argument("labeling: color out of range 1..k");
  colors_[r] = static_cast<std::uint8_t>(c);
}

std::uint64_t nonmono_lower_bound(int k, int q) {
  if (k < 2 || q < 1)
    throw std::invalid_argument("nonmono_lower_bound: need k >= 2, q >= 1");
  return binomial(static_cast<std::uint64_t>(q) + k - 3, k - 2);
}

Labeling first_choice(int k, int q) {
  return build_labeling(k, q, [](std::span<const int> a) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > 0) return static_cast<int>(i) + 1;
    return 0; // unreachable for q >= 1
  });
}

Labeling max_coordinate(int k, int q) {
  return build_labeling(k, q, [](std::span<const int> a) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < a.size(); ++i)
      if (a[i] > a[best]) best = i;
    return static_cast<int>(best) + 1;
  });
}

Labeling top_coordinate(int k, int q, bool force) {
  if (!force && (k < 4 || q < k * k))
    throw std::domain_error(
        "top_coordinate: <= 4 colors per cell is proven only for k >= 4 and "
        "q >= k^2; pass force to build outside that range");
  std::vector<int> pi(static_cast<std::size_t>(k));
  return build_labeling(k, q, [&pi, k](std::span<const int> a) {
    std::iota(pi.begin(), pi.end(), 0);
    std::sort(pi.begin(), pi.end(),
              [&a](int i, int j) { return a[i] != a[j] ? a[i] > a[j] : i < j; });
    int t = 0;
    for (int j = 0; j < k; ++j) {
      if (a[static_cast<std::size_t>(pi[static_cast<std::size_t>(j)])] >= k - j)
        t = j + 1;
      else
        break;
    }
    // q >= k^2 forces a_{pi(1)} >= ceil(q/k) >= k, so t >= 1 there; under
    // force, points failing even at j=0 take the largest coordinate.
    const int idx = t >= 1 ? pi[static_cast<std::size_t>(t - 1)] : pi[0];
    return idx + 1;
  });
}

Labeling random_admissible(int k, int q, std::uint64_t seed) {
  std::mt19937_64 g(splitmix64(seed));
  std::vector<int> sup;
  return build_labeling(k, q, [&](std::span<const int> a) {
    sup.clear();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > 0) sup.push_back(static_cast<int>(i) + 1);
    return sup[uniform_below(g, static_cast<std::uint32_t>(sup.size()))];
  });
}

bool is_admissible(const Labeling& lab) {
  bool ok = true;
  std::uint64_t r = 0;
  lab.lattice().for_each([&](std::span<const int> a) {
    const int c = lab.color_at_rank(r++);
    if (c < 1 || a[static_cast<std::size_t>(c - 1)] <= 0) ok = false;
  });
  return ok;
}

LabelingStats compute_stats(const Labeling& lab) {
  require_complete(lab);
  const int k = lab.k();
  const int q = lab.q();

  LabelingStats st;
  st.admissible = is_admissible(lab);
  st.bound = nonmono_lower_bound(k, q);
  st.per_color_mono.assign(static_cast<std::size_t>(k), 0);

  Lattice bases(k, q - 1);
  st.cells = bases.size();
  CornerColors corners(lab);
  std::array<std::uint64_t, 4> mask{}; // bitset over colors 1..255
  bases.for_each([&](std::span<const int> b) {
    corners.load(b);
    mask.fill(0);
    int distinct = 0;
    int c0 = 0;
    for (int i = 0; i < k; ++i) {
      const int c = corners.color(i);
      if (i == 0) c0 = c;
      std::uint64_t& w = mask[static_cast<std::size_t>(c >> 6)];
      const std::uint64_t bit = 1ull << (c & 63);
      if (!(w & bit)) {
        w |= bit;
        ++distinct;
      }
    }
    st.max_colors_per_cell = std::max(st.max_colors_per_cell, distinct);
    if (distinct == 1) {
      ++st.mono;
      ++st.per_color_mono[static_cast<std::size_t>(c0 - 1)];
    } else {
      ++st.nonmono;
    }
  });
  st.meets_bound = st.nonmono >= st.bound;
  return st;
}

std::vector<std::pair<Coords, Coords>> mono_packing_witness(const Labeling& lab) {
  std::vector<std::pair<Coords, Coords>> out;
  walk_mono_packing(lab, [&](std::span<const int> b, std::span<const int> img, int) {
    out.emplace_back(Coords(b.begin(), b.end()), Coords(img.begin(), img.end()));
  });
  return out;
}

std::uint64_t verify_mono_packing(const Labeling& lab) {
  return walk_mono_packing(lab, [](std::span<const int>, std::span<const int>, int) {});
}

RainbowCells find_rainbow_cells(const Labeling& lab) {
  if (lab.k() != 3)
    throw std::invalid_argument("find_rainbow_cells: only defined for k = 3");
  if (!is_admissible(lab))
    throw std::invalid_argument("find_rainbow_cells: labeling not admissible");
  const int q = lab.q();
  RainbowCells rc;

  CornerColors corners(lab);
  Lattice up(3, q - 1);
  up.for_each([&](std::span<const int> b) {
    corners.load(b);
    const int c1 = corners.color(0), c2 = corners.color(1), c3 = corners.color(2);
    if (c1 != c2 && c1 != c3 && c2 != c3) rc.up.emplace_back(b.begin(), b.end());
  });

  if (q >= 2) {
    const Lattice& V = lab.lattice();
    Lattice dn(3, q - 2);
    Coords scratch(3);
    dn.for_each([&](std::span<const int> d) {
      int cols[3];
      int n = 0;
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          std::copy(d.begin(), d.end(), scratch.begin());
          scratch[static_cast<std::size_t>(i)] += 1;
          scratch[static_cast<std::size_t>(j)] += 1;
          cols[n++] = lab.color_at_rank(V.rank_unchecked(scratch));
        }
      }
      if (cols[0] != cols[1] && cols[0] != cols[2] && cols[1] != cols[2])
        rc.down.emplace_back(d.begin(), d.end());
    });
  }
  return rc;
}

} // namespace sperner
