#include "sperner/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "sperner/rng.hpp"

namespace sperner {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr std::uint64_t kBlock = 65536;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_k(int k) {
  if (k < 2) throw std::invalid_argument("geometry: k must be >= 2");
}

/// Largest and second largest of x_j - z_j, with the smallest argmax index.
PartitionAssignment top_two(std::span<const double> x, std::span<const double> z) {
  int part = 0;
  double top = -std::numeric_limits<double>::infinity();
  double second = top;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - z[i];
    if (d > top) {
      second = top;
      top = d;
      part = static_cast<int>(i) + 1;
    } else if (d > second) {
      second = d;
    }
  }
  return {part, top - second};
}

/// Run fn(block_index, rng, n_samples_in_block) over all blocks on the given
/// number of threads; per-block seeds derive from (seed, block index) alone.
template <typename F>
void for_each_block(std::uint64_t samples, std::uint64_t seed, int workers, F&& fn) {
  const std::uint64_t nblocks = (samples + kBlock - 1) / kBlock;
  std::atomic<std::uint64_t> next{0};
  auto drain = [&] {
    for (;;) {
      const std::uint64_t b = next.fetch_add(1);
      if (b >= nblocks) return;
      std::mt19937_64 g(splitmix64(seed ^ (b * 0x9E3779B97F4A7C15ull)));
      const std::uint64_t n = std::min(kBlock, samples - b * kBlock);
      fn(b, g, n);
    }
  };
  if (workers <= 1) {
    drain();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
  for (auto& t : pool) t.join();
}

} // namespace

SimplexPoint barycenter(int k) {
  check_k(k);
  return SimplexPoint(static_cast<std::size_t>(k), 1.0 / k);
}

SimplexPoint normalized_simplex_point(std::span<const double> x) {
  if (x.size() < 2)
    throw std::invalid_argument("simplex point: need k >= 2 coordinates");
  double sum = 0.0;
  for (double v : x) {
    if (!(v >= 0.0))
      throw std::invalid_argument("simplex point: coordinates must be >= 0");
    sum += v;
  }
  if (!(sum > 0.0))
    throw std::invalid_argument("simplex point: coordinate sum must be positive");
  SimplexPoint out(x.begin(), x.end());
  for (double& v : out) v /= sum;
  return out;
}

VoronoiSpec::VoronoiSpec(std::span<const double> z_raw)
    : z(normalized_simplex_point(z_raw)) {
  min_z = *std::min_element(z.begin(), z.end());
  if (!(min_z > 0.0))
    throw std::invalid_argument("voronoi spec: z must be strictly interior");
}

PartitionAssignment classify(std::span<const double> x, const VoronoiSpec& spec) {
  if (x.size() != spec.z.size())
    throw std::invalid_argument("classify: dimension mismatch");
  return top_two(x, spec.z);
}

bool is_sperner_admissible_partition(const VoronoiSpec& spec,
                                     std::uint64_t samples, std::uint64_t seed) {
  // Analytically, max_j (x_j - z_j) >= (1/k) sum_j (x_j - z_j) = 0, so the
  // assigned part always has x_i >= z_i > 0. The sampled certificate allows
  // the rounding slack of two unit-sum normalizations.
  const auto k = static_cast<std::size_t>(spec.k());
  SimplexPoint x(k);
  bool ok = true;
  for_each_block(samples, seed, 1, [&](std::uint64_t, std::mt19937_64& g, std::uint64_t n) {
    for (std::uint64_t s = 0; s < n && ok; ++s) {
      sample_simplex(g, x);
      const auto pa = classify(x, spec);
      if (!(x[static_cast<std::size_t>(pa.part - 1)] >=
            spec.z[static_cast<std::size_t>(pa.part - 1)] - 1e-9))
        ok = false;
    }
  });
  return ok;
}

double simplex_volume(int k) {
  check_k(k);
  return std::sqrt(static_cast<double>(k)) / factorial(k - 1);
}

double simplex_height(int k) {
  check_k(k);
  return std::sqrt(static_cast<double>(k) / (k - 1));
}

double separating_set_content_exact(int k) {
  check_k(k);
  return std::sqrt(k / 2.0) / factorial(k - 2);
}

double eps_neighborhood_volume_exact(int k, double eps) {
  check_k(k);
  if (!(eps >= 0.0) || !(eps * kSqrt2 < 1.0 / k))
    throw std::invalid_argument(
        "eps_neighborhood_volume_exact: need 0 <= eps and eps*sqrt(2) < 1/k");
  return (1.0 - std::pow(1.0 - eps * kSqrt2, k - 1)) * simplex_volume(k);
}

MeasureReport mc_minkowski_content(const VoronoiSpec& spec, double eps,
                                   std::uint64_t samples, std::uint64_t seed,
                                   int workers) {
  if (samples < 1)
    throw std::invalid_argument("mc_minkowski_content: samples must be >= 1");
  if (!(eps > 0.0) || !(eps * kSqrt2 < spec.min_z))
    throw std::invalid_argument(
        "mc_minkowski_content: need 0 < eps and eps*sqrt(2) < min_i z_i");

  const double eps_prime = eps * kSqrt2;
  const std::uint64_t nblocks = (samples + kBlock - 1) / kBlock;
  std::vector<std::uint64_t> block_hits(nblocks, 0);
  for_each_block(samples, seed, workers,
                 [&](std::uint64_t b, std::mt19937_64& g, std::uint64_t n) {
                   SimplexPoint x(static_cast<std::size_t>(spec.k()));
                   std::uint64_t h = 0;
                   for (std::uint64_t s = 0; s < n; ++s) {
                     sample_simplex(g, x);
                     if (top_two(x, spec.z).gap <= eps_prime) ++h;
                   }
                   block_hits[b] = h;
                 });
  // Block-ordered reduction: identical result for any worker count.
  std::uint64_t hits = 0;
  for (std::uint64_t h : block_hits) hits += h;

  MeasureReport rep;
  rep.k = spec.k();
  rep.z = spec.z;
  rep.eps = eps;
  rep.samples = samples;
  rep.seed = seed;
  rep.hits = hits;
  const double vol = simplex_volume(rep.k);
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  rep.neighborhood_volume = p * vol;
  rep.content_estimate = rep.neighborhood_volume / (2.0 * eps);
  rep.exact = separating_set_content_exact(rep.k);
  const double sigma_p = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  rep.std_error = sigma_p * vol / (2.0 * eps);
  rep.sigmas_off = (rep.content_estimate - rep.exact) / rep.std_error;
  return rep;
}

ShrunkPartition::ShrunkPartition(const VoronoiSpec& spec, double eps)
    : spec_(spec), eps_(eps), eps_prime_(eps * kSqrt2) {
  if (!(eps >= 0.0) || !(eps_prime_ < spec.min_z))
    throw std::invalid_argument(
        "shrink_partition: need 0 <= eps and eps*sqrt(2) < min_i z_i");
}

bool ShrunkPartition::in_s_eps(std::span<const double> x) const {
  return classify(x, spec_).gap <= eps_prime_;
}

int ShrunkPartition::a_prime_part(std::span<const double> x) const {
  const auto pa = classify(x, spec_);
  return pa.gap > eps_prime_ ? pa.part : 0;
}

bool ShrunkPartition::in_a_dprime(std::span<const double> y, int i) const {
  if (i < 1 || i > spec_.k())
    throw std::invalid_argument("in_a_dprime: part index out of range");
  for (double v : y)
    if (!(v >= 0.0)) return false;
  SimplexPoint x(y.begin(), y.end());
  x[static_cast<std::size_t>(i - 1)] += eps_prime_;
  return a_prime_part(x) == i;
}

ShrunkPartition::Verification ShrunkPartition::verify(std::uint64_t samples,
                                                      std::uint64_t seed) const {
  if (samples < 1)
    throw std::invalid_argument("shrink verify: samples must be >= 1");
  Verification v;
  v.samples = samples;
  const auto k = static_cast<std::size_t>(spec_.k());
  SimplexPoint x(k), w(k);
  for_each_block(samples, seed, 1, [&](std::uint64_t, std::mt19937_64& g, std::uint64_t n) {
    for (std::uint64_t s = 0; s < n; ++s) {
      sample_simplex(g, x);
      const int i = a_prime_part(x);
      if (i == 0) {
        ++v.s_eps_hits;
        continue;
      }
      ++v.union_prime_hits;
      // y = x - eps' e_i is the A''_i point this sample witnesses.
      // Containment in (1-eps')Delta_k: only y_i could go negative, and
      // x_i > eps' + (x_l - z_l ... ) >= eps' + something >= ... checked directly.
      if (x[static_cast<std::size_t>(i - 1)] - eps_prime_ < 0.0)
        ++v.containment_violations;
      // Disjointness: y in A''_j for j != i would need w = y + eps' e_j in A'_j.
      std::copy(x.begin(), x.end(), w.begin());
      w[static_cast<std::size_t>(i - 1)] -= eps_prime_;
      for (int j = 1; j <= spec_.k(); ++j) {
        if (j == i) continue;
        w[static_cast<std::size_t>(j - 1)] += eps_prime_;
        if (a_prime_part(w) == j) ++v.disjoint_violations;
        w[static_cast<std::size_t>(j - 1)] -= eps_prime_;
      }
    }
  });
  const double vol = simplex_volume(spec_.k());
  v.s_eps_volume = vol * static_cast<double>(v.s_eps_hits) / static_cast<double>(samples);
  v.union_prime_volume =
      vol * static_cast<double>(v.union_prime_hits) / static_cast<double>(samples);
  v.ok = v.containment_violations == 0 && v.disjoint_violations == 0;
  return v;
}

double square_family_length(double delta) {
  if (!(delta > 0.0) || !(delta < 0.5))
    throw std::invalid_argument("square_family_length: delta must be in (0, 1/2)");
  // Corner cut near (0,0): segment (delta,0)-(0,delta); mirrored near (1,1);
  // diagonal core from (delta/2, delta/2) to (1-delta/2, 1-delta/2).
  const double corner = std::hypot(delta, delta);
  const double core = std::hypot(1.0 - delta, 1.0 - delta);
  return 2.0 * corner + core;
}

SquareDemo square_demo(std::span<const double> deltas) {
  SquareDemo d;
  // Voronoi partition of the unit square by its four corners: the cut is
  // the "+" cross, four segments from the center to the edge midpoints.
  const double cx = 0.5, cy = 0.5;
  d.voronoi_length = std::hypot(cx - 0.0, cy - 0.5) + std::hypot(cx - 1.0, cy - 0.5) +
                     std::hypot(cx - 0.5, cy - 0.0) + std::hypot(cx - 0.5, cy - 1.0);
  d.diagonal_infimum = std::hypot(1.0, 1.0); // the delta -> 0 limit of the family
  d.family.reserve(deltas.size());
  for (double delta : deltas)
    d.family.emplace_back(delta, square_family_length(delta));
  return d;
}

SquareDemo square_demo() {
  const double grid[] = {0.2, 0.1, 0.05, 0.01};
  return square_demo(std::span<const double>(grid));
}

} // namespace sperner
