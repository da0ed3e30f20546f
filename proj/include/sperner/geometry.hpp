#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sperner {

/// Ambient coordinates of a point of the regular simplex
/// Delta_k = conv(e_1, ..., e_k) in R^k: x >= 0, sum x_i = 1.
using SimplexPoint = std::vector<double>;

/// Barycenter (1/k, ..., 1/k).
SimplexPoint barycenter(int k);

/// Scale to unit sum and check non-negativity; throws std::invalid_argument
/// on negative coordinates, a non-positive sum, or k < 2.
SimplexPoint normalized_simplex_point(std::span<const double> x);

/// Base point of a Voronoi-type partition of Delta_k: part i collects the
/// points where x_i - z_i is maximal. Requires z strictly interior.
struct VoronoiSpec {
  explicit VoronoiSpec(std::span<const double> z_raw);
  int k() const { return static_cast<int>(z.size()); }
  SimplexPoint z;
  double min_z; // interior margin, > 0
};

struct PartitionAssignment {
  int part;   // 1-based; smallest index on exact tie
  double gap; // largest minus second largest of x_j - z_j; 0 on the separating set
};

/// part = argmax_i (x_i - z_i); the separating set is exactly {gap == 0}.
PartitionAssignment classify(std::span<const double> x, const VoronoiSpec& spec);

/// Sampled certificate that the partition never assigns a point to a part
/// where its coordinate vanishes: the argmax value is >= the mean of
/// x_j - z_j = 0, so x_i >= z_i > 0 for interior z. Checks that inequality
/// on `samples` uniform points; deterministic in seed.
bool is_sperner_admissible_partition(const VoronoiSpec& spec,
                                     std::uint64_t samples = 10'000,
                                     std::uint64_t seed = 0);

/// (k-1)-dimensional measure of Delta_k: sqrt(k)/(k-1)!.
double simplex_volume(int k);

/// Height of Delta_k over a facet: sqrt(k/(k-1)).
double simplex_height(int k);

/// Minkowski content of the separating set of any Voronoi-type partition
/// with interior z: sqrt(k/2)/(k-2)! = (k-1)/sqrt(2) * simplex_volume(k).
/// For k = 2 this is 1 (a single point).
double separating_set_content_exact(int k);

/// Closed-form (k-1)-volume of the eps-neighborhood of the separating set
/// for z = barycenter: (1 - (1 - eps*sqrt(2))^(k-1)) * simplex_volume(k).
/// Requires 0 <= eps and eps*sqrt(2) < 1/k.
double eps_neighborhood_volume_exact(int k, double eps);

/// Monte Carlo estimate of the separating set's Minkowski content.
struct MeasureReport {
  int k = 0;
  SimplexPoint z;
  double eps = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t hits = 0;            // samples with gap <= eps*sqrt(2)
  double neighborhood_volume = 0;    // hit fraction x simplex_volume(k)
  double content_estimate = 0;       // neighborhood_volume / (2 eps)
  double exact = 0;                  // separating_set_content_exact(k)
  double std_error = 0;              // binomial std dev propagated to the estimate
  double sigmas_off = 0;             // (content_estimate - exact)/std_error; NaN if 0/0
};

/// Sample uniform points of Delta_k and test gap <= eps*sqrt(2), the exact
/// eps-neighborhood membership for Voronoi-type partitions. Sampling is
/// split into fixed 65536-sample blocks with per-block derived seeds and a
/// block-ordered reduction, so the result is identical for any worker
/// count. Requires samples >= 1, eps > 0, and eps*sqrt(2) < min_i z_i.
MeasureReport mc_minkowski_content(const VoronoiSpec& spec, double eps,
                                   std::uint64_t samples, std::uint64_t seed,
                                   int workers = 1);

/// The shrinking construction that turns the open cover into disjoint
/// closed parts: with eps' = eps*sqrt(2),
///   S_eps  = { x : gap(x) <= eps' }            (neighborhood of the cut)
///   A'_i   = { x : x_i - z_i > eps' + max_{l != i} (x_l - z_l) }
///   A''_i  = A'_i - eps' e_i, pairwise disjoint subsets of (1-eps')Delta_k.
class ShrunkPartition {
public:
  ShrunkPartition(const VoronoiSpec& spec, double eps);

  double eps() const { return eps_; }
  double eps_prime() const { return eps_prime_; }
  const VoronoiSpec& spec() const { return spec_; }

  bool in_s_eps(std::span<const double> x) const;
  /// 1-based part index with x in A'_part, or 0 when x is in S_eps.
  int a_prime_part(std::span<const double> x) const;
  /// Membership of a point y (coordinates sum to 1 - eps') in A''_i.
  bool in_a_dprime(std::span<const double> y, int i) const;

  struct Verification {
    std::uint64_t samples = 0;
    std::uint64_t s_eps_hits = 0;
    std::uint64_t union_prime_hits = 0;     // always samples - s_eps_hits
    std::uint64_t containment_violations = 0; // A''_i sample outside (1-eps')Delta_k
    std::uint64_t disjoint_violations = 0;    // A''_i overlapping A''_j
    double s_eps_volume = 0;
    double union_prime_volume = 0;
    bool ok = false;
  };

  /// Sampled check of the construction's two claims (disjointness and
  /// containment) plus the exact complementarity of S_eps and union A'_i.
  Verification verify(std::uint64_t samples, std::uint64_t seed) const;

private:
  VoronoiSpec spec_;
  double eps_;
  double eps_prime_;
};

/// Unit-square contrast: the 4-part Voronoi partition's separating set (the
/// "+" cross) has length 2, while a family of valid 4-part partitions has
/// separating length sqrt(2)(1 + delta) -> sqrt(2). Geometry of the family:
/// B_1, B_3 are the corner triangles {x+y <= delta} and {x+y >= 2-delta};
/// the remaining band splits along the main diagonal y = x into B_2, B_4.
/// Its cut is two corner segments of length delta*sqrt(2) each plus the
/// diagonal core of length (1-delta)*sqrt(2). All lengths are computed from
/// segment endpoints, not from the closed form.
struct SquareDemo {
  double voronoi_length = 0;   // 2.0
  double diagonal_infimum = 0; // sqrt(2), the delta -> 0 limit
  std::vector<std::pair<double, double>> family; // (delta, length), decreasing
};

SquareDemo square_demo(std::span<const double> deltas);
SquareDemo square_demo(); // default grid delta = 0.2, 0.1, 0.05, 0.01

/// Separating length of the family member at a given delta in (0, 1/2).
double square_family_length(double delta);

} // namespace sperner
