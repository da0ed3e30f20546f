#pragma once

#include <cstdint>
#include <vector>

namespace sperner {

/// Exact binomial coefficient C(n, r).
/// Throws std::overflow_error if the value does not fit in 64 bits;
/// a result that is returned is always exact.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// Number of compositions of q into k non-negative parts, C(q+k-1, k-1).
std::uint64_t composition_count(int k, std::int64_t q);

/// Dense table of C(n, r) for 0 <= n <= max_n, 0 <= r <= max_r.
/// Backs the O(k) rank computation in hot loops.
class BinomialTable {
public:
  BinomialTable(int max_n, int max_r);

  std::uint64_t operator()(int n, int r) const {
    if (n < 0 || r < 0 || r > n) return 0;
    return rows_[static_cast<std::size_t>(n) * stride_ + static_cast<std::size_t>(r)];
  }

  int max_n() const { return max_n_; }

private:
  int max_n_;
  std::size_t stride_;
  std::vector<std::uint64_t> rows_;
};

} // namespace sperner
