#include "sperner/binomial.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace sperner {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  // Multiplicative formula; after each division the running value is the
  // exact binomial C(n-r+i, i), so only the 128-bit product can overflow.
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("binomial(" + std::to_string(n) + ", " +
                                std::to_string(r) + ") exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t composition_count(int k, std::int64_t q) {
  if (k < 1) throw std::invalid_argument("composition_count: k must be >= 1");
  if (q < 0) return 0;
  return binomial(static_cast<std::uint64_t>(q) + k - 1, k - 1);
}

BinomialTable::BinomialTable(int max_n, int max_r)
    : max_n_(max_n), stride_(static_cast<std::size_t>(max_r) + 1),
      rows_((static_cast<std::size_t>(max_n) + 1) * stride_, 0) {
  if (max_n < 0 || max_r < 0)
    throw std::invalid_argument("BinomialTable: negative bounds");
  for (int n = 0; n <= max_n; ++n) {
    rows_[static_cast<std::size_t>(n) * stride_] = 1;
    const int top = std::min(n, max_r);
    for (int r = 1; r <= top; ++r) {
      const std::uint64_t a = (*this)(n - 1, r - 1);
      const std::uint64_t b = (*this)(n - 1, r);
      if (a > std::numeric_limits<std::uint64_t>::max() - b)
        throw std::overflow_error("BinomialTable entry exceeds 64 bits");
      rows_[static_cast<std::size_t>(n) * stride_ + r] = a + b;
    }
  }
}

} // namespace sperner
