#include <doctest.h>

#include <stdexcept>

#include "sperner/binomial.hpp"

using namespace sperner;

TEST_CASE("binomial small values") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(52, 5) == 2'598'960);
  CHECK(binomial(3, 7) == 0);
}

TEST_CASE("binomial satisfies the Pascal identity") {
  for (std::uint64_t n = 1; n <= 40; ++n)
    for (std::uint64_t r = 1; r <= n; ++r)
      CHECK(binomial(n, r) == binomial(n - 1, r - 1) + binomial(n - 1, r));
}

TEST_CASE("binomial is symmetric") {
  for (std::uint64_t n = 0; n <= 40; ++n)
    for (std::uint64_t r = 0; r <= n; ++r)
      CHECK(binomial(n, r) == binomial(n, n - r));
}

TEST_CASE("binomial overflow is an error, not a wrong value") {
  CHECK_THROWS_AS((void)binomial(70, 35), std::overflow_error);
  CHECK_THROWS_AS((void)binomial(200, 100), std::overflow_error);
  // the largest central coefficient that fits is returned exactly
  CHECK(binomial(62, 31) == 465'428'353'255'261'088ULL);
}

TEST_CASE("composition_count") {
  CHECK(composition_count(3, 5) == 21);
  CHECK(composition_count(4, 3) == 20);
  CHECK(composition_count(2, 0) == 1);
  CHECK(composition_count(7, 49) == 28'989'675);
  CHECK(composition_count(2, 9) == 10);
}

TEST_CASE("BinomialTable matches the direct computation") {
  const BinomialTable t(40, 12);
  for (int n = 0; n <= 40; ++n)
    for (int r = 0; r <= 12; ++r)
      CHECK(t(n, r) == (r <= n ? binomial(n, r) : 0));
}

TEST_CASE("BinomialTable is zero outside its domain") {
  const BinomialTable t(10, 4);
  CHECK(t(-1, 2) == 0);
  CHECK(t(3, -1) == 0);
  CHECK(t(2, 3) == 0);
}
