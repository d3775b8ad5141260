#include <doctest.h>

#include <cmath>

#include "symnorm/errors.hpp"
#include "symnorm/multi_index.hpp"

using namespace symnorm;

TEST_CASE("index_count matches binomial(n+d-1, n-1)") {
  CHECK(index_count(3, 2) == 4.0);
  CHECK(index_count(3, 3) == 10.0);
  CHECK(index_count(4, 2) == 5.0);
  CHECK(index_count(1, 5) == 5.0);
  CHECK(index_count(8, 2) == 9.0);
}

TEST_CASE("binomial is exact at small arguments") {
  CHECK(binomial(4, 2) == 6.0);
  CHECK(binomial(7, 3) == 35.0);
  CHECK(binomial(5, 0) == 1.0);
  CHECK(binomial(5, 5) == 1.0);
  CHECK(binomial(52, 5) == 2598960.0);
}

TEST_CASE("log2_binomial agrees with the exact form and scales up") {
  CHECK(std::abs(log2_binomial(10, 4) - std::log2(210.0)) < 1e-12);
  // Far beyond double-exact territory: d = 1000, n = 2 bound.
  CHECK(std::abs(log2_binomial(1001, 1) - std::log2(1001.0)) < 1e-10);
  CHECK(log2_binomial(2000, 1000) > 1000.0);  // central coefficient is huge
}

TEST_CASE("multinomial coefficients") {
  CHECK(multinomial({2, 1}) == 3.0);
  CHECK(multinomial({1, 1, 1}) == 6.0);
  CHECK(multinomial({0, 3}) == 1.0);
  CHECK(multinomial({4, 0, 0}) == 1.0);
  CHECK(multinomial({2, 2}) == 6.0);
  CHECK(multinomial({2, 0, 1}) == 3.0);
}

TEST_CASE("enumeration is ascending lexicographic and complete") {
  auto idx = enumerate_indices(3, 2);
  REQUIRE(idx.size() == 4);
  CHECK(idx[0] == MultiIndex{0, 3});
  CHECK(idx[1] == MultiIndex{1, 2});
  CHECK(idx[2] == MultiIndex{2, 1});
  CHECK(idx[3] == MultiIndex{3, 0});

  auto idx33 = enumerate_indices(3, 3);
  REQUIRE(idx33.size() == 10);
  for (std::size_t i = 0; i + 1 < idx33.size(); ++i) {
    CHECK(idx33[i] < idx33[i + 1]);  // strictly ascending lexicographic
  }
  for (const auto& j : idx33) {
    int sum = 0;
    for (int e : j) sum += e;
    CHECK(sum == 3);
    CHECK(index_rank(j) == static_cast<int>(&j - idx33.data()));
  }
}

TEST_CASE("validate_index error taxonomy") {
  CHECK_NOTHROW(validate_index({2, 1}, 3, 2));
  CHECK_THROWS_AS(validate_index({2, 1, 0}, 3, 2), InvalidIndex);  // length
  CHECK_THROWS_AS(validate_index({-1, 4}, 3, 2), InvalidIndex);    // negative
  CHECK_THROWS_AS(validate_index({2, 2}, 3, 2), DegreeMismatch);   // sum
}
