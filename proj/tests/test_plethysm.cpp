#include <doctest.h>

#include "chowpow/plethysm.hpp"
#include "chowpow/semigroup.hpp"

using namespace chowpow;

TEST_CASE("monomial coefficient basics") {
  // single-row target: only the composition concentrated on the first slot
  CHECK(monomial_coefficient(Partition{6}, 2, 3) == 1);
  CHECK(monomial_coefficient(Partition{12}, 3, 4) == 1);
  CHECK(monomial_coefficient(Partition{}, 0, 5) == 1);
  CHECK(monomial_coefficient(Partition{3}, 2, 3) == 0);  // wrong total
  // h_2 expanded on (x1^2, x1 x2, x2^2): x1^2 x2^2 appears twice
  CHECK(monomial_coefficient(Partition{2, 2}, 2, 2) == 2);
  CHECK_THROWS_AS(monomial_coefficient(Partition{2, 1, 1, 1, 1}, 2, 3), std::invalid_argument);
}

TEST_CASE("monomial coefficient two-row closed form") {
  for (int d = 1; d <= 5; ++d) {
    for (int n = 1; n <= 5; ++n) {
      for (int k = 0; 2 * k <= d * n; ++k) {
        Partition nu{d * n - k, k};
        CHECK(monomial_coefficient(nu, d, n) == rect_partition_count(k, n, d));
      }
    }
  }
}

TEST_CASE("plethysm anchor values") {
  CHECK(plethysm(Partition{34, 6, 2}, 7, 6) == 8);
  CHECK(plethysm(Partition{47, 7, 2}, 8, 7) == 11);
  for (int n = 1; n <= 8; ++n) CHECK(plethysm(Partition{n}, 1, n) == 1);
  CHECK(plethysm(Partition{2, 2, 2}, 3, 2) == 1);
  CHECK(plethysm(Partition{2, 2, 2}, 2, 3) == 0);
  CHECK(plethysm(Partition{14, 14, 13, 13}, 9, 6) == 11);
  CHECK(plethysm(Partition{14, 14, 13, 13}, 6, 9) == 0);
  CHECK(plethysm(Partition{2, 2}, 2, 2) == 1);
  CHECK(plethysm(Partition{4}, 2, 2) == 1);
  CHECK(plethysm(Partition{3, 1}, 2, 2) == 0);
}

TEST_CASE("brute force agrees on tiny hand expansions") {
  CHECK(plethysm_bruteforce(Partition{2, 2}, 2, 2, 2) == 1);
  CHECK(plethysm_bruteforce(Partition{4}, 2, 2, 2) == 1);
  CHECK_THROWS_AS(plethysm_bruteforce(Partition{8, 8, 8, 8}, 4, 8, 4,
                                      BruteforceBudget{.max_terms = 10}),
                  BudgetExceeded);
}

TEST_CASE("route agreement: determinantal DP vs brute force") {
  for (int d = 2; d <= 4; ++d) {
    for (int n = 2; n <= 4; ++n) {
      for (const Partition& lambda : partitions_with_max_parts(static_cast<long long>(d) * n, 4)) {
        BigInt a = plethysm(lambda, d, n);
        CHECK(a >= 0);
        CHECK(a == plethysm_bruteforce(lambda, d, n, 4));
      }
    }
  }
  for (int d = 2; d <= 5; ++d) {
    for (int n = 2; n <= 5; ++n) {
      if (d <= 4 && n <= 4) continue;
      for (const Partition& lambda : partitions_with_max_parts(static_cast<long long>(d) * n, 3)) {
        CHECK(plethysm(lambda, d, n) == plethysm_bruteforce(lambda, d, n, 3));
      }
    }
  }
}

TEST_CASE("Hermite reciprocity for two-row shapes") {
  for (int d = 1; d <= 6; ++d) {
    for (int n = 1; n <= 6; ++n) {
      for (const Partition& lambda : partitions_with_max_parts(static_cast<long long>(d) * n, 2)) {
        CHECK(plethysm(lambda, d, n) == plethysm(lambda, n, d));
      }
    }
  }
}

TEST_CASE("Foulkes inequality at desk scale") {
  for (int n = 2; n <= 4; ++n) {
    for (int d = n + 1; d <= 5; ++d) {
      for (const Partition& lambda : partitions_with_max_parts(static_cast<long long>(d) * n, 3)) {
        CHECK(plethysm(lambda, n, d) <= plethysm(lambda, d, n));
      }
    }
  }
}

TEST_CASE("excluded bars force vanishing (n=6)") {
  for (int d = 1; d <= 10; ++d) {
    for (const Partition& bar : excluded_bars(6)) {
      long long first = 6LL * d - bar.size();
      if (first < bar.part(1)) continue;
      std::vector<int> parts = {static_cast<int>(first)};
      for (int p : bar.parts()) parts.push_back(p);
      Partition lambda(parts);
      CHECK(bar_vanishes(lambda, 6));
      CHECK(plethysm(lambda, d, 6) == 0);
    }
  }
}

TEST_CASE("bar_vanishes membership") {
  CHECK(bar_vanishes(Partition{6 * 3 - 2, 1, 1}, 6));
  CHECK(bar_vanishes(Partition{6 * 4 - 6, 3, 3}, 6));
  CHECK_FALSE(bar_vanishes(Partition{6 * 4 - 12, 6, 6}, 6));
  CHECK(bar_vanishes(Partition{7 * 3 - 2, 1, 1}, 7));
  CHECK(bar_vanishes(Partition{7 * 4 - 15, 5, 5, 5}, 7));
  CHECK_FALSE(bar_vanishes(Partition{7 * 4 - 16, 6, 6, 4}, 7));
  CHECK_THROWS_AS(bar_vanishes(Partition{10, 2}, 4), std::invalid_argument);
}

TEST_CASE("padding invariance") {
  Partition padded({34, 6, 2, 0});
  CHECK(padded == Partition{34, 6, 2});
  CHECK(plethysm(padded, 7, 6) == plethysm(Partition{34, 6, 2}, 7, 6));
}

TEST_CASE("plethysm values are nonnegative across a sweep") {
  for (int d = 1; d <= 5; ++d) {
    for (int n = 1; n <= 5; ++n) {
      for (const Partition& lambda : partitions_with_max_parts(static_cast<long long>(d) * n, 3)) {
        CHECK(plethysm(lambda, d, n) >= 0);
      }
    }
  }
}
