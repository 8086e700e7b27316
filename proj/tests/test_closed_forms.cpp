#include <doctest.h>

#include "chowpow/plethysm.hpp"
#include "chowpow/qpolynomial.hpp"
#include "chowpow/semigroup.hpp"

using namespace chowpow;

TEST_CASE("closed_form_c matches the DP on all three-row targets") {
  for (int d = 1; d <= 5; ++d) {
    for (int n = 1; n <= 5; ++n) {
      for (const Partition& nu : partitions_with_max_parts(static_cast<long long>(d) * n, 3)) {
        if (nu.part(3) > 2) continue;
        CHECK(closed_form_c(nu, d, n) == monomial_coefficient(nu, d, n));
      }
    }
  }
}

TEST_CASE("closed_form_c named examples") {
  // (L,k,0) is a rectangle count
  for (int k = 0; k <= 12; ++k) {
    Partition nu{24 - k, k};
    if (nu.part(1) < nu.part(2)) continue;
    CHECK(closed_form_c(nu, 4, 6) == rect_partition_count(k, 6, 4));
  }
  // (L,0,0) -> 1
  CHECK(closed_form_c(Partition{12}, 3, 4) == 1);
  CHECK(closed_form_c(Partition{35}, 5, 7) == 1);
  // (L,k,1) cross-check for n=2, d=2, k=1
  CHECK(closed_form_c(Partition{2, 1, 1}, 2, 2) == monomial_coefficient(Partition{2, 1, 1}, 2, 2));
}

TEST_CASE("three-row closed form equals the determinantal route") {
  for (int d = 2; d <= 5; ++d) {
    for (int n = 2; n <= 5; ++n) {
      for (int r = 2; r <= d * n; ++r) {
        long long L = static_cast<long long>(d) * n - r - 2;
        if (L < r) continue;
        CHECK(closed_form_pleth_Lr2(L, r, d, n) == plethysm(Partition{static_cast<int>(L), r, 2}, d, n));
      }
    }
  }
  CHECK(closed_form_pleth_Lr2(34, 6, 7, 6) == 8);
  CHECK(closed_form_pleth_Lr2(47, 7, 8, 7) == 11);
}

TEST_CASE("difference closed form") {
  // equal outer/inner degree: difference is identically zero
  CHECK(pleth_difference_Lr2(10, 4, 4, 4) == 0);
  CHECK(pleth_difference_Lr2(28, 6, 6, 6) == 0);
  // the lone vanishing case in the r > n branch
  CHECK(pleth_difference_Lr2(35, 35, 9, 8) == 0);
  // theorem family: (n^2-2, n, 2), d = n+1
  for (int n = 2; n <= 7; ++n) {
    CHECK(pleth_difference_Lr2(static_cast<long long>(n) * n - 2, n, n + 1, n) == 1);
  }
}

TEST_CASE("difference closed form vs two plethysm runs") {
  for (int d = 2; d <= 5; ++d) {
    for (int n = 2; n <= 5; ++n) {
      for (int r = 2; r <= d * n; ++r) {
        long long L = static_cast<long long>(d) * n - r - 2;
        if (L < r) continue;
        Partition lambda{static_cast<int>(L), r, 2};
        CHECK(pleth_difference_Lr2(L, r, d, n) ==
              plethysm(lambda, d, n) - plethysm(lambda, n, d));
      }
    }
  }
}

TEST_CASE("foulkes_delta_case") {
  CHECK(foulkes_delta_case(5, 3).kind == FoulkesDelta::Case::zero);
  CHECK(foulkes_delta_case(6, 6).kind == FoulkesDelta::Case::one);
  CHECK(foulkes_delta_case(6, 6).value == 1);

  FoulkesDelta exc = foulkes_delta_case(8, 35);
  CHECK(exc.kind == FoulkesDelta::Case::exception);
  CHECK(exc.value == 0);
  CHECK(rect_partition_count(26, 9, 6) == 227);
  CHECK(rect_partition_count(27, 9, 6) == 227);

  CHECK_THROWS_AS(foulkes_delta_case(5, 1), std::invalid_argument);
}

TEST_CASE("foulkes_delta_case agrees with the difference closed form") {
  for (int n = 2; n <= 9; ++n) {
    long long top = static_cast<long long>(n) * n + n - 2;
    for (long long r = 2; 2 * r <= top; ++r) {
      FoulkesDelta fd = foulkes_delta_case(n, r);
      BigInt via_difference = pleth_difference_Lr2(top - r, static_cast<int>(r), n + 1, n);
      CHECK(fd.value == via_difference);
      if (n >= 7 && r > n && !(n == 8 && r == 35)) {
        CHECK(fd.value > 0);
      }
    }
  }
}
