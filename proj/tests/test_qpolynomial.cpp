#include <doctest.h>

#include <functional>

#include "chowpow/partition.hpp"
#include "chowpow/qpolynomial.hpp"

using namespace chowpow;

namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// Enumeration oracle: partitions of r with at most a parts, each at most b.
long long count_in_box(int r, int a, int b) {
  if (r == 0) return 1;
  if (a == 0 || b == 0) return 0;
  long long total = 0;
  for (int first = std::min(r, b); first >= 1; --first) {
    // remaining parts bounded by `first`
    std::function<long long(int, int, int)> rec = [&](int left, int parts, int cap) -> long long {
      if (left == 0) return 1;
      if (parts == 0) return 0;
      long long acc = 0;
      for (int p = std::min(left, cap); p >= 1; --p) acc += rec(left - p, parts - 1, p);
      return acc;
    };
    total += rec(r - first, a - 1, first);
  }
  return total;
}

}  // namespace

TEST_CASE("arithmetic and exact division") {
  QPolynomial a({1, 2, 1});  // (1+q)^2
  QPolynomial b({1, 1});
  CHECK(a.divided_exact(b) == b);
  CHECK((a * b).degree() == 3);
  CHECK(a - a == QPolynomial{});
  CHECK(QPolynomial{}.is_zero());
  CHECK_THROWS_AS(QPolynomial({1, 1, 1}).divided_exact(QPolynomial({1, 1})), std::domain_error);
  CHECK(a.coeff(1) == 2);
  CHECK(a.coeff(17) == 0);
  CHECK(a.shifted(2).coeff(3) == 2);
}

TEST_CASE("q-binomial basics") {
  CHECK(q_binomial(1, 1) == QPolynomial({1, 1}));
  CHECK(q_binomial(0, 5) == QPolynomial::one());
  CHECK(q_binomial(5, 0) == QPolynomial::one());
  CHECK(q_binomial(9, 6).coeff(26) == 227);
  CHECK(q_binomial(9, 6).coeff(27) == 227);
}

TEST_CASE("q-binomial shape properties") {
  for (int a = 0; a <= 12; ++a) {
    for (int b = 0; b <= 12; ++b) {
      QPolynomial qb = q_binomial(a, b);
      CHECK(qb.degree() == a * b);
      CHECK(qb.coeff_sum() == binomial(a + b, a));
      CHECK(qb.is_palindromic());
    }
  }
}

TEST_CASE("rect_partition_count examples and enumeration oracle") {
  CHECK(rect_partition_count(0, 5, 7) == 1);
  CHECK(rect_partition_count(27, 9, 6) == 227);
  CHECK(rect_partition_count(3, 2, 2) == 1);  // only (2,1) fits
  CHECK(rect_partition_count(100, 3, 3) == 0);
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 5; ++b) {
      for (int r = 0; r <= a * b; ++r) {
        CHECK(rect_partition_count(r, a, b) == count_in_box(r, a, b));
      }
    }
  }
}

TEST_CASE("symmetry and complement") {
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= 10; ++b) {
      for (int r = 0; r <= a * b; ++r) {
        BigInt v = rect_partition_count(r, a, b);
        CHECK(v == rect_partition_count(r, b, a));
        CHECK(v == rect_partition_count(static_cast<long long>(a) * b - r, a, b));
      }
    }
  }
}

TEST_CASE("Pascal recurrence") {
  for (int a = 1; a <= 8; ++a) {
    for (int b = 1; b <= 8; ++b) {
      QPolynomial lhs = q_binomial(a, b);
      QPolynomial rhs = q_binomial(a, b - 1) + q_binomial(a - 1, b).shifted(b);
      CHECK(lhs == rhs);
    }
  }
}
