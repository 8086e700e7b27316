#include <doctest.h>

#include <set>

#include "chowpow/partition.hpp"
#include "chowpow/prime_field.hpp"

using namespace chowpow;

TEST_CASE("canonical form strips trailing zeros") {
  CHECK(Partition{6, 6, 0, 0} == Partition{6, 6});
  CHECK(Partition{}.empty());
  CHECK(Partition{0, 0}.empty());
  CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({3, -1}), std::invalid_argument);
}

TEST_CASE("size, length, m-partition") {
  Partition p{34, 6, 2};
  CHECK(p.size() == 42);
  CHECK(p.length() == 3);
  CHECK(p.is_m_partition(3));
  CHECK(p.is_m_partition(5));
  CHECK_FALSE(p.is_m_partition(2));
  CHECK(p.part(1) == 34);
  CHECK(p.part(4) == 0);
}

TEST_CASE("from_string round trip") {
  CHECK(Partition::from_string("34,6,2") == Partition{34, 6, 2});
  CHECK(Partition::from_string("") == Partition{});
  CHECK(Partition{34, 6, 2}.to_string() == "34,6,2");
  CHECK_THROWS_AS(Partition::from_string("3,a"), std::invalid_argument);
}

TEST_CASE("transpose basics") {
  CHECK(Partition{2, 2}.transposed() == Partition{2, 2});
  CHECK(Partition{3}.transposed() == Partition{1, 1, 1});
  // Column-count reading of (34,6,2): columns 1-2 have 3 boxes, 3-6 have 2,
  // 7-34 have 1.
  std::vector<int> expected = {3, 3, 2, 2, 2, 2};
  expected.insert(expected.end(), 28, 1);
  CHECK(Partition{34, 6, 2}.transposed() == Partition(expected));
}

TEST_CASE("transpose is an involution") {
  // Exhaustive on small sizes, sampled up to 60.
  for (long long total = 0; total <= 18; ++total) {
    for (const Partition& p : partitions_with_max_parts(total, static_cast<int>(total) + 1)) {
      CHECK(p.transposed().transposed() == p);
    }
  }
  SplitMix64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    long long total = 19 + static_cast<long long>(rng.next_mod(42));  // up to 60
    // random partition: greedy cut
    std::vector<int> parts;
    long long left = total;
    int cap = static_cast<int>(total);
    while (left > 0) {
      int p = 1 + static_cast<int>(rng.next_mod(static_cast<std::uint64_t>(std::min<long long>(cap, left))));
      parts.push_back(p);
      cap = p;
      left -= p;
    }
    Partition p(parts);
    CHECK(p.transposed().transposed() == p);
    CHECK(p.transposed().size() == p.size());
  }
}

TEST_CASE("addition is componentwise with padding") {
  CHECK(Partition{6} + Partition{6, 6} == Partition{12, 6});
  CHECK(Partition{6, 6, 6} + Partition{6, 6, 6} == Partition{12, 12, 12});
  CHECK(Partition{8, 4} + Partition{10, 2} == Partition{18, 6});
}

TEST_CASE("column counts") {
  CHECK(Partition{6, 6, 6}.column_counts() == std::vector<int>{0, 0, 6});
  CHECK(Partition{12, 6}.column_counts() == std::vector<int>{6, 6});
  CHECK(Partition{34, 6, 2}.column_counts() == std::vector<int>{28, 4, 2});
}

TEST_CASE("try_subtract") {
  Partition out;
  CHECK(try_subtract(Partition{12, 6}, Partition{6}, &out));
  CHECK(out == Partition{6, 6});
  CHECK_FALSE(try_subtract(Partition{6, 6}, Partition{8}, &out));   // negative
  CHECK_FALSE(try_subtract(Partition{8, 8}, Partition{6}, &out));   // not sorted
}

TEST_CASE("compositions order and counts") {
  std::vector<Composition> c12 = compositions(1, 2);
  REQUIRE(c12.size() == 2);
  CHECK(c12[0].entries == std::vector<int>{1, 0});
  CHECK(c12[1].entries == std::vector<int>{0, 1});

  CHECK(compositions(6, 3).size() == 28);
  CHECK(compositions(7, 4).size() == 120);

  // lexicographically decreasing, no duplicates
  std::vector<Composition> c = compositions(5, 3);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    CHECK(c[i].entries > c[i + 1].entries);
    CHECK(c[i].total() == 5);
  }
}

namespace {

// Independent counting oracle: p(total into at most k parts) by recursion.
long long count_partitions_max_parts(long long total, int k) {
  if (total == 0) return 1;
  if (k == 0 || total < 0) return 0;
  return count_partitions_max_parts(total - k, k) + count_partitions_max_parts(total, k - 1);
}

}  // namespace

TEST_CASE("partition enumeration matches the counting oracle") {
  std::vector<Partition> p42 = partitions_with_max_parts(4, 2);
  REQUIRE(p42.size() == 3);
  CHECK(p42[0] == Partition{4});
  CHECK(p42[1] == Partition{3, 1});
  CHECK(p42[2] == Partition{2, 2});

  CHECK(partitions_with_max_parts(6, 3).size() == 7);
  CHECK(partitions_with_max_parts(12, 3).size() == 19);
  for (int total = 0; total <= 25; ++total) {
    for (int k = 1; k <= 5; ++k) {
      auto list = partitions_with_max_parts(total, k);
      CHECK(static_cast<long long>(list.size()) == count_partitions_max_parts(total, k));
      std::set<Partition> dedup(list.begin(), list.end());
      CHECK(dedup.size() == list.size());
      for (const Partition& p : list) {
        CHECK(p.size() == total);
        CHECK(p.length() <= static_cast<std::size_t>(k));
      }
    }
  }
}
