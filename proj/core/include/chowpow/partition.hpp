#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace chowpow {

// Weakly decreasing sequence of nonnegative integers. Canonical form has no
// trailing zeros; canonicalization happens at construction, so padding a
// partition with zeros is the identity. Value type, freely shareable.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  // Parses "34,6,2". Empty string gives the empty partition.
  static Partition from_string(std::string_view csv);

  const std::vector<int>& parts() const { return parts_; }
  // 1-based part access; 0 beyond the length.
  int part(std::size_t i) const {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
  }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  long long size() const;

  bool is_m_partition(int m) const { return static_cast<int>(length()) <= m; }

  // mu with mu_i = #{j : lambda_j >= i}; involutive.
  Partition transposed() const;

  // Partition without its first row.
  Partition bar() const;

  // c_i = number of columns with exactly i boxes = lambda_i - lambda_{i+1},
  // for i = 1..length.
  std::vector<int> column_counts() const;

  std::string to_string() const;

  friend Partition operator+(const Partition& a, const Partition& b);

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Componentwise difference, if it is again a partition.
bool try_subtract(const Partition& a, const Partition& b, Partition* out);

// Weak composition of a declared total into a fixed number of entries.
struct Composition {
  std::vector<int> entries;

  int total() const;
  bool operator==(const Composition&) const = default;
};

// All C(total+parts-1, parts-1) weak compositions of `total` into `parts`
// entries, in lexicographically decreasing order of the entry sequence
// (largest first coordinate first). This order is part of the contract:
// the monomial-coefficient DP renumbers compositions against it.
std::vector<Composition> compositions(int total, int parts);

// All partitions of `total` with at most `max_parts` parts, each exactly
// once, first part decreasing (lexicographically decreasing overall).
void for_each_partition(long long total, int max_parts,
                        const std::function<void(const Partition&)>& fn);
std::vector<Partition> partitions_with_max_parts(long long total,
                                                 int max_parts);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const;
};

}  // namespace chowpow
