#pragma once

#include <cstdint>
#include <vector>

namespace chowpow {

// Prime field F_p with p < 2^62, element values are plain uint64_t in [0,p).
class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultPrime = 2147483647ULL;           // 2^31 - 1
  static constexpr std::uint64_t kConfirmPrime = 2305843009213693951ULL;  // 2^61 - 1

  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t p() const { return p_; }

  std::uint64_t reduce(std::uint64_t x) const { return x % p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;  // a != 0

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

// Fully specified deterministic generator (splitmix64), so seeded runs are
// reproducible across platforms and standard library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform-enough draw in [0, p); modulo bias is irrelevant here.
  std::uint64_t next_mod(std::uint64_t p) { return next() % p; }

 private:
  std::uint64_t state_;
};

// A single linear form: its coordinate vector (length m) over F_p.
struct LinearForm {
  std::vector<std::uint64_t> coords;
};

// Product point: n linear forms.
struct ChowPoint {
  std::vector<LinearForm> forms;
};

// Power-sum point: k linear forms (the point is the sum of their n-th powers).
struct PowPoint {
  std::vector<LinearForm> forms;
};

ChowPoint random_chow_point(int m, int n, std::uint64_t seed, const PrimeField& field);
PowPoint random_pow_point(int m, int n, int k, std::uint64_t seed, const PrimeField& field);

// Determinant of the s x s matrix whose rows are the first s coordinates of
// the given forms. s must not exceed the form length.
std::uint64_t column_det(const std::vector<const LinearForm*>& forms,
                         const PrimeField& field);

class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> data_;
};

// Rank by Gaussian elimination over F_p. The rank of an integer matrix
// reduced mod p is a lower bound for its rational rank.
int matrix_rank(FpMatrix mat, const PrimeField& field);

}  // namespace chowpow
