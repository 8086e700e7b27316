#include "chowpow/prime_field.hpp"

#include <array>
#include <stdexcept>

namespace chowpow {

namespace {

std::uint64_t mulmod_u128(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod_u128(r, base, m);
    base = mulmod_u128(base, base, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit integers.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                          29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u128(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 62)) throw std::invalid_argument("prime too large (need p < 2^62)");
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t e) const {
  return powmod(base, e, p_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return powmod(a, p_ - 2, p_);
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

LinearForm random_form(int m, SplitMix64& rng, const PrimeField& field) {
  LinearForm f;
  f.coords.resize(static_cast<std::size_t>(m));
  for (auto& c : f.coords) c = rng.next_mod(field.p());
  return f;
}

}  // namespace

ChowPoint random_chow_point(int m, int n, std::uint64_t seed, const PrimeField& field) {
  if (m < 1 || n < 1) throw std::invalid_argument("random_chow_point: m,n >= 1");
  SplitMix64 rng(seed);
  ChowPoint pt;
  for (int i = 0; i < n; ++i) pt.forms.push_back(random_form(m, rng, field));
  return pt;
}

PowPoint random_pow_point(int m, int n, int k, std::uint64_t seed, const PrimeField& field) {
  if (m < 1 || n < 1 || k < 1) throw std::invalid_argument("random_pow_point: m,n,k >= 1");
  // n does not enter the coordinates; it is part of the point's meaning and
  // kept in the signature so call sites state the full parameter set.
  SplitMix64 rng(seed ^ 0x706f77ULL);  // distinct stream from chow points
  PowPoint pt;
  for (int i = 0; i < k; ++i) pt.forms.push_back(random_form(m, rng, field));
  return pt;
}

std::uint64_t column_det(const std::vector<const LinearForm*>& forms,
                         const PrimeField& field) {
  std::size_t s = forms.size();
  if (s == 0) return 1;
  for (const LinearForm* f : forms) {
    if (f->coords.size() < s) throw std::invalid_argument("column taller than form length");
  }
  if (s == 1) return forms[0]->coords[0];
  if (s == 2) {
    const auto& a = forms[0]->coords;
    const auto& b = forms[1]->coords;
    return field.sub(field.mul(a[0], b[1]), field.mul(a[1], b[0]));
  }
  if (s == 3) {
    const auto& a = forms[0]->coords;
    const auto& b = forms[1]->coords;
    const auto& c = forms[2]->coords;
    std::uint64_t r = field.mul(a[0], field.sub(field.mul(b[1], c[2]), field.mul(b[2], c[1])));
    r = field.sub(r, field.mul(a[1], field.sub(field.mul(b[0], c[2]), field.mul(b[2], c[0]))));
    r = field.add(r, field.mul(a[2], field.sub(field.mul(b[0], c[1]), field.mul(b[1], c[0]))));
    return r;
  }
  // General small Gaussian elimination.
  std::vector<std::vector<std::uint64_t>> mat(s, std::vector<std::uint64_t>(s));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) mat[i][j] = forms[i]->coords[j];
  }
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < s; ++col) {
    std::size_t pivot = col;
    while (pivot < s && mat[pivot][col] == 0) ++pivot;
    if (pivot == s) return 0;
    if (pivot != col) {
      std::swap(mat[pivot], mat[col]);
      det = field.neg(det);
    }
    det = field.mul(det, mat[col][col]);
    std::uint64_t ipiv = field.inv(mat[col][col]);
    for (std::size_t r = col + 1; r < s; ++r) {
      if (mat[r][col] == 0) continue;
      std::uint64_t f = field.mul(mat[r][col], ipiv);
      for (std::size_t j = col; j < s; ++j) {
        mat[r][j] = field.sub(mat[r][j], field.mul(f, mat[col][j]));
      }
    }
  }
  return det;
}

int matrix_rank(FpMatrix mat, const PrimeField& field) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < mat.cols() && rank < mat.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < mat.rows() && mat.at(pivot, col) == 0) ++pivot;
    if (pivot == mat.rows()) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < mat.cols(); ++j) std::swap(mat.at(pivot, j), mat.at(rank, j));
    }
    std::uint64_t ipiv = field.inv(mat.at(rank, col));
    for (std::size_t r = rank + 1; r < mat.rows(); ++r) {
      if (mat.at(r, col) == 0) continue;
      std::uint64_t f = field.mul(mat.at(r, col), ipiv);
      for (std::size_t j = col; j < mat.cols(); ++j) {
        mat.at(r, j) = field.sub(mat.at(r, j), field.mul(f, mat.at(rank, j)));
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace chowpow
