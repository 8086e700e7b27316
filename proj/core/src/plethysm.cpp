#include "chowpow/plethysm.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "chowpow/qpolynomial.hpp"

namespace chowpow {

namespace {

struct DpKey {
  std::uint64_t target;  // up to 4 entries, 16 bits each
  std::uint32_t index_budget;

  bool operator==(const DpKey&) const = default;
};

struct DpKeyHash {
  std::size_t operator()(const DpKey& k) const {
    std::uint64_t h = k.target * 0x9e3779b97f4a7c15ULL;
    h ^= (h >> 29);
    h += static_cast<std::uint64_t>(k.index_budget) * 0xff51afd7ed558ccdULL;
    h ^= (h >> 32);
    return static_cast<std::size_t>(h);
  }
};

std::uint64_t pack_target(const std::array<int, 4>& t, int len) {
  std::uint64_t key = 0;
  for (int i = 0; i < len; ++i) {
    key |= static_cast<std::uint64_t>(static_cast<std::uint16_t>(t[i])) << (16 * i);
  }
  return key;
}

class MonomialCoefficientDp {
 public:
  MonomialCoefficientDp(const Partition& nu, int d, int n)
      : n_(n), len_(static_cast<int>(nu.length())), comps_(compositions(n, len_)) {
    for (int i = 0; i < len_; ++i) target_[i] = nu.part(i + 1);
  }

  BigInt run(int d) {
    long long total = 0;
    for (int i = 0; i < len_; ++i) total += target_[i];
    if (total != static_cast<long long>(d) * n_) return 0;
    return rec(0, d, target_);
  }

 private:
  BigInt rec(int idx, int budget, std::array<int, 4> target) {
    long long remaining = 0;
    for (int i = 0; i < len_; ++i) remaining += target[i];
    if (budget == 0) return remaining == 0 ? 1 : 0;
    if (idx == static_cast<int>(comps_.size())) return 0;
    // Every pick adds exactly n to the coordinate sum.
    if (remaining != static_cast<long long>(budget) * n_) return 0;
    // Compositions are in lex-decreasing order, so no later composition has a
    // larger first coordinate than the current one.
    const std::vector<int>& alpha = comps_[static_cast<std::size_t>(idx)].entries;
    if (static_cast<long long>(budget) * alpha[0] < target[0]) return 0;

    DpKey key{pack_target(target, len_),
              (static_cast<std::uint32_t>(idx) << 9) | static_cast<std::uint32_t>(budget)};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    BigInt acc = 0;
    int max_take = budget;
    for (int i = 0; i < len_; ++i) {
      if (alpha[i] > 0) max_take = std::min(max_take, target[i] / alpha[i]);
    }
    std::array<int, 4> t = target;
    for (int take = 0; take <= max_take; ++take) {
      acc += rec(idx + 1, budget - take, t);
      for (int i = 0; i < len_; ++i) t[i] -= alpha[i];
    }
    memo_.emplace(key, acc);
    return acc;
  }

  int n_;
  int len_;
  std::array<int, 4> target_{};
  std::vector<Composition> comps_;
  std::unordered_map<DpKey, BigInt, DpKeyHash> memo_;
};

// Jacobi-Trudi style expansion: signed sum over permutations of the shifted
// index, with negative entries dropping the term. `coeff` maps each shifted
// index (sorted, zero-stripped) to its monomial coefficient.
template <typename CoeffFn>
BigInt determinantal_sum(const Partition& lambda, CoeffFn&& coeff) {
  int len = static_cast<int>(lambda.length());
  std::vector<int> perm(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  BigInt total = 0;
  do {
    int sign = 1;
    for (int i = 0; i < len; ++i) {
      for (int j = i + 1; j < len; ++j) {
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) sign = -sign;
      }
    }
    std::vector<int> shifted(static_cast<std::size_t>(len));
    bool ok = true;
    for (int i = 0; i < len; ++i) {
      shifted[static_cast<std::size_t>(i)] =
          lambda.part(static_cast<std::size_t>(i) + 1) - (i + 1) + perm[static_cast<std::size_t>(i)];
      if (shifted[static_cast<std::size_t>(i)] < 0) ok = false;
    }
    if (!ok) continue;
    std::sort(shifted.begin(), shifted.end(), std::greater<int>());
    Partition nu(std::move(shifted));
    if (sign > 0) total += coeff(nu);
    else total -= coeff(nu);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

BigInt monomial_coefficient(const Partition& nu, int d, int n) {
  if (d < 0 || n < 0) throw std::invalid_argument("monomial_coefficient: d,n must be >= 0");
  if (nu.length() > 4) {
    throw std::invalid_argument("monomial_coefficient: targets with more than 4 rows unsupported");
  }
  if (nu.empty()) return (d == 0 || n == 0) ? 1 : 0;
  if (n == 0) return 0;  // nonempty target, every pick contributes nothing
  MonomialCoefficientDp dp(nu, d, n);
  return dp.run(d);
}

BigInt plethysm(const Partition& lambda, int d, int n) {
  if (d < 0 || n < 0) throw std::invalid_argument("plethysm: d,n must be >= 0");
  if (lambda.size() != static_cast<long long>(d) * n) return 0;
  if (lambda.empty()) return 1;  // |lambda| = dn = 0
  if (lambda.length() > 4) {
    throw std::invalid_argument("plethysm: partitions with more than 4 rows unsupported");
  }
  return determinantal_sum(lambda, [&](const Partition& nu) {
    return monomial_coefficient(nu, d, n);
  });
}

namespace {

void expand_multisets(const std::vector<std::vector<int>>& monomials, int d,
                      int start, std::vector<int>& exponent,
                      std::unordered_map<std::uint64_t, BigInt>& counts,
                      int vars) {
  if (d == 0) {
    std::uint64_t key = 0;
    bool fits = true;
    for (int i = 0; i < vars; ++i) {
      if (exponent[static_cast<std::size_t>(i)] > 0xFFFF) { fits = false; break; }
      key |= static_cast<std::uint64_t>(exponent[static_cast<std::size_t>(i)]) << (16 * i);
    }
    if (!fits) throw std::overflow_error("exponent too large to pack");
    counts[key] += 1;
    return;
  }
  for (int i = start; i < static_cast<int>(monomials.size()); ++i) {
    for (int v = 0; v < vars; ++v) exponent[static_cast<std::size_t>(v)] += monomials[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
    expand_multisets(monomials, d - 1, i, exponent, counts, vars);
    for (int v = 0; v < vars; ++v) exponent[static_cast<std::size_t>(v)] -= monomials[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
  }
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

BigInt plethysm_bruteforce(const Partition& lambda, int d, int n, int vars,
                           BruteforceBudget budget) {
  if (vars < static_cast<int>(lambda.length())) {
    throw std::invalid_argument("plethysm_bruteforce: vars < len(lambda)");
  }
  if (vars > 4) throw std::invalid_argument("plethysm_bruteforce: vars > 4 unsupported");
  if (lambda.size() != static_cast<long long>(d) * n) return 0;
  if (lambda.empty()) return 1;

  std::vector<Composition> mono = compositions(n, vars);
  BigInt terms = binomial(static_cast<long long>(mono.size()) + d - 1, d);
  if (terms > budget.max_terms) {
    throw BudgetExceeded("plethysm_bruteforce: " + terms.str() + " terms exceed budget");
  }

  std::vector<std::vector<int>> monomials;
  monomials.reserve(mono.size());
  for (const Composition& c : mono) monomials.push_back(c.entries);

  std::unordered_map<std::uint64_t, BigInt> counts;
  std::vector<int> exponent(static_cast<std::size_t>(vars), 0);
  expand_multisets(monomials, d, 0, exponent, counts, vars);

  return determinantal_sum(lambda, [&](const Partition& nu) -> BigInt {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < nu.length(); ++i) {
      key |= static_cast<std::uint64_t>(nu.part(i + 1)) << (16 * i);
    }
    auto it = counts.find(key);
    return it == counts.end() ? BigInt(0) : it->second;
  });
}

namespace {

// Generating function 1 + q^2 + q^4 + ... + q^{2(n-1)} (the b_i = 2 subcase
// contributes one power of q^2 per shift).
QPolynomial geometric_q2(int n) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(2 * (n - 1)) + 1, 0);
  for (int j = 0; j < n; ++j) coeffs[static_cast<std::size_t>(2 * j)] = 1;
  return QPolynomial(std::move(coeffs));
}

}  // namespace

BigInt closed_form_c(const Partition& nu, int d, int n) {
  if (nu.length() > 3) throw std::invalid_argument("closed_form_c: more than 3 rows");
  int third = static_cast<int>(nu.part(3));
  if (third > 2) throw std::invalid_argument("closed_form_c: third row > 2");
  long long L = nu.part(1);
  int k = nu.part(2);
  if (L + k + third != static_cast<long long>(d) * n) return 0;
  if (d == 0) return nu.empty() ? 1 : 0;
  if (d == 1) return 1;  // nu itself is the one matching composition of n
  switch (third) {
    case 0:
      return rect_partition_count(k, n, d);
    case 1: {
      QPolynomial f = q_binomial(1, n - 1) * q_binomial(n, d - 1);
      return f.coeff(k);
    }
    default: {
      if (n < 2) return 0;  // no composition of n has an entry >= 2
      QPolynomial f = geometric_q2(n) * q_binomial(n, d - 2)
                      + q_binomial(1, n - 2) * q_binomial(n, d - 1)
                      + (q_binomial(2, n - 2) * q_binomial(n, d - 2)).shifted(1);
      return f.coeff(k);
    }
  }
}

BigInt closed_form_pleth_Lr2(long long L, int r, int d, int n) {
  if (d < 2 || n < 2) throw std::invalid_argument("closed_form_pleth_Lr2: needs d,n >= 2");
  if (L < r || r < 2) throw std::invalid_argument("closed_form_pleth_Lr2: (L,r,2) not a partition");
  if (L + r + 2 != static_cast<long long>(d) * n) return 0;
  // q(1-q^n)(1-q^{n+1}) is divisible by 1-q^2: at q=1 and q=-1 one of the
  // factors vanishes for either parity of n.
  QPolynomial scalar = (one_minus_q_pow(n) * one_minus_q_pow(n + 1))
                           .shifted(1)
                           .divided_exact(one_minus_q_pow(2));
  QPolynomial expr = q_binomial(n, d - 2) * scalar
                     - q_binomial(n, d - 1) * one_minus_q_pow(n + 1)
                     + q_binomial(n, d) * one_minus_q_pow(1);
  return expr.coeff(r + 1);
}

BigInt pleth_difference_Lr2(long long L, int r, int d, int n) {
  if (d < 1 || n < 1) throw std::invalid_argument("pleth_difference_Lr2: needs d,n >= 1");
  if (L < r || r < 2) throw std::invalid_argument("pleth_difference_Lr2: (L,r,2) not a partition");
  if (d == n) return 0;
  if (L + r + 2 != static_cast<long long>(d) * n) return 0;
  QPolynomial numerator = q_binomial(n - 1, d - 1)
                          * (QPolynomial::monomial(n) - QPolynomial::monomial(d))
                          * one_minus_q_pow(d - 1) * one_minus_q_pow(n - 1);
  if (numerator.is_zero()) return 0;
  QPolynomial quotient =
      numerator.divided_exact(one_minus_q_pow(d) * one_minus_q_pow(n));
  return quotient.coeff(r);
}

const char* FoulkesDelta::case_name(Case c) {
  switch (c) {
    case Case::zero: return "zero";
    case Case::one: return "one";
    case Case::positive: return "positive";
    case Case::exception: return "exception";
  }
  return "?";
}

FoulkesDelta foulkes_delta_case(int n, long long r) {
  if (n < 2) throw std::invalid_argument("foulkes_delta_case: n >= 2 required");
  long long L = static_cast<long long>(n) * n + n - 2 - r;
  if (r < 2 || L < r) {
    throw std::invalid_argument("foulkes_delta_case: (n^2+n-2-r, r, 2) not a partition");
  }
  if (r < n) return {FoulkesDelta::Case::zero, 0};
  if (r == n) return {FoulkesDelta::Case::one, 1};
  long long k = r - n - 1;
  BigInt value = rect_partition_count(k + 1, n + 1, n - 2)
                 - rect_partition_count(k, n + 1, n - 2);
  return {value == 0 ? FoulkesDelta::Case::exception : FoulkesDelta::Case::positive,
          std::move(value)};
}

const std::vector<Partition>& excluded_bars(int n) {
  static const std::vector<Partition> six = {
      {3, 3}, {3, 1}, {2, 1}, {1, 1}, {1}};
  static const std::vector<Partition> seven = {
      {1},       {1, 1},    {1, 1, 1}, {2, 1},    {2, 1, 1}, {2, 2, 1},
      {3, 1},    {3, 1, 1}, {3, 2, 1}, {3, 3},    {3, 3, 1}, {3, 3, 2},
      {3, 3, 3}, {4, 1, 1}, {4, 3, 3}, {5, 1, 1}, {5, 5, 5}, {6, 1, 1}};
  if (n == 6) return six;
  if (n == 7) return seven;
  throw std::invalid_argument("excluded_bars: only n = 6 and n = 7 are table-driven");
}

bool bar_vanishes(const Partition& lambda, int n) {
  const std::vector<Partition>& table = excluded_bars(n);
  Partition b = lambda.bar();
  return std::find(table.begin(), table.end(), b) != table.end();
}

}  // namespace chowpow
