#pragma once

#include <cstddef>
#include <stdexcept>

#include "chowpow/bigint.hpp"
#include "chowpow/partition.hpp"

namespace chowpow {

// Thrown when a brute-force expansion would exceed its term budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// c_nu(d,n): coefficient of the monomial x^nu in h_d applied to all degree-n
// monomials of x_1..x_{len(nu)}, i.e. the number of weak compositions b over
// the compositions alpha^i of n with |b| = d and sum_i b_i alpha^i = nu.
// Computed by memoized DP over the composition list in its documented order.
// Requires len(nu) <= 4 (all targets in this library have at most 4 rows);
// longer targets are rejected.
BigInt monomial_coefficient(const Partition& nu, int d, int n);

// Plethysm coefficient pl(lambda,d,n): the multiplicity of s_lambda in
// h_d[h_n], computed as the signed sum over permutations of shifted
// monomial coefficients. Terms with a negative shifted entry vanish.
// Zero when |lambda| != d*n. Requires len(lambda) <= 4.
BigInt plethysm(const Partition& lambda, int d, int n);

struct BruteforceBudget {
  // Maximum number of degree-d monomial multisets to expand.
  unsigned long long max_terms = 80'000'000ULL;
};

// Independent route: expands h_d of the degree-n monomial list in `vars`
// variables as an exponent-vector multiset sum, reads off the needed c_nu
// directly, and applies the same determinantal expansion. Must agree with
// plethysm(). Throws BudgetExceeded when the expansion is too large.
BigInt plethysm_bruteforce(const Partition& lambda, int d, int n, int vars,
                           BruteforceBudget budget = {});

// Closed form for c_nu(d,n) when nu = (L,k,m) with m <= 2, via Gaussian
// binomial products. Agrees with monomial_coefficient on such nu.
BigInt closed_form_c(const Partition& nu, int d, int n);

// Closed form for pl((L,r,2),d,n) as a single coefficient extraction from a
// three-term q-polynomial expression. Requires d,n >= 2.
BigInt closed_form_pleth_Lr2(long long L, int r, int d, int n);

// pl((L,r,2),d,n) - pl((L,r,2),n,d), by exact q-polynomial division
// (throws std::domain_error if a division fails to be exact).
BigInt pleth_difference_Lr2(long long L, int r, int d, int n);

// The Foulkes difference pl(lambda,n+1,n) - pl(lambda,n,n+1) for
// lambda = (n^2+n-2-r, r, 2), by case analysis on r:
//   r < n -> zero; r = n -> one;
//   r > n -> p_{k+1}(n+1,n-2) - p_k(n+1,n-2) with k = r-n-1, reported as
//   `positive` when nonzero and `exception` when the two counts tie.
struct FoulkesDelta {
  enum class Case { zero, one, positive, exception };
  Case kind;
  BigInt value;

  static const char* case_name(Case c);
};
FoulkesDelta foulkes_delta_case(int n, long long r);

// Table-driven vanishing: true iff lambda without its first row lies in the
// excluded set for inner degree n (supported: n = 6 and n = 7). A true
// result implies pl(lambda,d,n) = 0 for the matching d.
bool bar_vanishes(const Partition& lambda, int n);

// The excluded bar set for n in {6,7}; throws on other n.
const std::vector<Partition>& excluded_bars(int n);

}  // namespace chowpow
