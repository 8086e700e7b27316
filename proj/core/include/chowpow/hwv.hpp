#pragma once

#include <cstdint>
#include <vector>

#include "chowpow/prime_field.hpp"
#include "chowpow/tableau.hpp"

namespace chowpow {

struct EvalOptions {
  // Skip zero-determinant assignments (and the states they would feed).
  // The unpruned variant visits them and adds zero; both give equal values.
  bool prune = true;
};

// Evaluates the highest-weight-vector function indexed by T at a product of
// linear forms, as the sum over proper placements of per-column determinant
// products, by a forward column-by-column DP over per-label used-form sets.
// Global scalar normalizations are dropped throughout: callers only ever use
// nonvanishing and matrix rank, which scalars do not affect.
//
// Requires: T's content is d labels each appearing n times with
// n = pt.forms.size(); every form has length >= len(shape); n <= 8, d <= 16
// (8 bits per label, two words of packed state).
std::uint64_t eval_chow(const Tableau& t, const ChowPoint& pt, const PrimeField& field,
                        EvalOptions opt = {});

// Evaluates the same function at a sum of k n-th powers. Each power is
// rank-one per block, so the placement sum collapses to k^d determinant
// products, one per assignment of labels to forms.
std::uint64_t eval_pow(const Tableau& t, const PowPoint& pt, const PrimeField& field,
                       EvalOptions opt = {});

// Entry (i,j) = evaluation of tableaux[i] at points[j]. `jobs` > 1 fans the
// independent entries out across threads; results are identical either way.
FpMatrix evaluation_matrix(const std::vector<Tableau>& tableaux,
                           const std::vector<ChowPoint>& points, const PrimeField& field,
                           int jobs = 1, EvalOptions opt = {});
FpMatrix evaluation_matrix(const std::vector<Tableau>& tableaux,
                           const std::vector<PowPoint>& points, const PrimeField& field,
                           int jobs = 1, EvalOptions opt = {});

}  // namespace chowpow
