#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chowpow/bigint.hpp"
#include "chowpow/hwv.hpp"
#include "chowpow/partition.hpp"
#include "chowpow/semigroup.hpp"

namespace chowpow {

struct RandomizedOptions {
  std::uint64_t seed = 1;
  std::uint64_t prime = PrimeField::kDefaultPrime;
  int max_retries = 5;
  int jobs = 1;
  std::size_t tableau_budget = 64;  // SSYT enumeration cap when no fixture applies
};

// Replay data for a randomized rank certificate.
struct Certificate {
  std::string kind;  // "rank" or "inheritance"
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
  int retries = 0;
  int tableaux = 0;
  int points = 0;
  int rank = 0;
};

struct PowMultiplicity {
  bool exact = false;  // true: the plethysm value; false: a rank lower bound
  BigInt value;
  std::optional<Certificate> certificate;
};

// mult(C[Pow_{m,k}^n]_d) for lambda: the plethysm value when k >= d (then
// they are equal), otherwise a certified lower bound from the rank of an
// evaluation matrix at random Pow points.
PowMultiplicity pow_multiplicity(const Partition& lambda, int m, int n, int d, int k,
                                 const RandomizedOptions& opt = {});

// Upper bound for mult(C[Ch_m^n]_d): the swapped plethysm pl(lambda,n,d).
// The bound's hypothesis requires n >= m.
BigInt chow_upper_bound(const Partition& lambda, int m, int n, int d);

// Lower bound for mult(C[Ch_m^n]_d) from the rank of eval_chow at random
// points; rank >= 1 certifies positivity. Length <= 2 shapes with positive
// plethysm are certified by inheritance without evaluation.
Certificate chow_mult_lower_bound(const Partition& lambda, int m, int n, int d,
                                  const std::vector<Tableau>& tableaux, int points,
                                  const RandomizedOptions& opt = {});

enum class Verdict { multiplicity_obstruction, occurrence_obstruction, none, inconclusive };
const char* verdict_name(Verdict v);

struct ObstructionReport {
  int m = 0, n = 0, k = 0, d = 0;
  Partition lambda;
  PowMultiplicity pow;
  BigInt chow_upper;
  std::optional<Certificate> chow_lower;
  bool chow_exact = false;  // lower bound met the upper bound
  Verdict verdict = Verdict::inconclusive;
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;

  std::string to_json() const;
};

// lambda is a multiplicity obstruction iff the Chow upper bound is strictly
// below the Pow multiplicity (or certified lower bound).
ObstructionReport multiplicity_obstruction_check(int m, int n, int k, int d,
                                                 const Partition& lambda,
                                                 const RandomizedOptions& opt = {});

// Occurrence obstruction: Chow upper bound zero, Pow multiplicity (at k = d,
// where it equals the plethysm) positive. k defaults to d.
ObstructionReport occurrence_obstruction_check(int m, int n, int d, const Partition& lambda,
                                               int k = -1, const RandomizedOptions& opt = {});

// Bundled appendix witness tableaux for a generator family, one per
// generator, keyed by shape.
std::vector<Tableau> load_chow_witnesses(const std::string& family_id);
std::optional<Tableau> witness_for(const std::vector<Tableau>& witnesses, const Partition& shape);

struct PipelineEntry {
  Partition generator;
  int d = 0;
  enum class Kind { fewrows, witness_rank, skipped, no_witness_found } kind = Kind::skipped;
  std::optional<Certificate> certificate;
};

struct PipelineReport {
  std::string family;
  int eval_budget = 0;
  std::vector<PipelineEntry> entries;
  int fewrows = 0;
  int certified = 0;
  int skipped = 0;
  std::vector<Partition> uncovered;  // generators without a certificate

  std::string to_json() const;
};

// Positivity sweep over a family's generators: length <= 2 by inheritance,
// length >= 3 with |mu|/n <= eval_budget by witness-tableau rank at random
// Chow points. Incomplete coverage is reported, never thrown.
PipelineReport no_occurrence_pipeline(const GeneratorFamily& fam, int eval_budget,
                                      const RandomizedOptions& opt = {});

}  // namespace chowpow
