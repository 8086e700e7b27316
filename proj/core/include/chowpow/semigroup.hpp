#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "chowpow/bigint.hpp"
#include "chowpow/partition.hpp"

namespace chowpow {

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "subtract `subtract` whenever column count c_{column} >= min_count";
// sound above the base search bound by the pigeonhole argument.
struct ReductionRule {
  Partition subtract;
  int column = 0;
  int min_count = 0;
};

// Generator set of the semigroup of m-partitions with positive plethysm for
// inner degree n. Immutable after load.
struct GeneratorFamily {
  std::string id;
  int m = 0;
  int n = 0;
  int base_search_bound = 0;  // max d handled by exhaustive search
  std::vector<ReductionRule> reductions;
  std::vector<Partition> excluded_bars;
  std::vector<Partition> generators;

  bool contains(const Partition& p) const;
  bool bar_excluded(const Partition& p) const;
};

// Loads a bundled family ("3x6" or "4x7") from the data directory, verifying
// the embedded checksum. Throws DataError on unknown id or corrupt file.
GeneratorFamily load_family(const std::string& id);
GeneratorFamily load_family_from_file(const std::filesystem::path& file);

// Shared failure memo for decomposition sweeps over one family.
class DecomposeCache {
 public:
  bool known_failure(std::uint64_t key) const { return failed_.count(key) != 0; }
  void record_failure(std::uint64_t key) { failed_.insert(key); }
  std::size_t size() const { return failed_.size(); }

 private:
  std::unordered_set<std::uint64_t> failed_;
};

// Writes lambda as a multiset of generators, or nullopt when impossible.
// Strategy: apply reduction rules while |lambda|/n exceeds the base search
// bound, then depth-first search over generators sorted by size descending.
// The returned summands add up to lambda exactly.
std::optional<std::vector<Partition>> decompose(const Partition& lambda,
                                                const GeneratorFamily& fam);
std::optional<std::vector<Partition>> decompose(const Partition& lambda,
                                                const GeneratorFamily& fam,
                                                DecomposeCache& cache);

struct VerifyEntry {
  Partition generator;
  int d = 0;
  bool checked = false;  // false = skipped (beyond budget)
  BigInt value;          // plethysm value when checked
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  int checked = 0;
  int skipped = 0;
};

// Asserts pl(mu, |mu|/n, n) > 0 for every generator with |mu|/n <= budget;
// throws DataError on any zero (generator data would be corrupt). Generators
// beyond the budget are reported as skipped.
VerifyReport verify_generators(const GeneratorFamily& fam, int pleth_budget);

// All partitions of `total` with at most m parts, deterministic order.
std::vector<Partition> enumerate_m_partitions(long long total, int m);

}  // namespace chowpow
