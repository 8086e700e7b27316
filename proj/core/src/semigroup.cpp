#include "chowpow/semigroup.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chowpow/data_path.hpp"
#include "chowpow/plethysm.hpp"

namespace chowpow {

namespace {

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : data) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string join_parts(const Partition& p) { return p.to_string(); }

// Canonical serialization covered by the checksum:
//   family|m|n|base|col:min:sub;...|bar;...|gen;...
std::string canonical_payload(const GeneratorFamily& fam) {
  std::ostringstream out;
  out << fam.id << '|' << fam.m << '|' << fam.n << '|' << fam.base_search_bound << '|';
  for (std::size_t i = 0; i < fam.reductions.size(); ++i) {
    if (i) out << ';';
    const ReductionRule& r = fam.reductions[i];
    out << r.column << ':' << r.min_count << ':' << join_parts(r.subtract);
  }
  out << '|';
  for (std::size_t i = 0; i < fam.excluded_bars.size(); ++i) {
    if (i) out << ';';
    out << join_parts(fam.excluded_bars[i]);
  }
  out << '|';
  for (std::size_t i = 0; i < fam.generators.size(); ++i) {
    if (i) out << ';';
    out << join_parts(fam.generators[i]);
  }
  return out.str();
}

Partition partition_from_json(const nlohmann::json& arr) {
  std::vector<int> parts;
  for (const auto& v : arr) parts.push_back(v.get<int>());
  return Partition(std::move(parts));
}

}  // namespace

bool GeneratorFamily::contains(const Partition& p) const {
  return std::find(generators.begin(), generators.end(), p) != generators.end();
}

bool GeneratorFamily::bar_excluded(const Partition& p) const {
  Partition b = p.bar();
  return std::find(excluded_bars.begin(), excluded_bars.end(), b) != excluded_bars.end();
}

GeneratorFamily load_family_from_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw DataError("cannot open " + file.string());
  nlohmann::json j;
  in >> j;

  GeneratorFamily fam;
  fam.id = j.at("family").get<std::string>();
  fam.m = j.at("m").get<int>();
  fam.n = j.at("n").get<int>();
  fam.base_search_bound = j.at("base_search_bound").get<int>();
  for (const auto& r : j.at("reductions")) {
    ReductionRule rule;
    rule.column = r.at("column").get<int>();
    rule.min_count = r.at("min_count").get<int>();
    rule.subtract = partition_from_json(r.at("subtract"));
    fam.reductions.push_back(std::move(rule));
  }
  for (const auto& b : j.at("excluded_bars")) fam.excluded_bars.push_back(partition_from_json(b));
  for (const auto& g : j.at("generators")) fam.generators.push_back(partition_from_json(g));

  std::string want = j.at("checksum").get<std::string>();
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical_payload(fam))));
  if (want != buf) {
    throw DataError("checksum mismatch in " + file.string() + ": file says " + want +
                    ", contents hash to " + buf);
  }
  for (const Partition& g : fam.generators) {
    if (g.size() % fam.n != 0 || !g.is_m_partition(fam.m)) {
      throw DataError("generator " + g.to_string() + " violates family invariants");
    }
  }
  return fam;
}

GeneratorFamily load_family(const std::string& id) {
  if (id == "3x6") return load_family_from_file(data_file("generators_3x6.json"));
  if (id == "4x7") return load_family_from_file(data_file("generators_4x7.json"));
  throw DataError("unknown generator family: " + id);
}

namespace {

// Residuals in the search phase have at most 4 parts, each < 128 after the
// reduction phase; pack parts plus the generator start index into one word.
std::uint64_t pack_state(const Partition& p, std::size_t start_idx) {
  std::uint64_t key = static_cast<std::uint64_t>(start_idx) << 40;
  for (std::size_t i = 0; i < p.length(); ++i) {
    key |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(p.part(i + 1))) << (8 * i);
  }
  return key;
}

struct Dfs {
  const std::vector<Partition>& gens;  // sorted by size descending
  const GeneratorFamily& fam;
  DecomposeCache& cache;
  std::vector<Partition> picked;

  bool run(const Partition& residual, std::size_t start) {
    if (residual.empty()) return true;
    // A residual whose bar is excluded has zero plethysm, hence cannot be a
    // sum of generators.
    if (fam.bar_excluded(residual)) return false;
    std::uint64_t key = pack_state(residual, start);
    if (cache.known_failure(key)) return false;
    long long sz = residual.size();
    for (std::size_t i = start; i < gens.size(); ++i) {
      if (gens[i].size() > sz) continue;
      Partition next;
      if (!try_subtract(residual, gens[i], &next)) continue;
      if (run(next, i)) {
        picked.push_back(gens[i]);
        return true;
      }
    }
    cache.record_failure(key);
    return false;
  }
};

}  // namespace

std::optional<std::vector<Partition>> decompose(const Partition& lambda,
                                                const GeneratorFamily& fam,
                                                DecomposeCache& cache) {
  if (!lambda.is_m_partition(fam.m)) {
    throw std::invalid_argument("decompose: " + lambda.to_string() + " has more than " +
                                std::to_string(fam.m) + " rows");
  }
  if (lambda.size() % fam.n != 0) {
    throw std::invalid_argument("decompose: |lambda| not a multiple of n");
  }

  std::vector<Partition> picked;
  Partition cur = lambda;
  while (cur.size() / fam.n > fam.base_search_bound) {
    bool applied = false;
    std::vector<int> cols = cur.column_counts();
    for (const ReductionRule& rule : fam.reductions) {
      int c = (rule.column >= 1 && rule.column <= static_cast<int>(cols.size()))
                  ? cols[static_cast<std::size_t>(rule.column - 1)]
                  : 0;
      if (c < rule.min_count) continue;
      Partition next;
      if (!try_subtract(cur, rule.subtract, &next)) continue;
      picked.push_back(rule.subtract);
      cur = std::move(next);
      applied = true;
      break;
    }
    if (!applied) return std::nullopt;
  }

  std::vector<Partition> gens = fam.generators;
  std::sort(gens.begin(), gens.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.parts() > b.parts();
  });

  Dfs dfs{gens, fam, cache, {}};
  if (!dfs.run(cur, 0)) return std::nullopt;
  picked.insert(picked.end(), dfs.picked.begin(), dfs.picked.end());
  return picked;
}

std::optional<std::vector<Partition>> decompose(const Partition& lambda,
                                                const GeneratorFamily& fam) {
  DecomposeCache cache;
  return decompose(lambda, fam, cache);
}

VerifyReport verify_generators(const GeneratorFamily& fam, int pleth_budget) {
  VerifyReport report;
  for (const Partition& g : fam.generators) {
    VerifyEntry entry;
    entry.generator = g;
    entry.d = static_cast<int>(g.size() / fam.n);
    if (entry.d <= pleth_budget) {
      entry.checked = true;
      entry.value = plethysm(g, entry.d, fam.n);
      if (entry.value <= 0) {
        throw DataError("generator " + g.to_string() + " has zero plethysm: corrupt data");
      }
      ++report.checked;
    } else {
      ++report.skipped;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::vector<Partition> enumerate_m_partitions(long long total, int m) {
  return partitions_with_max_parts(total, m);
}

}  // namespace chowpow
