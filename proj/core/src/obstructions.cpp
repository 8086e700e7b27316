#include "chowpow/obstructions.hpp"

#include <json.hpp>

#include "chowpow/data_path.hpp"
#include "chowpow/plethysm.hpp"

namespace chowpow {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  SplitMix64 rng(seed ^ (salt * 0x9e3779b97f4a7c15ULL));
  return rng.next();
}

std::vector<Tableau> tableaux_for_pow(const Partition& lambda, int d, int n,
                                      std::size_t budget) {
  if (lambda == Partition{34, 6, 2} && d == 7 && n == 6) {
    return load_tableaux_file(data_file("tableaux_34_6_2.txt"));
  }
  if (lambda == Partition{47, 7, 2} && d == 8 && n == 7) {
    return load_tableaux_file(data_file("tableaux_47_7_2.txt"));
  }
  return enumerate_ssyt(lambda, d, n, budget);
}

nlohmann::json cert_json(const Certificate& c) {
  return {{"kind", c.kind},     {"seed", c.seed},       {"prime", std::to_string(c.prime)},
          {"retries", c.retries}, {"tableaux", c.tableaux}, {"points", c.points},
          {"rank", c.rank}};
}

}  // namespace

PowMultiplicity pow_multiplicity(const Partition& lambda, int m, int n, int d, int k,
                                 const RandomizedOptions& opt) {
  if (!lambda.is_m_partition(m)) {
    throw std::invalid_argument("pow_multiplicity: lambda has more than m rows");
  }
  if (lambda.size() != static_cast<long long>(d) * n) {
    throw std::invalid_argument("pow_multiplicity: lambda is not a partition of d*n");
  }
  PowMultiplicity out;
  if (k >= d) {
    out.exact = true;
    out.value = plethysm(lambda, d, n);
    return out;
  }

  PrimeField field(opt.prime);
  std::vector<Tableau> tabs = tableaux_for_pow(lambda, d, n, opt.tableau_budget);
  Certificate cert;
  cert.kind = "rank";
  cert.seed = opt.seed;
  cert.prime = opt.prime;
  cert.tableaux = static_cast<int>(tabs.size());
  cert.points = static_cast<int>(tabs.size());
  int best = 0;
  for (int attempt = 0; attempt <= opt.max_retries; ++attempt) {
    std::vector<PowPoint> points;
    for (std::size_t j = 0; j < tabs.size(); ++j) {
      points.push_back(random_pow_point(
          m, n, k, mix_seed(opt.seed, (static_cast<std::uint64_t>(attempt) << 32) | j), field));
    }
    FpMatrix mat = evaluation_matrix(tabs, points, field, opt.jobs);
    best = std::max(best, matrix_rank(std::move(mat), field));
    cert.retries = attempt;
    if (best == static_cast<int>(tabs.size())) break;
  }
  cert.rank = best;
  out.exact = false;
  out.value = best;
  out.certificate = cert;
  return out;
}

BigInt chow_upper_bound(const Partition& lambda, int m, int n, int d) {
  if (n < m) {
    throw std::invalid_argument("chow_upper_bound: requires n >= m");
  }
  if (!lambda.is_m_partition(m)) {
    throw std::invalid_argument("chow_upper_bound: lambda has more than m rows");
  }
  return plethysm(lambda, n, d);
}

Certificate chow_mult_lower_bound(const Partition& lambda, int m, int n, int d,
                                  const std::vector<Tableau>& tableaux, int points,
                                  const RandomizedOptions& opt) {
  Certificate cert;
  cert.seed = opt.seed;
  cert.prime = opt.prime;
  if (lambda.length() <= 2 && plethysm(lambda, d, n) > 0) {
    cert.kind = "inheritance";
    cert.rank = 1;
    return cert;
  }
  cert.kind = "rank";
  cert.tableaux = static_cast<int>(tableaux.size());
  cert.points = points;
  PrimeField field(opt.prime);
  int best = 0;
  for (int attempt = 0; attempt <= opt.max_retries; ++attempt) {
    std::vector<ChowPoint> pts;
    for (int j = 0; j < points; ++j) {
      pts.push_back(random_chow_point(
          m, n, mix_seed(opt.seed, (static_cast<std::uint64_t>(attempt) << 32) | static_cast<std::uint64_t>(j)),
          field));
    }
    FpMatrix mat = evaluation_matrix(tableaux, pts, field, opt.jobs);
    best = std::max(best, matrix_rank(std::move(mat), field));
    cert.retries = attempt;
    if (best == static_cast<int>(std::min(tableaux.size(), static_cast<std::size_t>(points)))) break;
  }
  cert.rank = best;
  return cert;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::multiplicity_obstruction: return "multiplicity-obstruction";
    case Verdict::occurrence_obstruction: return "occurrence-obstruction";
    case Verdict::none: return "none";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string ObstructionReport::to_json() const {
  nlohmann::json j;
  j["schema"] = "1";
  j["m"] = m;
  j["n"] = n;
  j["k"] = k;
  j["d"] = d;
  j["lambda"] = lambda.parts();
  j["pow_multiplicity"] = {{"kind", pow.exact ? "exact" : "lower_bound"},
                           {"value", pow.value.str()}};
  if (pow.certificate) j["pow_multiplicity"]["certificate"] = cert_json(*pow.certificate);
  j["chow_upper_bound"] = chow_upper.str();
  if (chow_lower) j["chow_lower_bound"] = cert_json(*chow_lower);
  j["chow_exact"] = chow_exact;
  j["verdict"] = verdict_name(verdict);
  j["seed"] = seed;
  j["prime"] = std::to_string(prime);
  return j.dump();
}

ObstructionReport multiplicity_obstruction_check(int m, int n, int k, int d,
                                                 const Partition& lambda,
                                                 const RandomizedOptions& opt) {
  ObstructionReport report;
  report.m = m;
  report.n = n;
  report.k = k;
  report.d = d;
  report.lambda = lambda;
  report.seed = opt.seed;
  report.prime = opt.prime;
  report.pow = pow_multiplicity(lambda, m, n, d, k, opt);
  // The bound itself is hypothesis-free to compute; the n >= m guard lives on
  // the public chow_upper_bound entry point.
  report.chow_upper = plethysm(lambda, n, d);
  if (report.chow_upper < report.pow.value) {
    report.verdict = (report.chow_upper == 0 && report.pow.value > 0)
                         ? Verdict::occurrence_obstruction
                         : Verdict::multiplicity_obstruction;
  } else {
    report.verdict = report.pow.exact ? Verdict::none : Verdict::inconclusive;
  }
  return report;
}

ObstructionReport occurrence_obstruction_check(int m, int n, int d, const Partition& lambda,
                                               int k, const RandomizedOptions& opt) {
  if (k < 0) k = d;
  ObstructionReport report;
  report.m = m;
  report.n = n;
  report.k = k;
  report.d = d;
  report.lambda = lambda;
  report.seed = opt.seed;
  report.prime = opt.prime;
  // At k = d the Pow multiplicity equals the plethysm, so the verdict is an
  // exact statement, independent of any randomization.
  report.pow = pow_multiplicity(lambda, m, n, d, std::max(k, d), opt);
  report.chow_upper = plethysm(lambda, n, d);
  report.verdict = (report.chow_upper == 0 && report.pow.value > 0)
                       ? Verdict::occurrence_obstruction
                       : Verdict::none;
  return report;
}

std::vector<Tableau> load_chow_witnesses(const std::string& family_id) {
  if (family_id == "3x6") return load_tableaux_file(data_file("chow_witnesses_3x6.txt"));
  if (family_id == "4x7") return load_tableaux_file(data_file("chow_witnesses_4x7.txt"));
  throw DataError("no bundled witnesses for family: " + family_id);
}

std::optional<Tableau> witness_for(const std::vector<Tableau>& witnesses,
                                   const Partition& shape) {
  for (const Tableau& t : witnesses) {
    if (t.shape() == shape) return t;
  }
  return std::nullopt;
}

std::string PipelineReport::to_json() const {
  nlohmann::json j;
  j["schema"] = "1";
  j["family"] = family;
  j["eval_budget"] = eval_budget;
  j["fewrows"] = fewrows;
  j["certified"] = certified;
  j["skipped"] = skipped;
  j["uncovered"] = nlohmann::json::array();
  for (const Partition& p : uncovered) j["uncovered"].push_back(p.parts());
  j["entries"] = nlohmann::json::array();
  for (const PipelineEntry& e : entries) {
    nlohmann::json je;
    je["generator"] = e.generator.parts();
    je["d"] = e.d;
    switch (e.kind) {
      case PipelineEntry::Kind::fewrows: je["kind"] = "fewrows"; break;
      case PipelineEntry::Kind::witness_rank: je["kind"] = "witness-rank"; break;
      case PipelineEntry::Kind::skipped: je["kind"] = "skipped"; break;
      case PipelineEntry::Kind::no_witness_found: je["kind"] = "no-witness-found"; break;
    }
    if (e.certificate) je["certificate"] = cert_json(*e.certificate);
    j["entries"].push_back(std::move(je));
  }
  return j.dump();
}

PipelineReport no_occurrence_pipeline(const GeneratorFamily& fam, int eval_budget,
                                      const RandomizedOptions& opt) {
  PipelineReport report;
  report.family = fam.id;
  report.eval_budget = eval_budget;
  std::vector<Tableau> witnesses = load_chow_witnesses(fam.id);

  for (const Partition& gen : fam.generators) {
    PipelineEntry entry;
    entry.generator = gen;
    entry.d = static_cast<int>(gen.size() / fam.n);
    if (gen.length() <= 2) {
      if (plethysm(gen, entry.d, fam.n) > 0) {
        entry.kind = PipelineEntry::Kind::fewrows;
        ++report.fewrows;
      } else {
        entry.kind = PipelineEntry::Kind::no_witness_found;
        report.uncovered.push_back(gen);
      }
    } else if (entry.d <= eval_budget) {
      std::vector<Tableau> tabs;
      if (auto w = witness_for(witnesses, gen)) {
        tabs.push_back(*w);
      } else {
        tabs = sample_ssyt(gen, entry.d, fam.n, 3, opt.seed);
      }
      RandomizedOptions local = opt;
      local.seed = mix_seed(opt.seed, PartitionHash{}(gen));
      Certificate cert = chow_mult_lower_bound(gen, fam.m, fam.n, entry.d, tabs, 2, local);
      entry.certificate = cert;
      if (cert.rank >= 1) {
        entry.kind = PipelineEntry::Kind::witness_rank;
        ++report.certified;
      } else {
        entry.kind = PipelineEntry::Kind::no_witness_found;
        report.uncovered.push_back(gen);
      }
    } else {
      entry.kind = PipelineEntry::Kind::skipped;
      ++report.skipped;
      report.uncovered.push_back(gen);
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace chowpow
