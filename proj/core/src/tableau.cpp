#include "chowpow/tableau.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "chowpow/prime_field.hpp"

namespace chowpow {

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (rows_.size() != shape_.length()) {
    throw std::invalid_argument("tableau: row count does not match shape");
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (static_cast<int>(rows_[r].size()) != shape_.part(r + 1)) {
      throw std::invalid_argument("tableau: row length does not match shape");
    }
    for (int v : rows_[r]) {
      if (v < 1) throw std::invalid_argument("tableau: labels start at 1");
    }
  }
}

Tableau Tableau::from_rows(std::vector<std::vector<int>> rows) {
  std::vector<int> lens;
  lens.reserve(rows.size());
  for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
  return Tableau(Partition(std::move(lens)), std::move(rows));
}

int Tableau::max_label() const {
  int m = 0;
  for (const auto& r : rows_) {
    for (int v : r) m = std::max(m, v);
  }
  return m;
}

bool Tableau::content_is(int d, int n) const {
  std::vector<int> counts(static_cast<std::size_t>(d) + 1, 0);
  for (const auto& r : rows_) {
    for (int v : r) {
      if (v > d) return false;
      ++counts[static_cast<std::size_t>(v)];
    }
  }
  for (int j = 1; j <= d; ++j) {
    if (counts[static_cast<std::size_t>(j)] != n) return false;
  }
  return true;
}

int Tableau::content_multiplicity() const {
  int c = 0;
  for (const auto& r : rows_) {
    for (int v : r) {
      if (v == 1) ++c;
    }
  }
  return c;
}

bool Tableau::is_semistandard() const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c + 1 < rows_[r].size(); ++c) {
      if (rows_[r][c] > rows_[r][c + 1]) return false;
    }
    if (r + 1 < rows_.size()) {
      for (std::size_t c = 0; c < rows_[r + 1].size(); ++c) {
        if (rows_[r][c] >= rows_[r + 1][c]) return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<int>> Tableau::columns() const {
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(shape_.part(1)));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].size() > c) cols[c].push_back(rows_[r][c]);
    }
  }
  return cols;
}

namespace {

char label_symbol(int v) {
  if (v >= 1 && v <= 9) return static_cast<char>('0' + v);
  if (v >= 10 && v <= 35) return static_cast<char>('A' + v - 10);
  throw std::invalid_argument("label out of compact range [1,35]");
}

}  // namespace

std::string Tableau::to_compact() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += '.';
    std::size_t c = 0;
    while (c < rows_[r].size()) {
      std::size_t run = c;
      while (run < rows_[r].size() && rows_[r][run] == rows_[r][c]) ++run;
      out += label_symbol(rows_[r][c]);
      std::size_t len = run - c;
      if (len > 1) {
        out += '^';
        if (len > 9) out += '{' + std::to_string(len) + '}';
        else out += static_cast<char>('0' + len);
      }
      c = run;
    }
  }
  return out;
}

Tableau tableau_from_permutation(const Partition& shape, const std::vector<int>& pi, int n) {
  long long size = shape.size();
  if (n < 1 || size % n != 0) {
    throw std::invalid_argument("tableau_from_permutation: |shape| must be a multiple of n");
  }
  if (static_cast<long long>(pi.size()) != size) {
    throw std::invalid_argument("tableau_from_permutation: permutation length != |shape|");
  }
  std::vector<bool> seen(pi.size() + 1, false);
  for (int v : pi) {
    if (v < 1 || v > static_cast<int>(pi.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("tableau_from_permutation: not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }

  std::vector<std::vector<int>> rows(shape.length());
  for (std::size_t r = 0; r < shape.length(); ++r) {
    rows[r].resize(static_cast<std::size_t>(shape.part(r + 1)));
  }
  Partition mu = shape.transposed();
  int j = 0;  // columnwise box number, 0-based here
  for (std::size_t c = 0; c < mu.length(); ++c) {
    for (int r = 0; r < mu.part(c + 1); ++r) {
      int image = pi[static_cast<std::size_t>(j)];
      rows[static_cast<std::size_t>(r)][c] = (image + n - 1) / n;
      ++j;
    }
  }
  return Tableau(shape, std::move(rows));
}

namespace {

struct SsytSearch {
  const Partition& shape;
  int d, n;
  std::size_t limit;
  std::vector<std::vector<int>> rows;
  std::vector<int> remaining;  // per label
  std::vector<Tableau>& out;

  bool cell(std::size_t r, std::size_t c) {
    if (c == rows[r].size()) {
      if (r + 1 == rows.size()) return complete();
      // Label v fits only in rows <= v, so label r+1 must be used up before
      // row r+2 starts (earlier labels were checked at earlier boundaries).
      if (static_cast<int>(r) + 1 <= d && remaining[r + 1] > 0) return false;
      return cell(r + 1, 0);
    }
    int lo = c > 0 ? rows[r][c - 1] : 1;
    lo = std::max(lo, static_cast<int>(r) + 1);  // column strictness forces label >= row
    int above = r > 0 ? rows[r - 1][c] : 0;
    lo = std::max(lo, above + 1);
    for (int v = lo; v <= d; ++v) {
      if (remaining[static_cast<std::size_t>(v)] == 0) continue;
      rows[r][c] = v;
      --remaining[static_cast<std::size_t>(v)];
      bool stop = cell(r, c + 1);
      ++remaining[static_cast<std::size_t>(v)];
      if (stop) return true;
    }
    return false;
  }

  bool complete() {
    out.emplace_back(shape, rows);
    return limit != 0 && out.size() >= limit;
  }
};

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int d, int n, std::size_t limit) {
  if (shape.size() != static_cast<long long>(d) * n) {
    throw std::invalid_argument("enumerate_ssyt: |shape| != d*n");
  }
  std::vector<Tableau> out;
  if (shape.empty()) {
    out.push_back(Tableau(shape, {}));
    return out;
  }
  if (static_cast<int>(shape.length()) > d) return out;  // column strictness unsatisfiable
  std::vector<std::vector<int>> rows(shape.length());
  for (std::size_t r = 0; r < shape.length(); ++r) {
    rows[r].resize(static_cast<std::size_t>(shape.part(r + 1)));
  }
  std::vector<int> remaining(static_cast<std::size_t>(d) + 1, n);
  remaining[0] = 0;
  SsytSearch search{shape, d, n, limit, std::move(rows), std::move(remaining), out};
  search.cell(0, 0);
  return out;
}

namespace {

struct SsytSample {
  const Partition& shape;
  int d, n;
  SplitMix64& rng;
  std::vector<std::vector<int>> rows;
  std::vector<int> remaining;

  bool cell(std::size_t r, std::size_t c) {
    if (c == rows[r].size()) {
      if (r + 1 < rows.size() && remaining[r + 1] > 0) return false;
      return r + 1 == rows.size() ? true : cell(r + 1, 0);
    }
    int lo = c > 0 ? rows[r][c - 1] : 1;
    lo = std::max(lo, static_cast<int>(r) + 1);
    int above = r > 0 ? rows[r - 1][c] : 0;
    lo = std::max(lo, above + 1);
    std::vector<int> candidates;
    for (int v = lo; v <= d; ++v) {
      if (remaining[static_cast<std::size_t>(v)] > 0) candidates.push_back(v);
    }
    for (std::size_t i = candidates.size(); i > 1; --i) {
      std::swap(candidates[i - 1], candidates[rng.next_mod(i)]);
    }
    for (int v : candidates) {
      rows[r][c] = v;
      --remaining[static_cast<std::size_t>(v)];
      if (cell(r, c + 1)) return true;
      ++remaining[static_cast<std::size_t>(v)];
    }
    return false;
  }
};

}  // namespace

std::vector<Tableau> sample_ssyt(const Partition& shape, int d, int n, std::size_t count,
                                 std::uint64_t seed) {
  if (shape.size() != static_cast<long long>(d) * n) {
    throw std::invalid_argument("sample_ssyt: |shape| != d*n");
  }
  std::vector<Tableau> out;
  if (shape.empty() || static_cast<int>(shape.length()) > d) return out;
  SplitMix64 rng(seed);
  std::set<std::vector<std::vector<int>>> seen;
  std::size_t attempts = 0;
  while (out.size() < count && attempts < count * 200 + 50) {
    ++attempts;
    std::vector<std::vector<int>> rows(shape.length());
    for (std::size_t r = 0; r < shape.length(); ++r) {
      rows[r].resize(static_cast<std::size_t>(shape.part(r + 1)));
    }
    std::vector<int> remaining(static_cast<std::size_t>(d) + 1, n);
    remaining[0] = 0;
    SsytSample sample{shape, d, n, rng, std::move(rows), std::move(remaining)};
    if (sample.cell(0, 0) && seen.insert(sample.rows).second) {
      out.emplace_back(shape, sample.rows);
    }
  }
  return out;
}

namespace {

BigInt binomial_big(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

BigInt cache_size(const Tableau& t) {
  int d = t.max_label();
  int n = t.content_multiplicity();
  std::vector<int> kappa(static_cast<std::size_t>(d) + 1, 0);
  BigInt total = 0;
  for (const auto& col : t.columns()) {
    for (int v : col) ++kappa[static_cast<std::size_t>(v)];
    BigInt prod = 1;
    for (int j = 1; j <= d; ++j) prod *= binomial_big(n, kappa[static_cast<std::size_t>(j)]);
    total += prod;
  }
  return total;
}

namespace {

class CompactParser {
 public:
  explicit CompactParser(std::string_view text) : text_(text) {}

  std::vector<Tableau> parse() {
    std::vector<Tableau> out;
    skip_ws();
    while (pos_ < text_.size()) {
      out.push_back(parse_tableau());
      skip_ws();
      if (pos_ < text_.size()) {
        if (text_[pos_] != ',') fail("expected ',' between tableaux");
        ++pos_;
        skip_ws();
        if (pos_ == text_.size()) break;  // trailing comma tolerated
      }
    }
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) { throw TableauParseError(pos_, what); }

  int parse_symbol() {
    char c = text_[pos_];
    if (c >= '1' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
    fail(std::string("expected a label symbol, got '") + c + "'");
  }

  std::size_t parse_repeat() {
    ++pos_;  // consume '^'
    skip_ws();
    if (pos_ == text_.size()) fail("repetition count missing after '^'");
    if (text_[pos_] == '{') {
      ++pos_;
      std::size_t value = 0;
      bool any = false;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
        value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
        ++pos_;
        any = true;
      }
      if (!any || pos_ == text_.size() || text_[pos_] != '}') fail("malformed '{count}'");
      ++pos_;
      if (value == 0) fail("repetition count must be positive");
      return value;
    }
    if (text_[pos_] < '1' || text_[pos_] > '9') fail("repetition count must be a digit or '{count}'");
    return static_cast<std::size_t>(text_[pos_++] - '0');
  }

  Tableau parse_tableau() {
    std::size_t start = pos_;
    std::vector<std::vector<int>> rows;
    std::vector<int> row;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
        continue;
      }
      if (c == ',') break;
      if (c == '.') {
        if (row.empty()) fail("empty row");
        rows.push_back(std::move(row));
        row.clear();
        ++pos_;
        continue;
      }
      int sym = parse_symbol();
      ++pos_;
      std::size_t rep = 1;
      if (pos_ < text_.size() && text_[pos_] == '^') rep = parse_repeat();
      row.insert(row.end(), rep, sym);
    }
    if (row.empty()) fail("empty row");
    rows.push_back(std::move(row));
    try {
      return Tableau::from_rows(std::move(rows));
    } catch (const std::invalid_argument& e) {
      throw TableauParseError(start, e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Tableau> parse_compact_tableaux(std::string_view text) {
  return CompactParser(text).parse();
}

std::vector<Tableau> load_tableaux_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_array()) j = nlohmann::json::array({j});
    std::vector<Tableau> out;
    for (const auto& item : j) {
      std::vector<int> shape_parts;
      for (const auto& v : item.at("shape")) shape_parts.push_back(v.get<int>());
      std::vector<std::vector<int>> rows;
      for (const auto& r : item.at("rows")) {
        rows.emplace_back();
        for (const auto& v : r) rows.back().push_back(v.get<int>());
      }
      out.emplace_back(Partition(std::move(shape_parts)), std::move(rows));
    }
    return out;
  }
  return parse_compact_tableaux(text);
}

}  // namespace chowpow
