#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chowpow/bigint.hpp"
#include "chowpow/partition.hpp"

namespace chowpow {

struct TableauParseError : std::runtime_error {
  TableauParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + what),
        offset(offset) {}
  std::size_t offset;
};

// Filling of a Young diagram with labels 1..d. The content contract (each
// label appearing exactly n times) is what HWV evaluation expects; it is
// checked by content_is(), not enforced at construction.
class Tableau {
 public:
  Tableau(Partition shape, std::vector<std::vector<int>> rows);
  static Tableau from_rows(std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  // 1-based row/column.
  int label(int row, int col) const { return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)]; }

  int max_label() const;
  // Each of 1..d appears exactly n times.
  bool content_is(int d, int n) const;
  // Multiplicity of label 1 (= n under the content contract); 0 if empty.
  int content_multiplicity() const;
  bool is_semistandard() const;

  // Column label lists, top to bottom, left to right.
  std::vector<std::vector<int>> columns() const;

  std::string to_compact() const;

  bool operator==(const Tableau&) const = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

// Fills the shape by numbering boxes columnwise (left to right, top to
// bottom) as j(b) and placing ceil(pi(j(b))/n) at box b. pi is a 1-based
// permutation of {1..|shape|}.
Tableau tableau_from_permutation(const Partition& shape, const std::vector<int>& pi, int n);

// All semistandard tableaux of the given shape whose content is d labels,
// each appearing n times, in deterministic row-by-row backtracking order;
// stops after `limit` results (0 = no limit).
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int d, int n, std::size_t limit = 0);

// Up to `count` distinct random semistandard tableaux with the same content
// contract; seeded and reproducible.
std::vector<Tableau> sample_ssyt(const Partition& shape, int d, int n, std::size_t count,
                                 std::uint64_t seed);

// Number of non-equivalent placement prefixes the chow evaluation visits:
//   sum_{k=1}^{lambda_1} prod_{i=1}^{d} C(n, kappa_i(T up to column k)).
BigInt cache_size(const Tableau& t);

// Compact text form: rows separated by '.', tableaux separated by ','.
// Symbols '1'-'9' then 'A'-'Z' for labels 10..35; '^' followed by a decimal
// count (single digit, or braces for multi-digit: "4^{12}") repeats the
// preceding symbol. Whitespace is ignored.
std::vector<Tableau> parse_compact_tableaux(std::string_view text);

// Loads either the compact text form or the JSON form
// [{"shape":[...],"rows":[[...]]}, ...] depending on the file contents.
std::vector<Tableau> load_tableaux_file(const std::filesystem::path& file);

}  // namespace chowpow
