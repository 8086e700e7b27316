#include "chowpow/hwv.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <unordered_map>

namespace chowpow {

namespace {

// Per-label used-form bitsets, 8 bits per label, up to 14 labels per word.
// Covers every bundled family (n <= 8, d <= 16); larger d would need the
// byte-vector fallback, which no current data requires.
struct StateKey {
  std::uint64_t lo = 0, hi = 0;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::uint64_t h = k.lo * 0x9e3779b97f4a7c15ULL;
    h ^= h >> 32;
    h += k.hi * 0xff51afd7ed558ccdULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

int label_bitset_get(const StateKey& key, int label) {
  int idx = label - 1;
  std::uint64_t word = idx < 8 ? key.lo : key.hi;
  return static_cast<int>((word >> (8 * (idx % 8))) & 0xFF);
}

void label_bitset_or(StateKey& key, int label, int mask) {
  int idx = label - 1;
  std::uint64_t bits = static_cast<std::uint64_t>(mask) << (8 * (idx % 8));
  (idx < 8 ? key.lo : key.hi) |= bits;
}

struct ColumnContext {
  std::vector<int> labels;           // top to bottom
  std::vector<std::uint64_t> dets;   // det for each ordered form tuple, n^height entries
};

using StateMap = std::unordered_map<StateKey, std::uint64_t, StateKeyHash>;

struct Transition {
  const ColumnContext& col;
  const StateMap& cur;
  StateMap& next;
  const PrimeField& field;
  int n;
  bool prune;

  const StateKey* state = nullptr;
  std::uint64_t acc = 0;

  void run() {
    for (const auto& [key, value] : cur) {
      state = &key;
      acc = value;
      descend(0, 0, 0, StateKey{});
    }
  }

  // box: index within the column; used: bitmask of forms taken in this
  // column; tuple: packed ordered form tuple for the det table.
  void descend(std::size_t box, int used, std::size_t tuple, StateKey delta) {
    if (box == col.labels.size()) {
      std::uint64_t det = col.dets[tuple];
      if (prune && det == 0) return;
      StateKey key = *state;
      key.lo |= delta.lo;
      key.hi |= delta.hi;
      std::uint64_t& slot = next[key];
      slot = field.add(slot, field.mul(acc, det));
      return;
    }
    int label = col.labels[box];
    int taken = label_bitset_get(*state, label) | label_bitset_get(delta, label);
    for (int f = 0; f < n; ++f) {
      int bit = 1 << f;
      if (taken & bit) continue;  // properness: one form per label, always
      if (prune && (used & bit)) continue;  // repeated form in a column: det 0
      StateKey d2 = delta;
      label_bitset_or(d2, label, bit);
      descend(box + 1, used | bit, tuple * static_cast<std::size_t>(n) + static_cast<std::size_t>(f), d2);
    }
  }
};

void check_point_forms(const std::vector<LinearForm>& forms, std::size_t min_len) {
  for (const LinearForm& f : forms) {
    if (f.coords.size() < min_len) {
      throw std::invalid_argument("point form shorter than the tableau has rows");
    }
    if (f.coords.size() != forms.front().coords.size()) {
      throw std::invalid_argument("point forms have mixed lengths");
    }
  }
}

std::vector<std::uint64_t> column_det_table(const std::vector<int>& labels,
                                            const std::vector<LinearForm>& forms,
                                            const PrimeField& field) {
  std::size_t n = forms.size();
  std::size_t height = labels.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < height; ++i) total *= n;
  std::vector<std::uint64_t> dets(total);
  std::vector<const LinearForm*> tuple(height);
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t x = t;
    bool repeat = false;
    int used = 0;
    for (std::size_t b = height; b-- > 0;) {
      std::size_t f = x % n;
      x /= n;
      tuple[b] = &forms[f];
      if (used & (1 << f)) repeat = true;
      used |= 1 << f;
    }
    dets[t] = repeat ? 0 : column_det(tuple, field);
  }
  return dets;
}

}  // namespace

std::uint64_t eval_chow(const Tableau& t, const ChowPoint& pt, const PrimeField& field,
                        EvalOptions opt) {
  int n = static_cast<int>(pt.forms.size());
  int d = t.max_label();
  if (n < 1 || n > 8) throw std::invalid_argument("eval_chow: need 1 <= n <= 8");
  if (d > 16) throw std::invalid_argument("eval_chow: more than 16 labels unsupported");
  if (!t.content_is(d, n)) {
    throw std::invalid_argument("eval_chow: tableau content does not match the point");
  }
  check_point_forms(pt.forms, t.shape().length());

  std::vector<std::vector<int>> columns = t.columns();
  // A column with a repeated label vanishes identically: swapping the two
  // assignments negates the determinant and preserves everything else.
  for (const auto& col : columns) {
    for (std::size_t i = 0; i + 1 < col.size(); ++i) {
      for (std::size_t j = i + 1; j < col.size(); ++j) {
        if (col[i] == col[j]) return 0;
      }
    }
  }

  StateMap cur;
  cur.emplace(StateKey{}, 1);
  for (const auto& labels : columns) {
    if (cur.empty()) return 0;
    ColumnContext ctx{labels, column_det_table(labels, pt.forms, field)};
    StateMap next;
    next.reserve(cur.size() * 2);
    Transition tr{ctx, cur, next, field, n, opt.prune};
    tr.run();
    cur = std::move(next);
  }

  StateKey full;
  int mask = (1 << n) - 1;
  for (int j = 1; j <= d; ++j) label_bitset_or(full, j, mask);
  auto it = cur.find(full);
  return it == cur.end() ? 0 : it->second;
}

std::uint64_t eval_pow(const Tableau& t, const PowPoint& pt, const PrimeField& field,
                       EvalOptions opt) {
  int k = static_cast<int>(pt.forms.size());
  int d = t.max_label();
  int n = t.content_multiplicity();
  if (k < 1) throw std::invalid_argument("eval_pow: empty point");
  if (!t.content_is(d, n)) throw std::invalid_argument("eval_pow: irregular content");
  check_point_forms(pt.forms, t.shape().length());

  // Group equal columns; their determinants repeat across the product.
  std::vector<std::pair<std::vector<int>, int>> groups;
  for (const auto& col : t.columns()) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == col; });
    if (it == groups.end()) groups.emplace_back(col, 1);
    else ++it->second;
  }

  std::uint64_t total = 0;
  std::vector<int> assign(static_cast<std::size_t>(d), 0);  // label -> form index
  std::vector<const LinearForm*> tuple;
  while (true) {
    std::uint64_t term = 1;
    for (const auto& [labels, mult] : groups) {
      if (opt.prune) {
        int used = 0;
        bool repeat = false;
        for (int l : labels) {
          int f = assign[static_cast<std::size_t>(l - 1)];
          if (used & (1 << f)) { repeat = true; break; }
          used |= 1 << f;
        }
        if (repeat) { term = 0; break; }
      }
      tuple.clear();
      for (int l : labels) tuple.push_back(&pt.forms[static_cast<std::size_t>(assign[static_cast<std::size_t>(l - 1)])]);
      std::uint64_t det = column_det(tuple, field);
      if (det == 0) { term = 0; if (opt.prune) break; }
      term = field.mul(term, field.pow(det, static_cast<std::uint64_t>(mult)));
      if (term == 0 && opt.prune) break;
    }
    total = field.add(total, term);

    // odometer over assignments {1..d} -> {0..k-1}
    std::size_t pos = 0;
    while (pos < assign.size()) {
      if (++assign[pos] < k) break;
      assign[pos] = 0;
      ++pos;
    }
    if (pos == assign.size()) break;
  }
  return total;
}

namespace {

template <typename Point>
FpMatrix evaluation_matrix_impl(const std::vector<Tableau>& tableaux,
                                const std::vector<Point>& points, const PrimeField& field,
                                int jobs, EvalOptions opt) {
  FpMatrix mat(tableaux.size(), points.size());
  auto eval_one = [&](const Tableau& t, const Point& p) {
    if constexpr (std::is_same_v<Point, ChowPoint>) return eval_chow(t, p, field, opt);
    else return eval_pow(t, p, field, opt);
  };
  std::size_t total = tableaux.size() * points.size();
  if (jobs <= 1 || total < 2) {
    for (std::size_t i = 0; i < tableaux.size(); ++i) {
      for (std::size_t j = 0; j < points.size(); ++j) {
        mat.at(i, j) = eval_one(tableaux[i], points[j]);
      }
    }
    return mat;
  }
  std::vector<std::future<std::vector<std::uint64_t>>> futures;
  std::size_t chunk = (total + static_cast<std::size_t>(jobs) - 1) / static_cast<std::size_t>(jobs);
  for (std::size_t begin = 0; begin < total; begin += chunk) {
    std::size_t end = std::min(begin + chunk, total);
    futures.push_back(std::async(std::launch::async, [&, begin, end] {
      std::vector<std::uint64_t> vals;
      vals.reserve(end - begin);
      for (std::size_t idx = begin; idx < end; ++idx) {
        vals.push_back(eval_one(tableaux[idx / points.size()], points[idx % points.size()]));
      }
      return vals;
    }));
  }
  std::size_t begin = 0;
  for (auto& fut : futures) {
    std::vector<std::uint64_t> vals = fut.get();
    for (std::size_t off = 0; off < vals.size(); ++off) {
      std::size_t idx = begin + off;
      mat.at(idx / points.size(), idx % points.size()) = vals[off];
    }
    begin += vals.size();
  }
  return mat;
}

}  // namespace

FpMatrix evaluation_matrix(const std::vector<Tableau>& tableaux,
                           const std::vector<ChowPoint>& points, const PrimeField& field,
                           int jobs, EvalOptions opt) {
  return evaluation_matrix_impl(tableaux, points, field, jobs, opt);
}

FpMatrix evaluation_matrix(const std::vector<Tableau>& tableaux,
                           const std::vector<PowPoint>& points, const PrimeField& field,
                           int jobs, EvalOptions opt) {
  return evaluation_matrix_impl(tableaux, points, field, jobs, opt);
}

}  // namespace chowpow
