#include "chowpow/partition.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace chowpow {

namespace {

void canonicalize(std::vector<int>& parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (parts[i] < parts[i + 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("partition parts must be nonnegative");
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
  canonicalize(parts_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  canonicalize(parts_);
}

Partition Partition::from_string(std::string_view csv) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string_view tok = csv.substr(pos, comma == std::string_view::npos
                                               ? std::string_view::npos
                                               : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("bad partition literal: " + std::string(csv));
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

long long Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::transposed() const {
  if (parts_.empty()) return {};
  std::vector<int> t(static_cast<std::size_t>(parts_[0]), 0);
  for (std::size_t i = 1; i <= static_cast<std::size_t>(parts_[0]); ++i) {
    int count = 0;
    for (int p : parts_) {
      if (p >= static_cast<int>(i)) ++count;
    }
    t[i - 1] = count;
  }
  return Partition(std::move(t));
}

Partition Partition::bar() const {
  if (parts_.empty()) return {};
  return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::vector<int> Partition::column_counts() const {
  std::vector<int> c(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    int next = (i + 1 < parts_.size()) ? parts_[i + 1] : 0;
    c[i] = parts_[i] - next;
  }
  return c;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition operator+(const Partition& a, const Partition& b) {
  std::vector<int> sum(std::max(a.length(), b.length()), 0);
  for (std::size_t i = 0; i < sum.size(); ++i) {
    sum[i] = a.part(i + 1) + b.part(i + 1);
  }
  return Partition(std::move(sum));
}

bool try_subtract(const Partition& a, const Partition& b, Partition* out) {
  if (b.length() > a.length()) return false;
  std::vector<int> diff(a.length());
  for (std::size_t i = 0; i < a.length(); ++i) {
    diff[i] = a.part(i + 1) - b.part(i + 1);
    if (diff[i] < 0) return false;
  }
  for (std::size_t i = 0; i + 1 < diff.size(); ++i) {
    if (diff[i] < diff[i + 1]) return false;
  }
  if (out) *out = Partition(std::move(diff));
  return true;
}

int Composition::total() const {
  return std::accumulate(entries.begin(), entries.end(), 0);
}

namespace {

void compositions_rec(int total, int parts, std::vector<int>& cur,
                      std::vector<Composition>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(Composition{cur});
    cur.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    cur.push_back(first);
    compositions_rec(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions(int total, int parts) {
  if (parts < 1) throw std::invalid_argument("compositions: parts must be >= 1");
  if (total < 0) throw std::invalid_argument("compositions: total must be >= 0");
  std::vector<Composition> out;
  std::vector<int> cur;
  compositions_rec(total, parts, cur, out);
  return out;
}

namespace {

void partitions_rec(long long remaining, int max_parts, int max_part,
                    std::vector<int>& cur,
                    const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition(cur));
    return;
  }
  if (max_parts == 0) return;
  long long hi = std::min<long long>(max_part, remaining);
  // Parts still to place can cover the remainder only if hi*max_parts reaches it.
  for (long long p = hi; p >= 1; --p) {
    if (p * max_parts < remaining) break;
    cur.push_back(static_cast<int>(p));
    partitions_rec(remaining - p, max_parts - 1, static_cast<int>(p), cur, fn);
    cur.pop_back();
  }
}

}  // namespace

void for_each_partition(long long total, int max_parts,
                        const std::function<void(const Partition&)>& fn) {
  if (total < 0 || max_parts < 1) {
    throw std::invalid_argument("for_each_partition: bad arguments");
  }
  std::vector<int> cur;
  partitions_rec(total, max_parts, total > INT32_MAX ? INT32_MAX : static_cast<int>(total),
                 cur, fn);
}

std::vector<Partition> partitions_with_max_parts(long long total, int max_parts) {
  std::vector<Partition> out;
  for_each_partition(total, max_parts, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : p.parts()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace chowpow
