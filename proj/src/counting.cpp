#include "asmenum/counting.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "asmenum/asm.hpp"

namespace asmenum {

BottomRow::BottomRow(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::domain_error("BottomRow: empty row");
  for (std::size_t j = 0; j + 1 < values_.size(); ++j)
    if (values_[j] >= values_[j + 1])
      throw std::domain_error("BottomRow: entries must be strictly increasing");
}

BottomRow BottomRow::normalized() const {
  std::vector<int> shifted(values_);
  const int offset = values_.front() - 1;
  for (int& v : shifted) v -= offset;
  return BottomRow(std::move(shifted));
}

BottomRow row_without(int n, std::initializer_list<int> omitted) {
  std::vector<int> values;
  for (int v = 1; v <= n; ++v)
    if (std::find(omitted.begin(), omitted.end(), v) == omitted.end())
      values.push_back(v);
  return BottomRow(std::move(values));
}

std::size_t AlphaCache::KeyHash::operator()(
    const std::vector<int>& key) const noexcept {
  std::size_t h = key.size();
  for (int v : key)
    h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::optional<mpz_class> AlphaCache::find(const std::vector<int>& key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

void AlphaCache::insert(const std::vector<int>& key, const mpz_class& value) {
  std::unique_lock lock(mutex_);
  table_.try_emplace(key, value);
}

std::size_t AlphaCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void AlphaCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

void AlphaCache::reset_stats() {
  hits_ = 0;
  misses_ = 0;
}

std::map<std::vector<int>, mpz_class> AlphaCache::snapshot() const {
  std::shared_lock lock(mutex_);
  return {table_.begin(), table_.end()};
}

AlphaCache& default_alpha_cache() {
  static AlphaCache cache;
  return cache;
}

namespace {

// `key` is normalized (first entry 1). Sums alpha over every strictly
// increasing l with key[j] <= l[j] <= key[j+1].
mpz_class alpha_normalized(const std::vector<int>& key, AlphaCache& cache) {
  if (key.size() == 1) return 1;
  if (auto hit = cache.find(key)) return *hit;

  const std::size_t m = key.size() - 1;
  std::vector<int> above(m);
  std::vector<int> shifted(m);
  mpz_class total = 0;
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == m) {
      const int offset = above[0] - 1;
      for (std::size_t t = 0; t < m; ++t) shifted[t] = above[t] - offset;
      total += alpha_normalized(shifted, cache);
      return;
    }
    const int from = (j == 0) ? key[0] : std::max(key[j], above[j - 1] + 1);
    for (int v = from; v <= key[j + 1]; ++v) {
      above[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);

  cache.insert(key, total);
  return total;
}

}  // namespace

mpz_class alpha(const BottomRow& row, AlphaCache& cache) {
  return alpha_normalized(row.normalized().values(), cache);
}

mpz_class alpha_exhaustive(const BottomRow& row) {
  // Top-down: build every triangle whose entries lie in [min, max] of the
  // bottom row and count those that end on exactly this row.
  const auto& target = row.values();
  const int lo = target.front();
  const int hi = target.back();
  const std::size_t depth = target.size();
  mpz_class count = 0;
  auto rec = [&](auto&& self, const std::vector<int>& current) -> void {
    if (current.size() == depth) {
      if (current == target) ++count;
      return;
    }
    for (const auto& next : rows_below(current, lo, hi)) self(self, next);
  };
  for (int apex = lo; apex <= hi; ++apex) rec(rec, std::vector<int>{apex});
  return count;
}

mpz_class count_all_brute(int n, AlphaCache& cache) {
  if (n < 1) throw std::domain_error("count_all_brute: n must be at least 1");
  return alpha(row_without(n, {}), cache);
}

CountTable refined_brute_serial(int n, AlphaCache& cache) {
  if (n < 2) throw std::domain_error("refined_brute: n must be at least 2");
  CountTable table(TableKind::refined, n);
  for (int k = 1; k <= n; ++k) table.set(k, alpha(row_without(n, {k}), cache));
  return table;
}

CountTable refined_brute(int n, AlphaCache& cache) {
  if (n < 2) throw std::domain_error("refined_brute: n must be at least 2");
  std::vector<mpz_class> values(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int k = 1; k <= n; ++k)
    values[static_cast<std::size_t>(k - 1)] = alpha(row_without(n, {k}), cache);
  CountTable table(TableKind::refined, n);
  for (int k = 1; k <= n; ++k) table.set(k, values[static_cast<std::size_t>(k - 1)]);
  return table;
}

CountTable doubly_top_brute_serial(int n, AlphaCache& cache) {
  if (n < 3) throw std::domain_error("doubly_top_brute: n must be at least 3");
  CountTable table(TableKind::doubly_top, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      table.set(i, j, alpha(row_without(n, {i, j}), cache));
  return table;
}

CountTable doubly_top_brute(int n, AlphaCache& cache) {
  if (n < 3) throw std::domain_error("doubly_top_brute: n must be at least 3");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  std::vector<mpz_class> values(pairs.size());
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t p = 0; p < count; ++p) {
    auto [i, j] = pairs[static_cast<std::size_t>(p)];
    values[static_cast<std::size_t>(p)] = alpha(row_without(n, {i, j}), cache);
  }
  CountTable table(TableKind::doubly_top, n);
  for (std::size_t p = 0; p < pairs.size(); ++p)
    table.set(pairs[p].first, pairs[p].second, values[p]);
  return table;
}

namespace {

using Buckets = std::vector<std::uint64_t>;  // n*n, row-major by (i, j)

void bucket_stream(int n, AsmStream& stream, Buckets& buckets) {
  while (auto a = stream.next()) {
    auto [i, j] = first_last_index(*a);
    ++buckets[static_cast<std::size_t>((i - 1) * n + (j - 1))];
  }
}

CountTable to_topbottom_table(int n, const Buckets& buckets) {
  CountTable table(TableKind::doubly_topbottom, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      table.set(i, j, mpz_class(static_cast<unsigned long>(
                          buckets[static_cast<std::size_t>((i - 1) * n + (j - 1))])));
  return table;
}

}  // namespace

CountTable doubly_topbottom_brute_serial(int n) {
  if (n < 1) throw std::domain_error("doubly_topbottom_brute: n must be at least 1");
  Buckets buckets(static_cast<std::size_t>(n * n), 0);
  AsmStream stream(n);
  bucket_stream(n, stream, buckets);
  return to_topbottom_table(n, buckets);
}

CountTable doubly_topbottom_brute(int n) {
  if (n < 1) throw std::domain_error("doubly_topbottom_brute: n must be at least 1");
  std::vector<Buckets> per_apex(static_cast<std::size_t>(n),
                                Buckets(static_cast<std::size_t>(n * n), 0));
#pragma omp parallel for schedule(dynamic)
  for (int top = 1; top <= n; ++top) {
    AsmStream stream(n, top);
    bucket_stream(n, stream, per_apex[static_cast<std::size_t>(top - 1)]);
  }
  Buckets buckets(static_cast<std::size_t>(n * n), 0);
  for (const auto& part : per_apex)
    for (std::size_t s = 0; s < buckets.size(); ++s) buckets[s] += part[s];
  return to_topbottom_table(n, buckets);
}

std::map<std::tuple<int, int, int>, std::uint64_t> top_two_row_buckets(int n) {
  if (n < 2) throw std::domain_error("top_two_row_buckets: n must be at least 2");
  std::map<std::tuple<int, int, int>, std::uint64_t> buckets;
  AsmStream stream(n);
  while (auto a = stream.next()) {
    auto idx = top_two_row_index(*a);
    ++buckets[{idx.i, idx.j, idx.k}];
  }
  return buckets;
}

}  // namespace asmenum
