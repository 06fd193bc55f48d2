#pragma once

// Brute-force oracles. Nothing here uses a closed-form formula: every count
// comes from summing over monotone triangles (alpha) or from enumerating
// ASMs outright.

#include <gmpxx.h>

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "asmenum/count_table.hpp"

namespace asmenum {

/// Strictly increasing, nonempty row k_1 < ... < k_n.
class BottomRow {
 public:
  /// Throws std::domain_error if empty or not strictly increasing.
  explicit BottomRow(std::vector<int> values);

  const std::vector<int>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  /// Shifted so that the first entry is 1.
  BottomRow normalized() const;

 private:
  std::vector<int> values_;
};

/// (1, ..., n) with the listed values left out.
BottomRow row_without(int n, std::initializer_list<int> omitted);

/// Memo table for alpha keyed by normalized bottom rows. Lookups and inserts
/// may race freely; a lost insert race only repeats a deterministic
/// computation.
class AlphaCache {
 public:
  struct Stats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
  };

  std::optional<mpz_class> find(const std::vector<int>& key) const;
  void insert(const std::vector<int>& key, const mpz_class& value);

  std::size_t size() const;
  void clear();
  Stats stats() const { return {hits_.load(), misses_.load()}; }
  void reset_stats();

  /// Entries ordered by key, for stable persistence.
  std::map<std::vector<int>, mpz_class> snapshot() const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<int>& key) const noexcept;
  };

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::vector<int>, mpz_class, KeyHash> table_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

/// Process-wide cache used when no cache is passed explicitly.
AlphaCache& default_alpha_cache();

/// Number of monotone triangles with the given bottom row, by summing alpha
/// over every interlacing row above (memoized).
mpz_class alpha(const BottomRow& row, AlphaCache& cache = default_alpha_cache());

/// Same count by walking every triangle explicitly, no memo. Tiny inputs only;
/// kept as an independent check on `alpha`.
mpz_class alpha_exhaustive(const BottomRow& row);

/// A_n = alpha(1..n).
mpz_class count_all_brute(int n, AlphaCache& cache = default_alpha_cache());

/// A_{n,k} = alpha(1..n without k). Requires n >= 2.
CountTable refined_brute(int n, AlphaCache& cache = default_alpha_cache());
CountTable refined_brute_serial(int n, AlphaCache& cache);

/// A_{n,i,j} = alpha(1..n without i, j) for i < j. Requires n >= 3.
CountTable doubly_top_brute(int n, AlphaCache& cache = default_alpha_cache());
CountTable doubly_top_brute_serial(int n, AlphaCache& cache);

/// B_{n,i,j}: ASMs of order n bucketed by (first-row 1, last-row 1).
/// The parallel kernel splits the enumeration by triangle apex.
CountTable doubly_topbottom_brute(int n);
CountTable doubly_topbottom_brute_serial(int n);

/// Number of ASMs per top-two-row triple, keyed (i, j, k).
std::map<std::tuple<int, int, int>, std::uint64_t> top_two_row_buckets(int n);

}  // namespace asmenum
