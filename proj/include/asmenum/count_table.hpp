#pragma once

#include <gmpxx.h>

#include <string_view>
#include <vector>

namespace asmenum {

enum class TableKind { total, refined, doubly_top, doubly_topbottom };

std::string_view to_string(TableKind kind);
/// Number of indices an entry of this kind carries (0, 1 or 2).
int index_arity(TableKind kind);

/// Exact nonnegative counts indexed by kind:
///   total            no index
///   refined          1 <= i <= n
///   doubly_top       1 <= i < j <= n
///   doubly_topbottom 1 <= i, j <= n
/// `get` returns 0 outside the index range; `strict` throws std::out_of_range.
class CountTable {
 public:
  struct Entry {
    int i = 0;
    int j = 0;
    mpz_class value;
  };

  CountTable(TableKind kind, int n);

  TableKind kind() const { return kind_; }
  int order() const { return n_; }

  bool in_range(int i = 0, int j = 0) const;
  mpz_class get(int i = 0, int j = 0) const;
  const mpz_class& strict(int i = 0, int j = 0) const;
  void set(int i, int j, mpz_class value);
  void set(int i, mpz_class value) { set(i, 0, std::move(value)); }

  /// In-range entries, ordered by i then j.
  std::vector<Entry> entries() const;
  mpz_class sum() const;

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  std::size_t slot(int i, int j) const;

  TableKind kind_;
  int n_;
  std::vector<mpz_class> values_;
};

}  // namespace asmenum
