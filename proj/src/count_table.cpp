#include "asmenum/count_table.hpp"

#include <stdexcept>
#include <string>

namespace asmenum {

std::string_view to_string(TableKind kind) {
  switch (kind) {
    case TableKind::total: return "total";
    case TableKind::refined: return "refined";
    case TableKind::doubly_top: return "doubly_top";
    case TableKind::doubly_topbottom: return "doubly_topbottom";
  }
  return "unknown";
}

int index_arity(TableKind kind) {
  switch (kind) {
    case TableKind::total: return 0;
    case TableKind::refined: return 1;
    default: return 2;
  }
}

CountTable::CountTable(TableKind kind, int n) : kind_(kind), n_(n) {
  if (n < 1) throw std::domain_error("CountTable: order must be at least 1");
  std::size_t size = 1;
  if (index_arity(kind) == 1) size = static_cast<std::size_t>(n);
  if (index_arity(kind) == 2) size = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  values_.assign(size, mpz_class(0));
}

bool CountTable::in_range(int i, int j) const {
  switch (kind_) {
    case TableKind::total: return i == 0 && j == 0;
    case TableKind::refined: return j == 0 && i >= 1 && i <= n_;
    case TableKind::doubly_top: return i >= 1 && i < j && j <= n_;
    case TableKind::doubly_topbottom: return i >= 1 && i <= n_ && j >= 1 && j <= n_;
  }
  return false;
}

std::size_t CountTable::slot(int i, int j) const {
  switch (index_arity(kind_)) {
    case 0: return 0;
    case 1: return static_cast<std::size_t>(i - 1);
    default: return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
  }
}

mpz_class CountTable::get(int i, int j) const {
  if (!in_range(i, j)) return 0;
  return values_[slot(i, j)];
}

const mpz_class& CountTable::strict(int i, int j) const {
  if (!in_range(i, j))
    throw std::out_of_range("CountTable(" + std::string(to_string(kind_)) +
                            "): index (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") out of range");
  return values_[slot(i, j)];
}

void CountTable::set(int i, int j, mpz_class value) {
  if (!in_range(i, j))
    throw std::out_of_range("CountTable::set: index out of range");
  if (value < 0) throw std::domain_error("CountTable::set: negative count");
  values_[slot(i, j)] = std::move(value);
}

std::vector<CountTable::Entry> CountTable::entries() const {
  std::vector<Entry> out;
  switch (index_arity(kind_)) {
    case 0:
      out.push_back({0, 0, values_[0]});
      break;
    case 1:
      for (int i = 1; i <= n_; ++i) out.push_back({i, 0, values_[slot(i, 0)]});
      break;
    default:
      for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
          if (in_range(i, j)) out.push_back({i, j, values_[slot(i, j)]});
  }
  return out;
}

mpz_class CountTable::sum() const {
  mpz_class total = 0;
  for (const auto& e : entries()) total += e.value;
  return total;
}

}  // namespace asmenum
