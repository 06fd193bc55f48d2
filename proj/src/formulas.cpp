#include "asmenum/formulas.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <string>

namespace asmenum {

namespace {

mpz_class factorial(int m) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(m));
  return out;
}

mpz_class binomial(int top, int bottom) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top),
               static_cast<unsigned long>(bottom));
  return out;
}

// prod_{j=0}^{upper} (3j+1)! / (n+j)!
ExactRational factorial_ratio_product(int n, int upper) {
  ExactRational product = 1;
  for (int j = 0; j <= upper; ++j)
    product *= ExactRational(factorial(3 * j + 1), factorial(n + j));
  product.canonicalize();
  return product;
}

std::mutex memo_mutex;

const mpz_class& total_memo(int n) {
  static std::map<int, mpz_class> memo;
  std::lock_guard lock(memo_mutex);
  auto it = memo.find(n);
  if (it == memo.end()) it = memo.emplace(n, asm_total(n)).first;
  return it->second;
}

mpz_class refined(int n, int k) { return refined_formula_table(n).get(k); }

std::string at(int n, int i, int j) {
  std::ostringstream os;
  os << "n=" << n << " (i,j)=(" << i << ',' << j << ')';
  return os.str();
}

void require_order(const CountTable& table, int n, TableKind kind) {
  if (table.order() != n || table.kind() != kind)
    throw std::domain_error("expected an order-" + std::to_string(n) + " " +
                            std::string(to_string(kind)) + " table");
}

}  // namespace

mpz_class require_integral(const ExactRational& value, const char* what) {
  ExactRational q = value;
  q.canonicalize();
  if (q.get_den() != 1) {
    std::ostringstream os;
    os << what << " is not integral: " << q.get_str();
    throw IntegralityError(os.str());
  }
  return q.get_num();
}

mpz_class asm_total(int n) {
  if (n < 1) throw std::domain_error("asm_total: n must be at least 1");
  return require_integral(factorial_ratio_product(n, n - 1), "A_n product");
}

mpz_class asm_refined(int n, int k) {
  if (n < 1) throw std::domain_error("asm_refined: n must be at least 1");
  if (k < 1 || k > n) return 0;
  ExactRational value(binomial(n + k - 2, k - 1));
  value *= ExactRational(factorial(2 * n - k - 1), factorial(n - k));
  value.canonicalize();
  value *= factorial_ratio_product(n, n - 2);
  return require_integral(value, "A_{n,k} product");
}

const CountTable& refined_formula_table(int n) {
  static std::map<int, CountTable> memo;
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  CountTable table(TableKind::refined, n);
  for (int k = 1; k <= n; ++k) table.set(k, asm_refined(n, k));
  std::lock_guard lock(memo_mutex);
  return memo.try_emplace(n, std::move(table)).first->second;
}

ExactRational x_rational(int n, int s, int t) {
  if (n < 2) throw std::domain_error("X_n(s,t) requires n >= 2");
  mpz_class numer = refined(n - 1, t) * (refined(n, s + 1) - refined(n, s)) -
                    refined(n - 1, s) * (refined(n, t + 1) - refined(n, t));
  ExactRational q(numer, total_memo(n - 1));
  q.canonicalize();
  return q;
}

ExactRational y_rational(int n, int i, int j) {
  if (n < 2) throw std::domain_error("Y_n(i,j) requires n >= 2");
  mpz_class numer = refined(n - 1, j) * (refined(n, i + 1) - refined(n, i)) +
                    refined(n - 1, i) * (refined(n, j + 1) - refined(n, j));
  ExactRational q(numer, total_memo(n - 1));
  q.canonicalize();
  return q;
}

mpz_class x_fn(int n, int s, int t) {
  return require_integral(x_rational(n, s, t), "X_n(s,t)");
}

mpz_class y_fn(int n, int i, int j) {
  return require_integral(y_rational(n, i, j), "Y_n(i,j)");
}

mpz_class b_doubly_refined(int n, int i, int j) {
  if (n < 2) throw std::domain_error("b_doubly_refined: n must be at least 2");
  if (i < 1 || i > n || j < 1 || j > n) return 0;
  const int gap = std::abs(i - j);
  mpz_class value = refined(n - 1, gap);
  for (int k = 1; k <= std::min(i, j) - 1; ++k) value += y_fn(n, k, gap + k);
  return value;
}

mpz_class a_doubly_refined(int n, int i, int j) {
  if (n < 3) throw std::domain_error("a_doubly_refined: n must be at least 3");
  if (!(1 <= i && i < j && j <= n)) return 0;
  mpz_class value = 0;
  for (int p = 0; p <= n - j; ++p) {
    for (int q = 0; q <= p; ++q) {
      mpz_class term = binomial(p, q) * x_fn(n, i + q, j + p);
      if (q % 2 == 0)
        value += term;
      else
        value -= term;
    }
  }
  return value;
}

mpz_class a_doubly_refined_strict(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n))
    throw std::out_of_range("a_doubly_refined: need 1 <= i < j <= n");
  return a_doubly_refined(n, i, j);
}

CountTable doubly_top_formula_table(int n) {
  CountTable table(TableKind::doubly_top, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) table.set(i, j, a_doubly_refined(n, i, j));
  return table;
}

CountTable doubly_topbottom_formula_table(int n) {
  CountTable table(TableKind::doubly_topbottom, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) table.set(i, j, b_doubly_refined(n, i, j));
  return table;
}

IndexWindow identity_window(int n) { return {-1, n + 2}; }

CheckReport check_ab_identity(int n, const CountTable& doubly_top,
                               const CountTable& doubly_topbottom) {
  CheckReport report{"ab_identity", n, false, {}, {}};
  require_order(doubly_top, n, TableKind::doubly_top);
  require_order(doubly_topbottom, n, TableKind::doubly_topbottom);
  const auto& a = doubly_top;
  const auto& b = doubly_topbottom;
  const auto [lo, hi] = identity_window(n);
  for (int i = lo; i <= hi; ++i) {
    for (int j = lo; j <= hi; ++j) {
      mpz_class y;
      try {
        y = y_fn(n, i, j);
      } catch (const IntegralityError& e) {
        report.fail(at(n, i, j) + ": " + e.what());
        continue;
      }
      const mpz_class b_diff = b.get(i + 1, j + 1) - b.get(i, j);
      const mpz_class a_side = a.get(i + 1, n + 1 - j) + a.get(i, n - j) -
                               a.get(i, n + 1 - j) - a.get(n - j, i) -
                               a.get(n + 1 - j, i + 1) + a.get(n - j, i + 1);
      if (y != b_diff || y != a_side)
        report.fail(at(n, i, j) + ": Y=" + y.get_str() + " B-diff=" +
                    b_diff.get_str() + " A-side=" + a_side.get_str());
    }
  }
  return report;
}

CheckReport check_x_recurrence(int n, const CountTable& doubly_top) {
  CheckReport report{"x_recurrence", n, false, {}, {}};
  require_order(doubly_top, n, TableKind::doubly_top);
  const auto& a = doubly_top;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      mpz_class x;
      try {
        x = x_fn(n, i, j);
      } catch (const IntegralityError& e) {
        report.fail(at(n, i, j) + ": " + e.what());
        continue;
      }
      const mpz_class rhs = a.get(i + 1, j + 1) + a.get(i, j) - a.get(i, j + 1);
      if (x != rhs)
        report.fail(at(n, i, j) + ": X=" + x.get_str() + " rhs=" + rhs.get_str());
    }
  }
  return report;
}

CheckReport check_stroganov(int n, const CountTable& doubly_topbottom) {
  CheckReport report{"stroganov", n, false, {}, {}};
  require_order(doubly_topbottom, n, TableKind::doubly_topbottom);
  const auto [lo, hi] = identity_window(n);
  for (int i = lo; i <= hi; ++i) {
    for (int j = lo; j <= hi; ++j) {
      mpz_class y;
      try {
        y = y_fn(n, i, j);
      } catch (const IntegralityError& e) {
        report.fail(at(n, i, j) + ": " + e.what());
        continue;
      }
      const mpz_class diff =
          doubly_topbottom.get(i + 1, j + 1) - doubly_topbottom.get(i, j);
      if (y != diff)
        report.fail(at(n, i, j) + ": Y=" + y.get_str() + " B-diff=" + diff.get_str());
    }
  }
  return report;
}

CheckReport check_integrality(int n) {
  CheckReport report{"integrality", n, false, {}, {}};
  for (int s = 1; s <= n; ++s)
    for (int t = s + 1; t <= n; ++t)
      if (auto q = x_rational(n, s, t); q.get_den() != 1)
        report.fail(at(n, s, t) + ": X=" + q.get_str());
  const auto [lo, hi] = identity_window(n);
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j)
      if (auto q = y_rational(n, i, j); q.get_den() != 1)
        report.fail(at(n, i, j) + ": Y=" + q.get_str());
  return report;
}

}  // namespace asmenum
