#pragma once

// Closed-form evaluation of the ASM product formulas and of the
// doubly-refined enumeration numbers, plus exact checkers for the linear
// identities linking them to the brute-force tables.

#include <gmpxx.h>

#include <stdexcept>

#include "asmenum/count_table.hpp"
#include "asmenum/report.hpp"

namespace asmenum {

/// Reduced fraction with positive denominator.
using ExactRational = mpq_class;

/// Raised when an exact quotient that must be an integer is not one.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Returns q as an integer or throws IntegralityError naming `what`.
mpz_class require_integral(const ExactRational& q, const char* what);

/// A_n = prod_{j=0}^{n-1} (3j+1)! / (n+j)!.
mpz_class asm_total(int n);

/// A_{n,k} by the refined product formula; 0 for k outside [1, n].
mpz_class asm_refined(int n, int k);

/// A_{n,1..n} as a table, memoized per n.
const CountTable& refined_formula_table(int n);
/// A_{n,i,j} for all 1 <= i < j <= n via `a_doubly_refined`.
CountTable doubly_top_formula_table(int n);
/// B_{n,i,j} for all 1 <= i, j <= n via `b_doubly_refined`.
CountTable doubly_topbottom_formula_table(int n);

/// Unreduced-to-integer forms of X_n(s,t) and Y_n(i,j), exposed so the
/// integrality of the division by A_{n-1} can be inspected.
ExactRational x_rational(int n, int s, int t);
ExactRational y_rational(int n, int i, int j);

/// X_n(s,t) = (A_{n-1,t}(A_{n,s+1} - A_{n,s}) - A_{n-1,s}(A_{n,t+1} - A_{n,t})) / A_{n-1}.
/// Requires n >= 2. Throws IntegralityError if the quotient is not integral.
mpz_class x_fn(int n, int s, int t);

/// Y_n(i,j) = (A_{n-1,j}(A_{n,i+1} - A_{n,i}) + A_{n-1,i}(A_{n,j+1} - A_{n,j})) / A_{n-1}.
mpz_class y_fn(int n, int i, int j);

/// B_{n,i,j} = A_{n-1,|i-j|} + sum_{k=1}^{min(i,j)-1} Y_n(k, |i-j|+k); 0 outside [1,n]^2.
mpz_class b_doubly_refined(int n, int i, int j);

/// A_{n,i,j} = sum_{p=0}^{n-j} sum_{q=0}^{p} (-1)^q C(p,q) X_n(i+q, j+p).
/// Requires n >= 3; returns 0 unless 1 <= i < j <= n.
mpz_class a_doubly_refined(int n, int i, int j);
/// As above but throws std::out_of_range for indices outside 1 <= i < j <= n.
mpz_class a_doubly_refined_strict(int n, int i, int j);

/// Index window used by the identity checks; wider than [1, n] on both sides
/// so the zero conventions get exercised.
struct IndexWindow {
  int lo;
  int hi;
};
IndexWindow identity_window(int n);

/// Y_n(i,j) = B_{n,i+1,j+1} - B_{n,i,j}
///          = A_{n,i+1,n+1-j} + A_{n,i,n-j} - A_{n,i,n+1-j}
///            - A_{n,n-j,i} - A_{n,n+1-j,i+1} + A_{n,n-j,i+1}
/// for every (i, j) in the window, against the supplied order-n tables.
CheckReport check_ab_identity(int n, const CountTable& doubly_top,
                               const CountTable& doubly_topbottom);

/// X_n(i,j) = A_{n,i+1,j+1} + A_{n,i,j} - A_{n,i,j+1} for 1 <= i < j <= n.
CheckReport check_x_recurrence(int n, const CountTable& doubly_top);

/// Y_n(i,j) = B_{n,i+1,j+1} - B_{n,i,j} over the window.
CheckReport check_stroganov(int n, const CountTable& doubly_topbottom);

/// Every X_n(s,t), 1 <= s < t <= n, and every Y_n(i,j) over the window has
/// denominator 1 before conversion.
CheckReport check_integrality(int n);

}  // namespace asmenum
