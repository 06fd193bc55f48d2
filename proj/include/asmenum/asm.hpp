#pragma once

// Alternating sign matrices, monotone triangles and the bijection between them.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace asmenum {

using IntMatrix = std::vector<std::vector<int>>;

/// Outcome of checking a raw integer matrix against the ASM rules.
struct AsmValidation {
  enum class Status { ok, malformed, violation };

  Status status = Status::ok;
  std::string message;

  bool ok() const { return status == Status::ok; }
};

/// Checks shape and alphabet first (malformed), then the row/column sum and
/// sign-alternation rules (violation). The message names the first failure.
AsmValidation validate_asm(const IntMatrix& m);

class MonotoneTriangle;

/// An alternating sign matrix. Always valid once constructed.
class Asm {
 public:
  /// Throws std::invalid_argument if `rows` is not a valid ASM.
  static Asm from_rows(const IntMatrix& rows);
  static Asm identity(int n);
  static Asm anti_identity(int n);

  int order() const { return n_; }
  int at(int row, int col) const {  // 1-based
    return entries_[static_cast<std::size_t>((row - 1) * n_ + (col - 1))];
  }
  IntMatrix rows() const;

  friend bool operator==(const Asm&, const Asm&) = default;
  friend auto operator<=>(const Asm&, const Asm&) = default;

 private:
  Asm(int n, std::vector<std::int8_t> entries)
      : n_(n), entries_(std::move(entries)) {}

  int n_ = 0;
  std::vector<std::int8_t> entries_;

  friend Asm triangle_to_asm(const MonotoneTriangle& t);
};

/// Triangular array t_{i,j}, 1 <= j <= i <= n, strictly increasing along rows
/// and interlacing between consecutive rows. Always valid once constructed.
class MonotoneTriangle {
 public:
  /// Throws std::invalid_argument if the rows violate the shape, strictness
  /// or interlacing constraints.
  explicit MonotoneTriangle(IntMatrix rows);

  int order() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& row(int i) const {  // 1-based
    return rows_[static_cast<std::size_t>(i - 1)];
  }
  const IntMatrix& rows() const { return rows_; }
  /// Bottom row is exactly (1, 2, ..., n).
  bool is_complete() const;

  friend bool operator==(const MonotoneTriangle&,
                         const MonotoneTriangle&) = default;

 private:
  IntMatrix rows_;
};

/// (i, j) are the two entries of triangle row 2 and k the entry of row 1.
struct TopTwoRowIndex {
  int i = 0;
  int j = 0;
  int k = 0;

  friend bool operator==(const TopTwoRowIndex&, const TopTwoRowIndex&) = default;
};

/// Row i of the result lists the columns whose partial column sum over the
/// first i rows equals 1.
MonotoneTriangle asm_to_triangle(const Asm& a);

/// Throws std::domain_error if the triangle is not complete.
Asm triangle_to_asm(const MonotoneTriangle& t);

/// Throws std::domain_error for order 1.
TopTwoRowIndex top_two_row_index(const Asm& a);

/// Columns of the 1 in the first row and of the 1 in the last row.
std::pair<int, int> first_last_index(const Asm& a);

/// Lazily walks all complete monotone triangles of order n, lexicographically
/// by rows read top to bottom, yielding the corresponding ASMs. Each ASM of
/// order n appears exactly once.
///
/// `top` restricts the walk to triangles whose apex equals that value; the
/// concatenation of the restricted streams for top = 1..n, in order, is the
/// unrestricted stream.
class AsmStream {
 public:
  explicit AsmStream(int n, std::optional<int> top = std::nullopt);

  std::optional<MonotoneTriangle> next_triangle();
  std::optional<Asm> next();

 private:
  struct Level {
    std::vector<std::vector<int>> candidates;
    std::size_t pos = 0;
  };

  bool advance();

  int n_;
  std::vector<Level> levels_;
  bool started_ = false;
  bool done_ = false;
};

/// Calls `visit` for each ASM of order n in stream order.
void for_each_asm(int n, const std::function<void(const Asm&)>& visit);

/// Collects the whole stream; intended for n <= 7.
std::vector<Asm> enumerate_asms(int n);

/// All strictly increasing rows of length |above|+1 with values in [lo, hi]
/// that interlace below `above`, in lexicographic order.
std::vector<std::vector<int>> rows_below(const std::vector<int>& above, int lo,
                                         int hi);

}  // namespace asmenum
