#include "asmenum/asm.hpp"

#include <sstream>
#include <stdexcept>

namespace asmenum {

namespace {

std::string describe(const char* what, int index, const char* rule) {
  std::ostringstream os;
  os << what << ' ' << index << ": " << rule;
  return os.str();
}

}  // namespace

AsmValidation validate_asm(const IntMatrix& m) {
  using Status = AsmValidation::Status;
  const auto n = m.size();
  if (n == 0) return {Status::malformed, "empty matrix"};
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r].size() != n)
      return {Status::malformed,
              describe("row", static_cast<int>(r + 1), "matrix is not square")};
    for (int v : m[r])
      if (v < -1 || v > 1)
        return {Status::malformed,
                describe("row", static_cast<int>(r + 1),
                         "entry outside {-1, 0, 1}")};
  }

  // Partial sums in {0, 1} with total 1 is equivalent to "sums to 1 with
  // alternating nonzero signs".
  for (std::size_t r = 0; r < n; ++r) {
    int partial = 0;
    for (std::size_t c = 0; c < n; ++c) {
      partial += m[r][c];
      if (partial < 0 || partial > 1)
        return {Status::violation,
                describe("row", static_cast<int>(r + 1),
                         "nonzero entries do not alternate starting with +1")};
    }
    if (partial != 1)
      return {Status::violation,
              describe("row", static_cast<int>(r + 1), "sum is not 1")};
  }
  for (std::size_t c = 0; c < n; ++c) {
    int partial = 0;
    for (std::size_t r = 0; r < n; ++r) {
      partial += m[r][c];
      if (partial < 0 || partial > 1)
        return {Status::violation,
                describe("column", static_cast<int>(c + 1),
                         "nonzero entries do not alternate starting with +1")};
    }
    if (partial != 1)
      return {Status::violation,
              describe("column", static_cast<int>(c + 1), "sum is not 1")};
  }
  return {};
}

Asm Asm::from_rows(const IntMatrix& rows) {
  auto check = validate_asm(rows);
  if (!check.ok()) throw std::invalid_argument("not an ASM: " + check.message);
  const int n = static_cast<int>(rows.size());
  std::vector<std::int8_t> entries;
  entries.reserve(static_cast<std::size_t>(n * n));
  for (const auto& row : rows)
    for (int v : row) entries.push_back(static_cast<std::int8_t>(v));
  return Asm(n, std::move(entries));
}

Asm Asm::identity(int n) {
  IntMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return from_rows(m);
}

Asm Asm::anti_identity(int n) {
  IntMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[i][n - 1 - i] = 1;
  return from_rows(m);
}

IntMatrix Asm::rows() const {
  IntMatrix m(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
  for (int r = 1; r <= n_; ++r)
    for (int c = 1; c <= n_; ++c) m[r - 1][c - 1] = at(r, c);
  return m;
}

MonotoneTriangle::MonotoneTriangle(IntMatrix rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("monotone triangle has no rows");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& row = rows_[i];
    if (row.size() != i + 1)
      throw std::invalid_argument(describe("triangle row", static_cast<int>(i + 1),
                                           "wrong length"));
    for (std::size_t j = 0; j + 1 < row.size(); ++j)
      if (row[j] >= row[j + 1])
        throw std::invalid_argument(describe("triangle row", static_cast<int>(i + 1),
                                             "not strictly increasing"));
    if (i == 0) continue;
    const auto& above = rows_[i - 1];
    for (std::size_t j = 0; j < above.size(); ++j)
      if (row[j] > above[j] || above[j] > row[j + 1])
        throw std::invalid_argument(describe("triangle row", static_cast<int>(i + 1),
                                             "does not interlace the row above"));
  }
}

bool MonotoneTriangle::is_complete() const {
  const auto& bottom = rows_.back();
  for (std::size_t j = 0; j < bottom.size(); ++j)
    if (bottom[j] != static_cast<int>(j + 1)) return false;
  return true;
}

MonotoneTriangle asm_to_triangle(const Asm& a) {
  const int n = a.order();
  IntMatrix rows;
  rows.reserve(static_cast<std::size_t>(n));
  std::vector<int> column_sum(static_cast<std::size_t>(n), 0);
  for (int r = 1; r <= n; ++r) {
    std::vector<int> row;
    row.reserve(static_cast<std::size_t>(r));
    for (int c = 1; c <= n; ++c) {
      column_sum[c - 1] += a.at(r, c);
      if (column_sum[c - 1] == 1) row.push_back(c);
    }
    rows.push_back(std::move(row));
  }
  return MonotoneTriangle(std::move(rows));
}

Asm triangle_to_asm(const MonotoneTriangle& t) {
  if (!t.is_complete())
    throw std::domain_error("triangle_to_asm: bottom row is not (1, ..., n)");
  const int n = t.order();
  std::vector<std::int8_t> entries(static_cast<std::size_t>(n * n), 0);
  for (int r = 1; r <= n; ++r) {
    for (int c : t.row(r)) entries[static_cast<std::size_t>((r - 1) * n + c - 1)] += 1;
    if (r > 1)
      for (int c : t.row(r - 1))
        entries[static_cast<std::size_t>((r - 1) * n + c - 1)] -= 1;
  }
  return Asm(n, std::move(entries));
}

TopTwoRowIndex top_two_row_index(const Asm& a) {
  if (a.order() < 2)
    throw std::domain_error("top_two_row_index: order must be at least 2");
  // Partial column sums of the first two rows, read directly.
  int k = 0;
  std::vector<int> second;
  for (int c = 1; c <= a.order(); ++c) {
    if (a.at(1, c) == 1) k = c;
    if (a.at(1, c) + a.at(2, c) == 1) second.push_back(c);
  }
  return {second[0], second[1], k};
}

std::pair<int, int> first_last_index(const Asm& a) {
  const int n = a.order();
  int first = 0;
  int last = 0;
  for (int c = 1; c <= n; ++c) {
    if (a.at(1, c) == 1) first = c;
    if (a.at(n, c) == 1) last = c;
  }
  return {first, last};
}

std::vector<std::vector<int>> rows_below(const std::vector<int>& above, int lo,
                                         int hi) {
  const std::size_t m = above.size() + 1;
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m);
  // Position j may range over [above[j-1], above[j]], clipped to [lo, hi],
  // and must exceed cur[j-1].
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == m) {
      out.push_back(cur);
      return;
    }
    int from = (j == 0) ? lo : std::max(above[j - 1], cur[j - 1] + 1);
    int to = (j == m - 1) ? hi : above[j];
    for (int v = from; v <= to; ++v) {
      cur[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

AsmStream::AsmStream(int n, std::optional<int> top) : n_(n) {
  if (n < 1) throw std::domain_error("AsmStream: order must be at least 1");
  levels_.resize(static_cast<std::size_t>(n));
  if (top) {
    if (*top >= 1 && *top <= n) levels_[0].candidates.push_back({*top});
  } else {
    for (int k = 1; k <= n; ++k) levels_[0].candidates.push_back({k});
  }
}

bool AsmStream::advance() {
  if (done_) return false;
  std::size_t refill_from;
  if (!started_) {
    started_ = true;
    if (levels_[0].candidates.empty()) {
      done_ = true;
      return false;
    }
    refill_from = 1;
  } else {
    std::size_t d = levels_.size();
    while (d > 0) {
      auto& level = levels_[d - 1];
      if (++level.pos < level.candidates.size()) break;
      --d;
    }
    if (d == 0) {
      done_ = true;
      return false;
    }
    refill_from = d;
  }
  // Any partial triangle with values in [1, n] extends downward, so every
  // refilled level is nonempty.
  for (std::size_t e = refill_from; e < levels_.size(); ++e) {
    const auto& parent = levels_[e - 1];
    levels_[e].candidates = rows_below(parent.candidates[parent.pos], 1, n_);
    levels_[e].pos = 0;
  }
  return true;
}

std::optional<MonotoneTriangle> AsmStream::next_triangle() {
  if (!advance()) return std::nullopt;
  IntMatrix rows;
  rows.reserve(levels_.size());
  for (const auto& level : levels_) rows.push_back(level.candidates[level.pos]);
  return MonotoneTriangle(std::move(rows));
}

std::optional<Asm> AsmStream::next() {
  auto t = next_triangle();
  if (!t) return std::nullopt;
  return triangle_to_asm(*t);
}

void for_each_asm(int n, const std::function<void(const Asm&)>& visit) {
  AsmStream stream(n);
  while (auto a = stream.next()) visit(*a);
}

std::vector<Asm> enumerate_asms(int n) {
  std::vector<Asm> out;
  for_each_asm(n, [&](const Asm& a) { out.push_back(a); });
  return out;
}

}  // namespace asmenum
