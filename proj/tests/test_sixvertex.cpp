#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "asmenum/counting.hpp"
#include "asmenum/formulas.hpp"
#include "asmenum/sixvertex.hpp"

using namespace asmenum;

namespace {

using Kind = VertexClass::Kind;
const double kSqrt3 = std::sqrt(3.0);

SpectralParams params(std::vector<double> xs, std::vector<double> ys) {
  SpectralParams p;
  p.xs = std::move(xs);
  p.ys = std::move(ys);
  return p;
}

// Integer polynomial in (t, s), keyed by exponent pair.
using Poly = std::map<std::pair<int, int>, mpz_class>;

void add_term(Poly& p, int ti, int si, const mpz_class& c) {
  auto& slot = p[{ti, si}];
  slot += c;
  if (slot == 0) p.erase({ti, si});
}

}  // namespace

TEST(Phi, Values) {
  EXPECT_NEAR(phi(0.0), 1.0, 1e-15);
  EXPECT_NEAR(phi(std::numbers::pi / 6), 2.0 / kSqrt3, 1e-15);
  EXPECT_NEAR(phi(-std::numbers::pi / 3), 0.0, 1e-15);
  EXPECT_NEAR(phi(std::numbers::pi / 3), 1.0, 1e-15);
}

TEST(Weight, DefaultEtaReducesToPhi) {
  const VertexClass a{Kind::a, 0}, b{Kind::b, 0}, c{Kind::c, 1};
  EXPECT_NEAR(weight(a, 0, 0), 1.0, 1e-15);
  EXPECT_NEAR(weight(b, 0, 0), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(weight(c, 0.3, -0.2), 1.0);
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> d(-1, 1);
  for (int k = 0; k < 100; ++k) {
    const double x = d(rng), y = d(rng);
    EXPECT_NEAR(weight(a, x, y), phi(x - y), 1e-14);
    EXPECT_NEAR(weight(b, x, y), phi(y - x), 1e-14);
  }
  EXPECT_NEAR(weight(a, 0.1, 0.0, std::numbers::pi / 2), std::sin(std::numbers::pi / 4 + 0.1),
              1e-15);
}

TEST(Weight, DegenerateEtaIsDomainError) {
  EXPECT_THROW(weight(VertexClass{Kind::a, 0}, 0, 0, 0.0), std::domain_error);
  EXPECT_THROW(weight(VertexClass{Kind::b, 0}, 0, 0, std::numbers::pi), std::domain_error);
  auto p = zero_params(3, 0.0);
  EXPECT_THROW(p.validate(), std::domain_error);
  EXPECT_THROW(params({0, 0}, {0}).validate(), std::domain_error);
}

TEST(ClassifyVertex, OrderTwo) {
  const auto id = Asm::identity(2);
  EXPECT_EQ(classify_vertex(id, 1, 1), (VertexClass{Kind::c, 1}));
  EXPECT_EQ(classify_vertex(id, 1, 2).kind, Kind::b);
  EXPECT_EQ(classify_vertex(id, 2, 1).kind, Kind::b);
  const auto anti = Asm::anti_identity(2);
  EXPECT_EQ(classify_vertex(anti, 1, 1).kind, Kind::a);
  EXPECT_EQ(classify_vertex(anti, 2, 2).kind, Kind::a);
  const auto m = Asm::from_rows({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}});
  EXPECT_EQ(classify_vertex(m, 2, 2), (VertexClass{Kind::c, -1}));
}

TEST(ClassifyVertex, FirstAndLastRowBookkeeping) {
  // Row 1 with its 1 at column i: a to the left, b to the right.
  // Row n with its 1 at column j: b to the left, a to the right.
  for (int n = 2; n <= 5; ++n) {
    for_each_asm(n, [&](const Asm& m) {
      const auto [i, j] = first_last_index(m);
      for (int col = 1; col <= n; ++col) {
        const auto top = classify_vertex(m, 1, col).kind;
        const auto bottom = classify_vertex(m, n, col).kind;
        ASSERT_EQ(top, col < i ? Kind::a : col == i ? Kind::c : Kind::b);
        ASSERT_EQ(bottom, col < j ? Kind::b : col == j ? Kind::c : Kind::a);
      }
    });
  }
}

TEST(ClassifyVertex, SecondRowThreeCases) {
  // Top-two index (i, j, k). Outside [i, j] row 2 reads a on the left and b
  // on the right; inside it depends on where k sits.
  auto expected = [](int i, int j, int k, int col) -> VertexClass {
    if (col < i) return {Kind::a, 0};
    if (col > j) return {Kind::b, 0};
    if (k == i) {
      if (col == i) return {Kind::b, 0};
      if (col == j) return {Kind::c, 1};
      return {Kind::a, 0};
    }
    if (k == j) {
      if (col == i) return {Kind::c, 1};
      if (col == j) return {Kind::a, 0};
      return {Kind::b, 0};
    }
    if (col == i || col == j) return {Kind::c, 1};
    if (col == k) return {Kind::c, -1};
    return {col < k ? Kind::b : Kind::a, 0};
  };
  for (int n = 3; n <= 5; ++n) {
    for_each_asm(n, [&](const Asm& m) {
      const auto [i, j, k] = top_two_row_index(m);
      for (int col = 1; col <= n; ++col)
        ASSERT_EQ(classify_vertex(m, 2, col), expected(i, j, k, col))
            << "n=" << n << " (" << i << "," << j << "," << k << ") col " << col;
    });
  }
}

TEST(PartitionFunction, OrderTwoClosedForm) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> d(-0.5, 0.5);
  for (int k = 0; k < 50; ++k) {
    const double x1 = d(rng), x2 = d(rng), y1 = d(rng), y2 = d(rng);
    const double closed = phi(x1 - y1) * phi(x2 - y2) + phi(y2 - x1) * phi(y1 - x2);
    EXPECT_NEAR(partition_function(params({x1, x2}, {y1, y2})), closed, 1e-12);
  }
}

TEST(PartitionFunction, ZeroParametersCountAsms) {
  for (int n = 1; n <= 6; ++n) {
    const double z = partition_function(zero_params(n));
    EXPECT_NEAR(z, asm_total(n).get_d(), 1e-9 * asm_total(n).get_d()) << "n=" << n;
  }
}

TEST(PartitionFunction, SerialAndParallelAgree) {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> d(-0.5, 0.5);
  for (int n = 1; n <= 5; ++n) {
    const auto& lattice = ice_lattice(n);
    EXPECT_EQ(lattice.configurations(), asm_total(n).get_ui());
    for (int k = 0; k < 10; ++k) {
      auto p = zero_params(n);
      for (auto& x : p.xs) x = d(rng);
      for (auto& y : p.ys) y = d(rng);
      const double serial = lattice.partition_function_serial(p);
      EXPECT_LE(relative_difference(lattice.partition_function(p), serial), 1e-12);
    }
  }
}

TEST(PartitionFunction, RowSymmetry) {
  for (int n = 2; n <= 5; ++n) EXPECT_TRUE(check_row_symmetry(n, 20, 99 + n).passed());
}

TEST(Expansions, S1EqualsS2AndBothExpansionsMatch) {
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> d(-1, 1);
  for (int n = 3; n <= 5; ++n) {
    const auto b = doubly_topbottom_brute(n);
    const auto a = doubly_top_brute(n);
    for (int k = 0; k < 20; ++k) {
      const double u = d(rng), v = d(rng);
      const double lhs = s1(n, u, v);
      EXPECT_LE(relative_difference(lhs, s2(n, u, v)), 1e-9);
      EXPECT_LE(relative_difference(lhs, s1_expansion(n, u, v, b)), 1e-9);
      const double t = phi(u) / phi(-u), s = phi(-v) / phi(v);
      if (std::abs(t * s - 1) > 1e-3)
        EXPECT_LE(relative_difference(lhs, s2_expansion(n, u, v, a)), 1e-9);
    }
  }
  EXPECT_NEAR(s1(2, 0.2, -0.1), s1_expansion(2, 0.2, -0.1, doubly_topbottom_brute(2)), 1e-12);
}

TEST(Expansions, DegenerateInputsAreDomainErrors) {
  // v = u gives s = 1/t.
  const auto a = doubly_top_brute(4);
  EXPECT_THROW(s2_expansion(4, 0.3, 0.3, a), std::domain_error);
  EXPECT_THROW(s1_expansion(4, 0.1, 0.2, doubly_topbottom_brute(3)), std::domain_error);
}

TEST(Expansions, TopTwoFormIsAnExactPolynomialIdentity) {
  // (ts - 1) sum B_{n,i,j} t^{i-1} s^{j-1} equals the top-two-row sum with
  // integer coefficients, term by term.
  for (int n = 3; n <= 7; ++n) {
    const auto b = doubly_topbottom_brute(n);
    const auto a = doubly_top_brute(n);
    Poly lhs, rhs;
    for (const auto& e : b.entries()) {
      add_term(lhs, e.i, e.j, e.value);
      add_term(lhs, e.i - 1, e.j - 1, -e.value);
    }
    for (const auto& e : a.entries()) {
      const int i = e.i, j = e.j;
      const mpz_class& c = e.value;
      add_term(rhs, i, n - j + 1, c);
      add_term(rhs, i, n - j, -c);
      add_term(rhs, i - 1, n - j + 1, -c);
      add_term(rhs, j, n - i, c);
      add_term(rhs, j - 1, n - i + 1, c);
      add_term(rhs, j - 1, n - i, -c);
    }
    EXPECT_EQ(lhs, rhs) << "n=" << n;
  }
}

TEST(Identity120, VanishesToRounding) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> d(-10, 10);
  for (int k = 0; k < 1000; ++k) EXPECT_LE(std::abs(identity_120_residual(d(rng))), 1e-12);
  EXPECT_DOUBLE_EQ(relative_difference(2.0, 2.0), 0.0);
}
