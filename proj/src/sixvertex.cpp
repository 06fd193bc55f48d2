#include "asmenum/sixvertex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace asmenum {

void SpectralParams::validate() const {
  if (xs.empty()) throw std::domain_error("SpectralParams: order must be at least 1");
  if (xs.size() != ys.size())
    throw std::domain_error("SpectralParams: need as many column as row parameters");
  if (std::abs(std::sin(eta)) < kSinEtaFloor) throw std::domain_error("SpectralParams: sin(eta) = 0");
}

SpectralParams zero_params(int n, double eta) {
  return {eta, std::vector<double>(static_cast<std::size_t>(n), 0.0),
          std::vector<double>(static_cast<std::size_t>(n), 0.0)};
}

double phi(double x) {
  return 2.0 / std::sqrt(3.0) * std::sin(std::numbers::pi / 3.0 + x);
}

double weight(VertexClass cls, double x, double y, double eta) {
  const double denom = std::sin(eta);
  if (std::abs(denom) < kSinEtaFloor) throw std::domain_error("weight: sin(eta) = 0");
  switch (cls.kind) {
    case VertexClass::Kind::a: return std::sin(eta / 2 + x - y) / denom;
    case VertexClass::Kind::b: return std::sin(eta / 2 - x + y) / denom;
    case VertexClass::Kind::c: return 1.0;
  }
  return 0.0;
}

VertexClass classify_vertex(const Asm& a, int row, int col) {
  const int entry = a.at(row, col);
  if (entry != 0) return {VertexClass::Kind::c, entry};
  int row_sum = 0;
  for (int c = 1; c <= col; ++c) row_sum += a.at(row, c);
  int col_sum = 0;
  for (int r = 1; r <= row; ++r) col_sum += a.at(r, col);
  return {row_sum == col_sum ? VertexClass::Kind::a : VertexClass::Kind::b, 0};
}

IceLattice::IceLattice(int n) : n_(n) {
  if (n < 1) throw std::domain_error("IceLattice: order must be at least 1");
  for_each_asm(n, [&](const Asm& a) {
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) classes_.push_back(classify_vertex(a, r, c).kind);
  });
}

void IceLattice::weight_tables(const SpectralParams& params, std::vector<double>& a,
                               std::vector<double>& b) const {
  params.validate();
  if (params.order() != n_)
    throw std::domain_error("IceLattice: parameter count does not match order");
  a.resize(cells());
  b.resize(cells());
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      const auto x = params.xs[static_cast<std::size_t>(r)];
      const auto y = params.ys[static_cast<std::size_t>(c)];
      a[static_cast<std::size_t>(r * n_ + c)] =
          weight({VertexClass::Kind::a, 0}, x, y, params.eta);
      b[static_cast<std::size_t>(r * n_ + c)] =
          weight({VertexClass::Kind::b, 0}, x, y, params.eta);
    }
  }
}

double IceLattice::configuration_weight(std::size_t config,
                                        const std::vector<double>& a,
                                        const std::vector<double>& b) const {
  const std::size_t base = config * cells();
  double w = 1.0;
  for (std::size_t v = 0; v < cells(); ++v) {
    switch (classes_[base + v]) {
      case VertexClass::Kind::a: w *= a[v]; break;
      case VertexClass::Kind::b: w *= b[v]; break;
      case VertexClass::Kind::c: break;
    }
  }
  return w;
}

double IceLattice::partition_function_serial(const SpectralParams& params) const {
  std::vector<double> a, b;
  weight_tables(params, a, b);
  double sum = 0.0;
  for (std::size_t k = 0; k < configurations(); ++k)
    sum += configuration_weight(k, a, b);
  return sum;
}

double IceLattice::partition_function(const SpectralParams& params) const {
  std::vector<double> a, b;
  weight_tables(params, a, b);
  const auto count = static_cast<std::ptrdiff_t>(configurations());
  double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (std::ptrdiff_t k = 0; k < count; ++k)
    sum += configuration_weight(static_cast<std::size_t>(k), a, b);
  return sum;
}

const IceLattice& ice_lattice(int n) {
  static std::mutex mutex;
  static std::map<int, IceLattice> lattices;
  std::lock_guard lock(mutex);
  auto it = lattices.find(n);
  if (it == lattices.end()) it = lattices.emplace(n, IceLattice(n)).first;
  return it->second;
}

double partition_function(const SpectralParams& params) {
  params.validate();
  return ice_lattice(params.order()).partition_function(params);
}

namespace {

void require_two(int n) {
  if (n < 2) throw std::domain_error("S1/S2 need n >= 2");
}

void require_table(const CountTable& table, int n, TableKind kind) {
  if (table.order() != n || table.kind() != kind)
    throw std::domain_error("expansion: table order or kind does not match n");
}

}  // namespace

double s1(int n, double u, double v) {
  require_two(n);
  auto params = zero_params(n);
  params.xs.front() = u;
  params.xs.back() = v;
  return partition_function(params);
}

double s2(int n, double u, double v) {
  require_two(n);
  auto params = zero_params(n);
  params.xs[0] = u;
  params.xs[1] = v;
  return partition_function(params);
}

double s1_expansion(int n, double u, double v, const CountTable& topbottom) {
  require_two(n);
  require_table(topbottom, n, TableKind::doubly_topbottom);
  const double t = phi(u) / phi(-u);
  const double s = phi(-v) / phi(v);
  double sum = 0.0;
  for (const auto& e : topbottom.entries())
    sum += e.value.get_d() * std::pow(t, e.i - 1) * std::pow(s, e.j - 1);
  return std::pow(phi(v) * phi(-u), n - 1) * sum;
}

double s2_expansion(int n, double u, double v, const CountTable& top_two) {
  require_two(n);
  require_table(top_two, n, TableKind::doubly_top);
  const double t = phi(u) / phi(-u);
  const double s = phi(-v) / phi(v);
  if (std::abs(t * s - 1.0) <= 1e-12)
    throw std::domain_error(
        "s2_expansion: ts = 1 is a removable singularity; perturb u or v");
  auto pw = [](double base, int e) { return std::pow(base, e); };
  double sum = 0.0;
  for (const auto& e : top_two.entries()) {
    const int i = e.i;
    const int j = e.j;
    const double bracket = pw(t, i) * pw(s, n - j + 1) - pw(t, i) * pw(s, n - j) -
                           pw(t, i - 1) * pw(s, n - j + 1) + pw(t, j) * pw(s, n - i) +
                           pw(t, j - 1) * pw(s, n - i + 1) - pw(t, j - 1) * pw(s, n - i);
    sum += e.value.get_d() * bracket;
  }
  return std::pow(phi(v) * phi(-u), n - 1) / (t * s - 1.0) * sum;
}

double identity_120_residual(double x) {
  const double p = phi(x);
  const double m = phi(-x);
  return p * p + m * m - p * m - 1.0;
}

double relative_difference(double lhs, double rhs) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  if (scale == 0.0) return 0.0;
  return std::abs(lhs - rhs) / scale;
}

CheckReport check_row_symmetry(int n, int trials, std::uint64_t seed, double tol) {
  CheckReport report{"row_symmetry", n, false, {}, {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(-0.5, 0.5);
  std::uniform_int_distribution<int> index(0, n - 1);
  const auto& lattice = ice_lattice(n);
  auto transpose = [&](std::vector<double>& values) {
    if (n < 2) return;
    const int p = index(rng);
    int q = index(rng);
    while (q == p) q = index(rng);
    std::swap(values[static_cast<std::size_t>(p)], values[static_cast<std::size_t>(q)]);
  };
  for (int trial = 0; trial < trials; ++trial) {
    auto params = zero_params(n);
    for (auto& x : params.xs) x = draw(rng);
    for (auto& y : params.ys) y = draw(rng);
    const double base = lattice.partition_function_serial(params);

    auto rows_swapped = params;
    transpose(rows_swapped.xs);
    auto cols_swapped = params;
    transpose(cols_swapped.ys);
    const double by_rows = lattice.partition_function_serial(rows_swapped);
    const double by_cols = lattice.partition_function_serial(cols_swapped);
    for (auto [label, value] : {std::pair{"rows", by_rows}, std::pair{"columns", by_cols}}) {
      if (relative_difference(base, value) > tol) {
        std::ostringstream os;
        os.precision(17);
        os << "trial " << trial << " (" << label << "): Z=" << base
           << " permuted Z=" << value;
        report.fail(os.str());
      }
    }
  }
  return report;
}

}  // namespace asmenum
