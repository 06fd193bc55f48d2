#pragma once

// Square ice with domain wall boundary conditions, evaluated as a weighted
// sum over ASMs.

#include <cstdint>
#include <numbers>
#include <vector>

#include "asmenum/asm.hpp"
#include "asmenum/count_table.hpp"
#include "asmenum/report.hpp"

namespace asmenum {

inline constexpr double kDefaultEta = 2.0 * std::numbers::pi / 3.0;
/// |sin eta| below this counts as sin eta = 0.
inline constexpr double kSinEtaFloor = 1e-12;

struct SpectralParams {
  double eta = kDefaultEta;
  std::vector<double> xs;  // row parameters
  std::vector<double> ys;  // column parameters

  int order() const { return static_cast<int>(xs.size()); }
  /// Throws std::domain_error if |xs| != |ys|, the order is 0, or sin(eta) = 0.
  void validate() const;
};

/// All-zero spectral parameters of order n.
SpectralParams zero_params(int n, double eta = kDefaultEta);

struct VertexClass {
  enum class Kind : std::uint8_t { a, b, c };
  Kind kind = Kind::a;
  int sign = 0;  // ASM entry for class c, 0 otherwise

  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

/// phi(x) = (2/sqrt 3) sin(pi/3 + x).
double phi(double x);

/// a = sin(eta/2 + x - y)/sin eta, b = sin(eta/2 - x + y)/sin eta, c = 1.
/// Throws std::domain_error when sin(eta) = 0.
double weight(VertexClass cls, double x, double y, double eta = kDefaultEta);

/// Entry +-1 is class c. A zero entry is class a when its inclusive partial
/// row sum equals its inclusive partial column sum, class b otherwise.
VertexClass classify_vertex(const Asm& a, int row, int col);

/// Vertex classes of every ASM of order n, precomputed so the partition
/// function can be evaluated repeatedly.
class IceLattice {
 public:
  explicit IceLattice(int n);

  int order() const { return n_; }
  std::size_t configurations() const { return classes_.size() / cells(); }

  /// Reference kernel: configurations summed in stream order; bit-for-bit
  /// reproducible.
  double partition_function_serial(const SpectralParams& params) const;
  /// OpenMP reduction over configurations; agrees with the serial kernel to
  /// rounding.
  double partition_function(const SpectralParams& params) const;

 private:
  std::size_t cells() const { return static_cast<std::size_t>(n_ * n_); }
  double configuration_weight(std::size_t config, const std::vector<double>& a,
                              const std::vector<double>& b) const;
  void weight_tables(const SpectralParams& params, std::vector<double>& a,
                     std::vector<double>& b) const;

  int n_;
  std::vector<VertexClass::Kind> classes_;  // configurations x n x n
};

/// Shared lattice per order, built on first use.
const IceLattice& ice_lattice(int n);

/// Z_n(x_1..x_n; y_1..y_n).
double partition_function(const SpectralParams& params);

/// S1 = Z_n(u, 0, ..., 0, v; 0, ..., 0) and S2 = Z_n(u, v, 0, ..., 0; 0, ..., 0).
double s1(int n, double u, double v);
double s2(int n, double u, double v);

/// (phi(v)phi(-u))^{n-1} sum_{i,j} B_{n,i,j} t^{i-1} s^{j-1},
/// t = phi(u)/phi(-u), s = phi(-v)/phi(v).
double s1_expansion(int n, double u, double v, const CountTable& topbottom);

/// S2 rebuilt from the top-two-row numbers:
/// (phi(v)phi(-u))^{n-1}/(ts - 1) * sum_{i<j} A_{n,i,j} (t^i s^{n-j+1}
///   - t^i s^{n-j} - t^{i-1} s^{n-j+1} + t^j s^{n-i} + t^{j-1} s^{n-i+1}
///   - t^{j-1} s^{n-i}).
/// Throws std::domain_error when ts is 1 to within 1e-12.
double s2_expansion(int n, double u, double v, const CountTable& top_two);

/// phi(x)^2 + phi(-x)^2 - phi(x)phi(-x) - 1, which vanishes identically.
double identity_120_residual(double x);

double relative_difference(double lhs, double rhs);

/// Draws `trials` random parameter sets, applies a random transposition to
/// the row parameters and separately to the column parameters, and checks Z
/// is unchanged to relative tolerance `tol`.
CheckReport check_row_symmetry(int n, int trials, std::uint64_t seed,
                               double tol = 1e-9);

}  // namespace asmenum
