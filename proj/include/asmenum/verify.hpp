#pragma once

// Runs the formula-vs-oracle and six-vertex check suites over a range of
// orders and collects one CheckReport per (suite, n).

#include <cstdint>
#include <string>
#include <vector>

#include "asmenum/counting.hpp"
#include "asmenum/report.hpp"

namespace asmenum {

inline constexpr int kExactDeskLimit = 7;
inline constexpr int kIceDeskLimit = 5;
inline constexpr std::uint64_t kDefaultSeed = 20100401;

const std::vector<std::string>& exact_suites();
const std::vector<std::string>& ice_suites();

/// Expands a comma-separated list of suite names and the groups "exact",
/// "ice" and "all". Throws std::invalid_argument for unknown names.
std::vector<std::string> resolve_suites(const std::string& spec);

struct VerifyOptions {
  int n_max = 5;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> suites = resolve_suites("all");
  double tol = 1e-9;
  double trig_tol = 1e-12;
  int symmetry_trials = 100;
  int sample_trials = 50;
  int identity_points = 1000;
  bool unsafe_large = false;
  /// Adds 1 to one entry of every brute-force table before comparing, so
  /// the failure path can be exercised end to end.
  bool inject_fault = false;
  AlphaCache* cache = nullptr;  // default_alpha_cache() when null
};

struct VerifyReport {
  std::uint64_t seed = 0;
  int n_max = 0;
  std::vector<CheckReport> results;

  bool passed() const;
};

/// Throws std::invalid_argument if n_max exceeds the exact-suite desk limit
/// without `unsafe_large`, or if a tolerance is not positive.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace asmenum
