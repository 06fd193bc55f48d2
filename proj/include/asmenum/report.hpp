#pragma once

#include <string>
#include <vector>

namespace asmenum {

/// Result of one verification check at one order. Failures are collected,
/// never thrown.
struct CheckReport {
  std::string name;
  int n = 0;
  bool skipped = false;
  std::vector<std::string> failures;
  std::string note;  // skip reason, seed, and similar context

  bool passed() const { return !skipped && failures.empty(); }
  void fail(std::string witness) { failures.push_back(std::move(witness)); }
};

}  // namespace asmenum
