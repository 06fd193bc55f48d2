#pragma once

// Table export (text, CSV, JSON), verification reports, and the on-disk
// alpha cache.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "asmenum/count_table.hpp"
#include "asmenum/counting.hpp"
#include "asmenum/verify.hpp"

namespace asmenum {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { text, csv, json };

/// Throws std::invalid_argument for anything but "text", "csv", "json".
OutputFormat parse_format(std::string_view name);

using Selection = std::vector<CountTable::Entry>;

/// Text: one line per first index for two-index tables, a single line for
/// one-index tables, the bare value for totals.
/// CSV: header "n,i,j,value" (columns without a meaning for the kind are
/// dropped), values as decimal strings.
/// JSON: {"n": int, "kind": str, "entries": [{"i", "j", "value"}]}, values
/// as decimal strings.
std::string render_table(const CountTable& table, const Selection& entries,
                         OutputFormat format);
std::string render_table(const CountTable& table, OutputFormat format);

std::string render_verify_json(const VerifyReport& report);
std::string render_verify_text(const VerifyReport& report);

/// Writes `content` to `path`; throws IoError on failure.
void write_file(const std::filesystem::path& path, std::string_view content);

inline constexpr std::string_view kCacheMagic = "ASMENUM-ALPHA-CACHE";
inline constexpr int kCacheVersion = 1;

struct CacheLoadResult {
  enum class Status { missing, loaded, invalid };
  Status status = Status::missing;
  std::size_t entries = 0;
  std::string message;
};

/// Reads a cache file into `cache`. A missing file is not an error; a file
/// with the wrong magic, version or body is reported as invalid and nothing
/// is loaded.
CacheLoadResult load_alpha_cache(const std::filesystem::path& path, AlphaCache& cache);

/// Layout:
///   ASMENUM-ALPHA-CACHE v1
///   <entry count>
///   k1,k2,...,km <decimal value>      (one line per entry, keys ascending)
void save_alpha_cache(const std::filesystem::path& path, const AlphaCache& cache);

}  // namespace asmenum
