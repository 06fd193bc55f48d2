#include "asmenum/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace asmenum {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format: " + std::string(name));
}

namespace {

std::string render_text(const CountTable& table, const Selection& entries) {
  std::ostringstream os;
  const int arity = index_arity(table.kind());
  if (arity < 2) {
    for (std::size_t k = 0; k < entries.size(); ++k)
      os << (k ? " " : "") << entries[k].value.get_str();
    if (!entries.empty()) os << '\n';
    return os.str();
  }
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const bool new_line = k == 0 || entries[k].i != entries[k - 1].i;
    if (!new_line) os << ' ';
    os << entries[k].value.get_str();
    if (k + 1 == entries.size() || entries[k + 1].i != entries[k].i) os << '\n';
  }
  return os.str();
}

std::string render_csv(const CountTable& table, const Selection& entries) {
  std::ostringstream os;
  const int arity = index_arity(table.kind());
  os << "n" << (arity >= 1 ? ",i" : "") << (arity == 2 ? ",j" : "") << ",value\n";
  for (const auto& e : entries) {
    os << table.order();
    if (arity >= 1) os << ',' << e.i;
    if (arity == 2) os << ',' << e.j;
    os << ',' << e.value.get_str() << '\n';
  }
  return os.str();
}

std::string render_json(const CountTable& table, const Selection& entries) {
  const int arity = index_arity(table.kind());
  ordered_json doc;
  doc["n"] = table.order();
  doc["kind"] = std::string(to_string(table.kind()));
  doc["entries"] = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json item;
    if (arity >= 1) item["i"] = e.i;
    if (arity == 2) item["j"] = e.j;
    item["value"] = e.value.get_str();
    doc["entries"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render_table(const CountTable& table, const Selection& entries,
                         OutputFormat format) {
  switch (format) {
    case OutputFormat::text: return render_text(table, entries);
    case OutputFormat::csv: return render_csv(table, entries);
    case OutputFormat::json: return render_json(table, entries);
  }
  return {};
}

std::string render_table(const CountTable& table, OutputFormat format) {
  return render_table(table, table.entries(), format);
}

namespace {

const char* status_of(const CheckReport& r) {
  if (r.skipped) return "skip";
  return r.passed() ? "pass" : "fail";
}

constexpr std::size_t kMaxWitnesses = 5;

}  // namespace

std::string render_verify_json(const VerifyReport& report) {
  ordered_json doc;
  doc["seed"] = report.seed;
  doc["n_max"] = report.n_max;
  doc["passed"] = report.passed();
  doc["results"] = ordered_json::array();
  for (const auto& r : report.results) {
    ordered_json item;
    item["suite"] = r.name;
    item["n"] = r.n;
    item["status"] = status_of(r);
    if (!r.note.empty()) item["note"] = r.note;
    if (!r.failures.empty()) {
      item["failures"] = r.failures.size();
      ordered_json witness = ordered_json::array();
      for (std::size_t k = 0; k < r.failures.size() && k < kMaxWitnesses; ++k)
        witness.push_back(r.failures[k]);
      item["witness"] = std::move(witness);
    }
    doc["results"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

std::string render_verify_text(const VerifyReport& report) {
  std::ostringstream os;
  os << "seed " << report.seed << ", n-max " << report.n_max << '\n';
  for (const auto& r : report.results) {
    os << status_of(r) << ' ' << r.name << " n=" << r.n;
    if (!r.note.empty()) os << " (" << r.note << ')';
    os << '\n';
    for (std::size_t k = 0; k < r.failures.size() && k < kMaxWitnesses; ++k)
      os << "    " << r.failures[k] << '\n';
  }
  os << (report.passed() ? "ALL PASS" : "FAILURES") << '\n';
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

CacheLoadResult load_alpha_cache(const std::filesystem::path& path, AlphaCache& cache) {
  using Status = CacheLoadResult::Status;
  std::ifstream in(path);
  if (!in) return {Status::missing, 0, "no cache at " + path.string()};

  std::string line;
  std::getline(in, line);
  const std::string expected =
      std::string(kCacheMagic) + " v" + std::to_string(kCacheVersion);
  if (line.rfind(kCacheMagic, 0) != 0)
    return {Status::invalid, 0, path.string() + " is not an alpha cache"};
  if (line != expected)
    return {Status::invalid, 0,
            path.string() + " has cache version '" + line.substr(kCacheMagic.size()) +
                "', expected v" + std::to_string(kCacheVersion)};

  std::size_t declared = 0;
  if (!std::getline(in, line))
    return {Status::invalid, 0, path.string() + " is truncated"};
  try {
    declared = std::stoull(line);
  } catch (const std::exception&) {
    return {Status::invalid, 0, path.string() + " has a malformed entry count"};
  }

  std::vector<std::pair<std::vector<int>, mpz_class>> parsed;
  parsed.reserve(declared);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto space = line.find(' ');
    if (space == std::string::npos)
      return {Status::invalid, 0, path.string() + " has a malformed entry"};
    std::vector<int> key;
    std::stringstream keys(line.substr(0, space));
    for (std::string item; std::getline(keys, item, ',');) {
      try {
        key.push_back(std::stoi(item));
      } catch (const std::exception&) {
        return {Status::invalid, 0, path.string() + " has a malformed key"};
      }
    }
    mpz_class value;
    if (value.set_str(line.substr(space + 1), 10) != 0 || value < 0)
      return {Status::invalid, 0, path.string() + " has a malformed value"};
    try {
      BottomRow row(key);
      if (row.values().front() != 1) throw std::domain_error("not normalized");
    } catch (const std::domain_error&) {
      return {Status::invalid, 0, path.string() + " has an invalid key"};
    }
    parsed.emplace_back(std::move(key), std::move(value));
  }
  if (parsed.size() != declared)
    return {Status::invalid, 0, path.string() + " entry count does not match header"};

  for (const auto& [key, value] : parsed) cache.insert(key, value);
  return {Status::loaded, parsed.size(), "loaded " + std::to_string(parsed.size()) +
                                             " entries from " + path.string()};
}

void save_alpha_cache(const std::filesystem::path& path, const AlphaCache& cache) {
  const auto entries = cache.snapshot();
  std::ostringstream os;
  os << kCacheMagic << " v" << kCacheVersion << '\n' << entries.size() << '\n';
  for (const auto& [key, value] : entries) {
    for (std::size_t k = 0; k < key.size(); ++k) os << (k ? "," : "") << key[k];
    os << ' ' << value.get_str() << '\n';
  }
  write_file(path, os.str());
}

}  // namespace asmenum
