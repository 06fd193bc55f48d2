#include "cli.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "asmenum/counting.hpp"
#include "asmenum/formulas.hpp"
#include "asmenum/io.hpp"
#include "asmenum/sixvertex.hpp"
#include "asmenum/verify.hpp"

namespace asmenum::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 0;
  std::string format = "text";
  std::string mode = "formula";
  std::string kind = "top-two";
  std::string output;
  std::optional<int> only_i;
  bool brute = false;
  bool unsafe_large = false;
  bool inject_fault = false;

  // verify
  int n_max = 5;
  std::string suites = "all";
  std::string report_format = "json";
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-9;
  double trig_tol = 1e-12;

  // partition
  std::vector<double> xs;
  std::vector<double> ys;
  double eta = kDefaultEta;

  // global
  std::string cache_path;
  int threads = 0;
  std::string cache_action;
  int warm_n = 0;
};

void require_desk(int n, int limit, bool unsafe, const char* what) {
  if (n > limit && !unsafe)
    throw UsageError(std::string(what) + " is limited to n <= " + std::to_string(limit) +
                     "; pass --unsafe-large to override");
}

class Session {
 public:
  Session(const RunConfig& config, std::ostream& out, std::ostream& err)
      : cfg_(config), out_(out), err_(err) {}

  int count();
  int refined();
  int doubly();
  int verify();
  int partition();
  int cache();

  void load_cache();
  void finish_cache();

 private:
  void emit(const CountTable& table);
  int compare(const CountTable& formula, const CountTable& brute);
  void corrupt_if_requested(CountTable& table) const;

  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
  AlphaCache alpha_cache_;
  bool cache_used_ = false;
};

void Session::load_cache() {
  if (cfg_.cache_path.empty()) return;
  auto result = load_alpha_cache(cfg_.cache_path, alpha_cache_);
  if (result.status == CacheLoadResult::Status::invalid)
    err_ << "warning: " << result.message << "; rebuilding cache\n";
  else if (result.status == CacheLoadResult::Status::loaded)
    err_ << "cache: " << result.message << '\n';
  alpha_cache_.reset_stats();
}

void Session::finish_cache() {
  if (!cache_used_) return;
  const auto stats = alpha_cache_.stats();
  err_ << "cache: " << stats.hits << " hits, " << stats.misses << " misses\n";
  if (!cfg_.cache_path.empty()) save_alpha_cache(cfg_.cache_path, alpha_cache_);
}

void Session::corrupt_if_requested(CountTable& table) const {
  if (!cfg_.inject_fault) return;
  auto entries = table.entries();
  table.set(entries.front().i, entries.front().j, entries.front().value + 1);
}

void Session::emit(const CountTable& table) {
  Selection selected;
  for (auto& e : table.entries())
    if (!cfg_.only_i || e.i == *cfg_.only_i) selected.push_back(e);
  const auto text = render_table(table, selected, parse_format(cfg_.format));
  if (cfg_.output.empty())
    out_ << text;
  else
    write_file(cfg_.output, text);
}

int Session::compare(const CountTable& formula, const CountTable& brute) {
  bool equal = true;
  for (const auto& e : formula.entries()) {
    const auto& b = brute.strict(e.i, e.j);
    const bool same = e.value == b;
    equal = equal && same;
    out_ << e.i;
    if (index_arity(formula.kind()) == 2) out_ << ' ' << e.j;
    out_ << ' ' << e.value.get_str() << ' ' << b.get_str() << ' '
         << (same ? "EQUAL" : "DIFF") << '\n';
  }
  out_ << (equal ? "EQUAL" : "UNEQUAL") << '\n';
  return equal ? kSuccess : kVerificationFailure;
}

int Session::count() {
  if (cfg_.n < 1) throw UsageError("n must be at least 1");
  const mpz_class formula = asm_total(cfg_.n);
  if (!cfg_.brute) {
    CountTable table(TableKind::total, cfg_.n);
    table.set(0, 0, formula);
    emit(table);
    return kSuccess;
  }
  require_desk(cfg_.n, kExactDeskLimit, cfg_.unsafe_large, "--brute");
  cache_used_ = true;
  mpz_class brute = count_all_brute(cfg_.n, alpha_cache_);
  if (cfg_.inject_fault) brute += 1;
  const bool equal = formula == brute;
  out_ << formula.get_str() << '\n'
       << brute.get_str() << '\n'
       << (equal ? "EQUAL" : "UNEQUAL") << '\n';
  return equal ? kSuccess : kVerificationFailure;
}

int Session::refined() {
  if (cfg_.n < 1) throw UsageError("n must be at least 1");
  if (cfg_.mode == "formula") {
    emit(refined_formula_table(cfg_.n));
    return kSuccess;
  }
  if (cfg_.n < 2) throw UsageError("brute-force refined table needs n >= 2");
  require_desk(cfg_.n, kExactDeskLimit, cfg_.unsafe_large, "brute mode");
  cache_used_ = true;
  auto brute = refined_brute(cfg_.n, alpha_cache_);
  corrupt_if_requested(brute);
  if (cfg_.mode == "brute") {
    emit(brute);
    return kSuccess;
  }
  return compare(refined_formula_table(cfg_.n), brute);
}

int Session::doubly() {
  const bool top_two = cfg_.kind == "top-two";
  const int min_formula = top_two ? 3 : 2;
  const int min_brute = top_two ? 3 : 1;
  auto formula = [&] {
    if (cfg_.n < min_formula)
      throw UsageError("formula table needs n >= " + std::to_string(min_formula));
    return top_two ? doubly_top_formula_table(cfg_.n)
                   : doubly_topbottom_formula_table(cfg_.n);
  };
  if (cfg_.mode == "formula") {
    emit(formula());
    return kSuccess;
  }
  if (cfg_.n < min_brute)
    throw UsageError("brute-force table needs n >= " + std::to_string(min_brute));
  require_desk(cfg_.n, kExactDeskLimit, cfg_.unsafe_large, "brute mode");
  cache_used_ = top_two;
  auto brute = top_two ? doubly_top_brute(cfg_.n, alpha_cache_)
                       : doubly_topbottom_brute(cfg_.n);
  corrupt_if_requested(brute);
  if (cfg_.mode == "brute") {
    emit(brute);
    return kSuccess;
  }
  return compare(formula(), brute);
}

int Session::verify() {
  VerifyOptions options;
  options.n_max = cfg_.n_max;
  options.seed = cfg_.seed;
  options.tol = cfg_.tol;
  options.trig_tol = cfg_.trig_tol;
  options.unsafe_large = cfg_.unsafe_large;
  options.inject_fault = cfg_.inject_fault;
  options.cache = &alpha_cache_;
  try {
    options.suites = resolve_suites(cfg_.suites);
    cache_used_ = true;
    const auto report = run_verification(options);
    const auto text = cfg_.report_format == "text" ? render_verify_text(report)
                                            : render_verify_json(report);
    if (cfg_.output.empty())
      out_ << text;
    else
      write_file(cfg_.output, text);
    err_ << "verify: seed " << report.seed << ", "
         << (report.passed() ? "all suites passed" : "FAILURES") << '\n';
    return report.passed() ? kSuccess : kVerificationFailure;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int Session::partition() {
  if (cfg_.n < 1) throw UsageError("n must be at least 1");
  require_desk(cfg_.n, kIceDeskLimit, cfg_.unsafe_large, "partition");
  if (static_cast<int>(cfg_.xs.size()) != cfg_.n || static_cast<int>(cfg_.ys.size()) != cfg_.n)
    throw UsageError("--xs and --ys must each list exactly n values");
  SpectralParams params{cfg_.eta, cfg_.xs, cfg_.ys};
  try {
    params.validate();
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  const double z = ice_lattice(cfg_.n).partition_function_serial(params);
  std::ostringstream os;
  os << std::showpoint << std::setprecision(12) << z << '\n';
  out_ << os.str();
  return kSuccess;
}

int Session::cache() {
  if (cfg_.cache_path.empty())
    throw UsageError("no cache path; pass --cache or set ASMENUM_CACHE");
  if (cfg_.cache_action == "info") {
    out_ << "path " << cfg_.cache_path << '\n'
         << "format " << kCacheMagic << " v" << kCacheVersion << '\n'
         << "entries " << alpha_cache_.size() << '\n';
    return kSuccess;
  }
  if (cfg_.cache_action == "clear") {
    std::error_code ec;
    std::filesystem::remove(cfg_.cache_path, ec);
    if (ec) throw IoError("cannot remove " + cfg_.cache_path + ": " + ec.message());
    out_ << "cleared " << cfg_.cache_path << '\n';
    return kSuccess;
  }
  // warm
  require_desk(cfg_.warm_n, kExactDeskLimit + 3, cfg_.unsafe_large, "cache warm");
  cache_used_ = true;
  for (int n = 3; n <= cfg_.warm_n; ++n) doubly_top_brute(n, alpha_cache_);
  if (cfg_.warm_n >= 1) count_all_brute(cfg_.warm_n, alpha_cache_);
  out_ << "entries " << alpha_cache_.size() << '\n';
  return kSuccess;
}

std::unique_ptr<CLI::App> build_app(RunConfig& cfg) {
  auto app = std::make_unique<CLI::App>(
      "Exact enumeration of alternating sign matrices: product formulas, "
      "doubly-refined numbers, brute-force oracles and six-vertex checks",
      "asmenum");
  app->require_subcommand(1);
  app->add_option("--cache", cfg.cache_path, "alpha cache file")->envname("ASMENUM_CACHE");
  app->add_option("--threads", cfg.threads, "OpenMP worker count (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
  };
  auto add_table_opts = [&](CLI::App* sub) {
    add_format(sub);
    sub->add_option("--mode", cfg.mode, "formula, brute, or both (diff report)")
        ->check(CLI::IsMember({"formula", "brute", "both"}));
    sub->add_option("--output,-o", cfg.output, "write the table to a file");
    sub->add_option("--only-i", cfg.only_i, "keep entries whose first index equals this");
    sub->add_flag("--unsafe-large", cfg.unsafe_large, "lift the desk-scale limit");
    sub->add_flag("--inject-fault", cfg.inject_fault)->group("");
  };

  auto* count = app->add_subcommand("count", "total number A_n of ASMs of order n");
  count->add_option("n", cfg.n)->required();
  count->add_flag("--brute", cfg.brute, "also count by dynamic programming and compare");
  count->add_flag("--unsafe-large", cfg.unsafe_large, "lift the desk-scale limit");
  count->add_flag("--inject-fault", cfg.inject_fault)->group("");
  count->add_option("--output,-o", cfg.output, "write the value to a file");
  add_format(count);

  auto* refined = app->add_subcommand("refined", "refined numbers A_{n,k}");
  refined->add_option("n", cfg.n)->required();
  add_table_opts(refined);

  auto* doubly = app->add_subcommand("doubly", "doubly-refined numbers");
  doubly->add_option("n", cfg.n)->required();
  doubly->add_option("--kind", cfg.kind, "top-two (A_{n,i,j}) or top-bottom (B_{n,i,j})")
      ->check(CLI::IsMember({"top-two", "top-bottom"}));
  add_table_opts(doubly);

  auto* verify = app->add_subcommand("verify", "run the verification suites");
  verify->add_option("--n-max", cfg.n_max, "largest order to check");
  verify->add_option("--suites", cfg.suites, "comma list of suites, or exact / ice / all");
  verify->add_option("--seed", cfg.seed, "seed for randomized suites");
  verify->add_option("--tol", cfg.tol, "relative tolerance for partition-function checks");
  verify->add_option("--trig-tol", cfg.trig_tol, "tolerance for pointwise trig identities");
  verify->add_option("--output,-o", cfg.output, "write the report to a file");
  verify->add_flag("--unsafe-large", cfg.unsafe_large, "lift the desk-scale limit");
  verify->add_flag("--inject-fault", cfg.inject_fault)->group("");
  verify->add_option("--format", cfg.report_format, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* partition = app->add_subcommand("partition", "six-vertex partition function Z_n");
  partition->add_option("n", cfg.n)->required();
  partition->add_option("--xs", cfg.xs, "row parameters")->delimiter(',')->required();
  partition->add_option("--ys", cfg.ys, "column parameters")->delimiter(',')->required();
  partition->add_option("--eta", cfg.eta, "crossing parameter (default 2*pi/3)");
  partition->add_flag("--unsafe-large", cfg.unsafe_large, "lift the desk-scale limit");

  auto* cache = app->add_subcommand("cache", "inspect or manage the alpha cache file");
  cache->require_subcommand(1);
  cache->add_subcommand("info", "show the cache file summary")
      ->callback([&] { cfg.cache_action = "info"; });
  cache->add_subcommand("clear", "delete the cache file")
      ->callback([&] { cfg.cache_action = "clear"; });
  auto* warm = cache->add_subcommand("warm", "fill the cache up to order n");
  warm->add_option("n", cfg.warm_n)->required();
  warm->add_flag("--unsafe-large", cfg.unsafe_large, "lift the desk-scale limit");
  warm->callback([&] { cfg.cache_action = "warm"; });
  return app;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  auto app = build_app(cfg);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("asmenum");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app->parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app->help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app->help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

  Session session(cfg, out, err);
  try {
    session.load_cache();
    int code = kSuccess;
    const auto* sub = app->get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "count") code = session.count();
    else if (name == "refined") code = session.refined();
    else if (name == "doubly") code = session.doubly();
    else if (name == "verify") code = session.verify();
    else if (name == "partition") code = session.partition();
    else if (name == "cache") code = session.cache();
    session.finish_cache();
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace asmenum::cli
