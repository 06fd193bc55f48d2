#include "asmenum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "asmenum/asm.hpp"
#include "asmenum/formulas.hpp"
#include "asmenum/sixvertex.hpp"

namespace asmenum {

const std::vector<std::string>& exact_suites() {
  static const std::vector<std::string> names = {
      "total",     "refined", "doubly_top",   "doubly_topbottom", "stroganov",
      "ab_identity",       "x_recurrence", "integrality", "structural"};
  return names;
}

const std::vector<std::string>& ice_suites() {
  static const std::vector<std::string> names = {
      "zero_point", "row_symmetry", "s1_s2", "expansion_s1", "expansion_s2",
      "identity_120"};
  return names;
}

std::vector<std::string> resolve_suites(const std::string& spec) {
  std::vector<std::string> requested;
  std::stringstream in(spec);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    if (item == "all" || item == "exact")
      requested.insert(requested.end(), exact_suites().begin(), exact_suites().end());
    if (item == "all" || item == "ice")
      requested.insert(requested.end(), ice_suites().begin(), ice_suites().end());
    if (item == "all" || item == "exact" || item == "ice") continue;
    auto known = [&](const std::vector<std::string>& names) {
      return std::find(names.begin(), names.end(), item) != names.end();
    };
    if (!known(exact_suites()) && !known(ice_suites()))
      throw std::invalid_argument("unknown suite: " + item);
    requested.push_back(item);
  }
  // Canonical order: exact suites first, each in declaration order.
  std::vector<std::string> ordered;
  for (const auto* group : {&exact_suites(), &ice_suites()})
    for (const auto& name : *group)
      if (std::find(requested.begin(), requested.end(), name) != requested.end())
        ordered.push_back(name);
  return ordered;
}

bool VerifyReport::passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckReport& r) { return r.skipped || r.passed(); });
}

namespace {

struct SuiteSpec {
  int min_n;
  bool ice;
};

SuiteSpec spec_for(const std::string& name) {
  static const std::map<std::string, SuiteSpec> specs = {
      {"total", {1, false}},        {"refined", {2, false}},
      {"doubly_top", {3, false}},   {"doubly_topbottom", {2, false}},
      {"stroganov", {2, false}},    {"ab_identity", {3, false}},
      {"x_recurrence", {3, false}}, {"integrality", {2, false}},
      {"structural", {1, false}},   {"zero_point", {1, true}},
      {"row_symmetry", {1, true}},  {"s1_s2", {2, true}},
      {"expansion_s1", {2, true}},  {"expansion_s2", {3, true}},
      {"identity_120", {0, true}}};
  return specs.at(name);
}

void corrupt(CountTable& table) {
  auto entries = table.entries();
  const auto& first = entries.front();
  table.set(first.i, first.j, first.value + 1);
}

// Brute-force tables for one order, optionally corrupted.
class BruteTables {
 public:
  BruteTables(int n, AlphaCache& cache, bool fault)
      : n_(n), cache_(cache), fault_(fault) {}

  mpz_class total() {
    mpz_class value = count_all_brute(n_, cache_);
    return fault_ ? value + 1 : value;
  }
  const CountTable& refined() { return lazy(refined_, [&] { return refined_brute(n_, cache_); }); }
  const CountTable& refined_of(int m) {
    auto it = lower_.find(m);
    if (it == lower_.end()) it = lower_.emplace(m, refined_brute(m, cache_)).first;
    return it->second;
  }
  const CountTable& top() { return lazy(top_, [&] { return doubly_top_brute(n_, cache_); }); }
  const CountTable& topbottom() {
    return lazy(topbottom_, [&] { return doubly_topbottom_brute(n_); });
  }

 private:
  template <class Make>
  const CountTable& lazy(std::optional<CountTable>& slot, Make make) {
    if (!slot) {
      slot = make();
      if (fault_) corrupt(*slot);
    }
    return *slot;
  }

  int n_;
  AlphaCache& cache_;
  bool fault_;
  std::optional<CountTable> refined_, top_, topbottom_;
  std::map<int, CountTable> lower_;
};

std::string pair_str(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void compare_tables(CheckReport& report, const CountTable& formula,
                    const CountTable& brute) {
  for (const auto& e : formula.entries()) {
    const auto& b = brute.strict(e.i, e.j);
    if (e.value != b)
      report.fail(pair_str(e.i, e.j) + ": formula=" + e.value.get_str() +
                  " brute=" + b.get_str());
  }
}

void run_total(CheckReport& r, int n, BruteTables& brute) {
  const mpz_class formula = asm_total(n);
  const mpz_class dp = brute.total();
  if (formula != dp)
    r.fail("A_n formula=" + formula.get_str() + " brute=" + dp.get_str());
  if (n <= kExactDeskLimit) {
    std::uint64_t streamed = 0;
    AsmStream stream(n);
    while (stream.next_triangle()) ++streamed;
    if (mpz_class(static_cast<unsigned long>(streamed)) != formula)
      r.fail("enumerated " + std::to_string(streamed) + " ASMs, formula " +
             formula.get_str());
  }
}

void run_refined(CheckReport& r, int n, BruteTables& brute) {
  compare_tables(r, refined_formula_table(n), brute.refined());
  if (refined_formula_table(n).sum() != asm_total(n))
    r.fail("sum_k A_{n,k} != A_n");
}

void run_structural(CheckReport& r, int n, BruteTables& brute) {
  if (n <= 6) {
    std::vector<Asm> seen;
    AsmStream stream(n);
    while (auto t = stream.next_triangle()) {
      const Asm a = triangle_to_asm(*t);
      if (!(asm_to_triangle(a) == *t)) r.fail("triangle round trip failed");
      if (!validate_asm(a.rows()).ok()) r.fail("enumerated matrix is not an ASM");
      seen.push_back(a);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      r.fail("enumeration produced a duplicate ASM");
  }
  if (n < 3) return;

  const auto& a = brute.top();
  const auto& b = brute.topbottom();
  mpz_class weighted = 0;
  for (const auto& e : a.entries()) {
    weighted += (e.j - e.i + 1) * e.value;
    if (e.value != a.get(n + 1 - e.j, n + 1 - e.i))
      r.fail("A mirror symmetry at " + pair_str(e.i, e.j));
  }
  if (weighted != brute.total()) r.fail("sum (j-i+1) A_{n,i,j} != A_n");

  const auto& lower = brute.refined_of(n - 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (b.get(i, j) != b.get(j, i)) r.fail("B_{n,i,j} != B_{n,j,i} at " + pair_str(i, j));
      if (b.get(i, j) != b.get(n + 1 - i, n + 1 - j))
        r.fail("B horizontal flip at " + pair_str(i, j));
    }
    if (i >= 2 && b.get(1, i) != lower.get(i - 1))
      r.fail("B_{n,1,j} != A_{n-1,j-1} at j=" + std::to_string(i));
  }
  if (b.sum() != brute.total()) r.fail("sum B_{n,i,j} != A_n");

  const auto buckets = top_two_row_buckets(n);
  std::size_t triples = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) triples += static_cast<std::size_t>(j - i + 1);
  if (buckets.size() != triples)
    r.fail("top-two buckets cover " + std::to_string(buckets.size()) + " of " +
           std::to_string(triples) + " triples");
  for (const auto& [key, count] : buckets) {
    const auto [i, j, k] = key;
    if (mpz_class(static_cast<unsigned long>(count)) != a.get(i, j))
      r.fail("top-two bucket (i,j,k)=(" + std::to_string(i) + "," + std::to_string(j) +
             "," + std::to_string(k) + ") holds " + std::to_string(count) +
             ", A_{n,i,j}=" + a.get(i, j).get_str());
  }
}

std::string describe_draw(double u, double v, double lhs, double rhs) {
  std::ostringstream os;
  os.precision(17);
  os << "(u,v)=(" << u << "," << v << "): " << lhs << " vs " << rhs;
  return os.str();
}

void run_ice(CheckReport& r, const std::string& name, int n, BruteTables& brute,
             const VerifyOptions& opt, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(-1.0, 1.0);
  r.note = "seed=" + std::to_string(seed);

  if (name == "zero_point") {
    const double z = partition_function(zero_params(n));
    const double expected = asm_total(n).get_d();
    if (relative_difference(z, expected) > opt.tol)
      r.fail(describe_draw(0, 0, z, expected));
  } else if (name == "row_symmetry") {
    auto sym = check_row_symmetry(n, opt.symmetry_trials, seed, opt.tol);
    r.failures = std::move(sym.failures);
  } else if (name == "s1_s2") {
    for (int trial = 0; trial < opt.sample_trials; ++trial) {
      const double u = draw(rng), v = draw(rng);
      const double a = s1(n, u, v), b = s2(n, u, v);
      if (relative_difference(a, b) > opt.tol) r.fail(describe_draw(u, v, a, b));
    }
  } else if (name == "expansion_s1") {
    const auto& table = brute.topbottom();
    for (int trial = 0; trial < opt.sample_trials; ++trial) {
      const double u = draw(rng), v = draw(rng);
      const double lhs = s1_expansion(n, u, v, table), rhs = s1(n, u, v);
      if (relative_difference(lhs, rhs) > opt.tol) r.fail(describe_draw(u, v, lhs, rhs));
    }
  } else if (name == "expansion_s2") {
    const auto& table = brute.top();
    for (int trial = 0; trial < opt.sample_trials;) {
      const double u = draw(rng), v = draw(rng);
      const double ts = phi(u) / phi(-u) * phi(-v) / phi(v);
      if (std::abs(ts - 1.0) <= 1e-3) continue;
      ++trial;
      const double lhs = s2_expansion(n, u, v, table), rhs = s2(n, u, v);
      if (relative_difference(lhs, rhs) > opt.tol) r.fail(describe_draw(u, v, lhs, rhs));
    }
  } else if (name == "identity_120") {
    std::uniform_real_distribution<double> wide(-std::numbers::pi, std::numbers::pi);
    for (int k = 0; k < opt.identity_points; ++k) {
      const double x = wide(rng);
      const double residual = identity_120_residual(x);
      if (std::abs(residual) > opt.trig_tol) {
        std::ostringstream os;
        os.precision(17);
        os << "x=" << x << " residual=" << residual;
        r.fail(os.str());
      }
    }
  }
}

void run_exact(CheckReport& r, const std::string& name, int n, BruteTables& brute) {
  if (name == "total") {
    run_total(r, n, brute);
  } else if (name == "refined") {
    run_refined(r, n, brute);
  } else if (name == "doubly_top") {
    compare_tables(r, doubly_top_formula_table(n), brute.top());
  } else if (name == "doubly_topbottom") {
    compare_tables(r, doubly_topbottom_formula_table(n), brute.topbottom());
  } else if (name == "stroganov") {
    r.failures = check_stroganov(n, brute.topbottom()).failures;
  } else if (name == "ab_identity") {
    r.failures = check_ab_identity(n, brute.top(), brute.topbottom()).failures;
  } else if (name == "x_recurrence") {
    r.failures = check_x_recurrence(n, brute.top()).failures;
  } else if (name == "integrality") {
    r.failures = check_integrality(n).failures;
  } else if (name == "structural") {
    run_structural(r, n, brute);
  }
}

std::uint32_t fnv1a(const std::string& text) {
  std::uint32_t h = 2166136261u;
  for (unsigned char ch : text) h = (h ^ ch) * 16777619u;
  return h;
}

std::uint64_t suite_seed(std::uint64_t seed, const std::string& name, int n) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    fnv1a(name),
                    static_cast<std::uint32_t>(n)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.n_max < 1) throw std::invalid_argument("n-max must be at least 1");
  if (options.n_max > kExactDeskLimit && !options.unsafe_large)
    throw std::invalid_argument("n-max above " + std::to_string(kExactDeskLimit) +
                                " requires --unsafe-large");
  if (!(options.tol > 0) || !(options.trig_tol > 0))
    throw std::invalid_argument("tolerances must be positive");
  AlphaCache& cache = options.cache ? *options.cache : default_alpha_cache();

  VerifyReport report;
  report.seed = options.seed;
  report.n_max = options.n_max;
  std::vector<BruteTables> tables;
  for (int n = 1; n <= options.n_max; ++n) tables.emplace_back(n, cache, options.inject_fault);

  for (const auto& name : options.suites) {
    const auto spec = spec_for(name);
    if (spec.min_n == 0) {
      CheckReport r{name, 0, false, {}, {}};
      run_ice(r, name, 0, tables.front(), options, suite_seed(options.seed, name, 0));
      report.results.push_back(std::move(r));
      continue;
    }
    for (int n = 1; n <= options.n_max; ++n) {
      CheckReport r{name, n, false, {}, {}};
      if (n < spec.min_n) {
        r.skipped = true;
        r.note = "requires n >= " + std::to_string(spec.min_n);
      } else if (spec.ice && n > kIceDeskLimit && !options.unsafe_large) {
        r.skipped = true;
        r.note = "above desk limit " + std::to_string(kIceDeskLimit) +
                 "; pass --unsafe-large";
      } else {
        auto& brute = tables[static_cast<std::size_t>(n - 1)];
        try {
          if (spec.ice)
            run_ice(r, name, n, brute, options, suite_seed(options.seed, name, n));
          else
            run_exact(r, name, n, brute);
        } catch (const IntegralityError& e) {
          r.fail(e.what());
        }
      }
      report.results.push_back(std::move(r));
    }
  }
  return report;
}

}  // namespace asmenum
