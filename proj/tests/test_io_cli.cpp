#include <gtest/gtest.h>

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "asmenum/formulas.hpp"
#include "asmenum/io.hpp"
#include "asmenum/sixvertex.hpp"
#include "cli.hpp"

using namespace asmenum;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("asmenum-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Render, TextLayouts) {
  EXPECT_EQ(render_table(refined_formula_table(4), OutputFormat::text), "7 14 14 7\n");
  EXPECT_EQ(render_table(doubly_top_formula_table(4), OutputFormat::text), "2 3 2\n4 3\n2\n");
  CountTable total(TableKind::total, 4);
  total.set(0, 0, 42);
  EXPECT_EQ(render_table(total, OutputFormat::text), "42\n");
}

TEST(Render, CsvHeadersFollowArity) {
  const auto csv = render_table(doubly_topbottom_formula_table(2), OutputFormat::csv);
  EXPECT_EQ(csv, "n,i,j,value\n2,1,1,0\n2,1,2,1\n2,2,1,1\n2,2,2,0\n");
  EXPECT_EQ(render_table(refined_formula_table(3), OutputFormat::csv),
            "n,i,value\n3,1,2\n3,2,3\n3,3,2\n");
}

TEST(Render, JsonValuesAreDecimalStrings) {
  const auto text = render_table(refined_formula_table(20), OutputFormat::json);
  const auto doc = nlohmann::json::parse(text);
  EXPECT_EQ(doc["n"], 20);
  EXPECT_EQ(doc["kind"], "refined");
  ASSERT_EQ(doc["entries"].size(), 20u);
  EXPECT_TRUE(doc["entries"][9]["value"].is_string());
  EXPECT_EQ(mpz_class(doc["entries"][9]["value"].get<std::string>()), asm_refined(20, 10));
  EXPECT_FALSE(doc["entries"][0].contains("j"));

  const auto empty = nlohmann::json::parse(
      render_table(refined_formula_table(3), Selection{}, OutputFormat::json));
  EXPECT_TRUE(empty["entries"].is_array());
  EXPECT_TRUE(empty["entries"].empty());
}

TEST(Render, ParseFormat) {
  EXPECT_EQ(parse_format("csv"), OutputFormat::csv);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(AlphaCacheFile, RoundTrip) {
  TempDir dir;
  AlphaCache warm;
  doubly_top_brute(6, warm);
  save_alpha_cache(dir / "a.cache", warm);
  AlphaCache cold;
  const auto r = load_alpha_cache(dir / "a.cache", cold);
  EXPECT_EQ(r.status, CacheLoadResult::Status::loaded);
  EXPECT_EQ(r.entries, warm.size());
  EXPECT_EQ(cold.snapshot(), warm.snapshot());
  EXPECT_EQ(load_alpha_cache(dir / "missing", cold).status, CacheLoadResult::Status::missing);
}

TEST(AlphaCacheFile, RejectsBadFiles) {
  TempDir dir;
  auto write = [&](const std::string& name, const std::string& body) {
    write_file(dir / name, body);
    AlphaCache c;
    auto r = load_alpha_cache(dir / name, c);
    EXPECT_EQ(c.size(), 0u) << name;
    return r;
  };
  const auto version = write("v2", "ASMENUM-ALPHA-CACHE v2\n0\n");
  EXPECT_EQ(version.status, CacheLoadResult::Status::invalid);
  EXPECT_NE(version.message.find("version"), std::string::npos);
  EXPECT_EQ(write("magic", "hello\n").status, CacheLoadResult::Status::invalid);
  EXPECT_EQ(write("count", "ASMENUM-ALPHA-CACHE v1\n2\n1,2 2\n").status,
            CacheLoadResult::Status::invalid);
  EXPECT_EQ(write("key", "ASMENUM-ALPHA-CACHE v1\n1\n2,1 2\n").status,
            CacheLoadResult::Status::invalid);
  EXPECT_EQ(write("value", "ASMENUM-ALPHA-CACHE v1\n1\n1,2 x\n").status,
            CacheLoadResult::Status::invalid);
}

TEST(WriteFile, UnwritablePathIsIoError) {
  EXPECT_THROW(write_file("/nonexistent-dir/x/y.txt", "z"), IoError);
}

TEST(Cli, CountAndTables) {
  auto r = run_cli({"count", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "42\n");
  r = run_cli({"count", "6", "--brute"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "7436\n7436\nEQUAL\n");
  r = run_cli({"refined", "4"});
  EXPECT_EQ(r.out, "7 14 14 7\n");
  r = run_cli({"doubly", "4", "--kind", "top-two", "--mode", "brute"});
  EXPECT_EQ(r.out, "2 3 2\n4 3\n2\n");
  r = run_cli({"doubly", "5", "--kind", "top-bottom", "--mode", "both"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\nEQUAL\n"), std::string::npos);
  EXPECT_EQ(r.out.find("DIFF"), std::string::npos);
}

TEST(Cli, OnlyIFiltersRows) {
  auto r = run_cli({"doubly", "4", "--kind", "top-bottom", "--only-i", "2", "--format", "csv"});
  EXPECT_EQ(r.out, "n,i,j,value\n4,2,1,2\n4,2,2,4\n4,2,3,5\n4,2,4,3\n");
  r = run_cli({"refined", "4", "--only-i", "9", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["entries"].empty());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"count", "6", "--brute", "--inject-fault"}).code, 1);
  EXPECT_EQ(run_cli({"refined", "5", "--mode", "both", "--inject-fault"}).code, 1);
  EXPECT_EQ(run_cli({"verify", "--n-max", "4", "--inject-fault"}).code, 1);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"count"}).code, 2);
  EXPECT_EQ(run_cli({"count", "0"}).code, 2);
  EXPECT_EQ(run_cli({"count", "9", "--brute"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--n-max", "8"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--suites", "bogus"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--tol", "0"}).code, 2);
  EXPECT_EQ(run_cli({"refined", "4", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"partition", "2", "--xs", "0", "--ys", "0,0"}).code, 2);
  EXPECT_EQ(run_cli({"partition", "2", "--xs", "0,0", "--ys", "0,0", "--eta", "0"}).code, 2);
  EXPECT_EQ(run_cli({"refined", "4", "-o", "/nonexistent-dir/x/out.txt"}).code, 3);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, VerifyReportsSkipsAndIsReproducible) {
  const auto first = run_cli({"verify", "--n-max", "2"});
  ASSERT_EQ(first.code, 0) << first.err;
  const auto doc = nlohmann::json::parse(first.out);
  EXPECT_EQ(doc["seed"], kDefaultSeed);
  EXPECT_TRUE(doc["passed"].get<bool>());
  bool saw_skip = false;
  for (const auto& item : doc["results"])
    if (item["status"] == "skip") {
      saw_skip = true;
      EXPECT_TRUE(item.contains("note"));
    }
  EXPECT_TRUE(saw_skip);
  EXPECT_EQ(run_cli({"verify", "--n-max", "2"}).out, first.out);

  const auto a = run_cli({"verify", "--n-max", "4", "--suites", "ice", "--seed", "7"});
  const auto b = run_cli({"verify", "--n-max", "4", "--suites", "ice", "--seed", "7"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto text = run_cli({"verify", "--n-max", "3", "--format", "text"});
  EXPECT_NE(text.out.find("ALL PASS"), std::string::npos);
}

TEST(Cli, PartitionMatchesClosedForm) {
  const double x1 = 0.1, x2 = -0.2, y1 = 0.05, y2 = 0.3;
  const double closed = phi(x1 - y1) * phi(x2 - y2) + phi(y2 - x1) * phi(y1 - x2);
  const auto r = run_cli({"partition", "2", "--xs", "0.1,-0.2", "--ys", "0.05,0.3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(r.out), closed, 1e-10);
  EXPECT_EQ(run_cli({"partition", "3", "--xs", "0,0,0", "--ys", "0,0,0"}).out, "7.00000000000\n");
}

TEST(Cli, CacheFileIsReusedAcrossRuns) {
  TempDir dir;
  const auto path = (dir / "alpha.cache").string();
  const auto first = run_cli({"--cache", path, "doubly", "6", "--mode", "brute"});
  ASSERT_EQ(first.code, 0);
  EXPECT_TRUE(fs::exists(path));
  const auto second = run_cli({"--cache", path, "doubly", "6", "--mode", "brute"});
  EXPECT_EQ(second.out, first.out);
  EXPECT_NE(second.err.find(" 0 misses"), std::string::npos) << second.err;
  EXPECT_EQ(first.err.find(" 0 misses"), std::string::npos) << first.err;

  const auto info = run_cli({"--cache", path, "cache", "info"});
  EXPECT_NE(info.out.find("ASMENUM-ALPHA-CACHE v1"), std::string::npos);

  write_file(path, "ASMENUM-ALPHA-CACHE v9\n0\n");
  const auto stale = run_cli({"--cache", path, "refined", "5", "--mode", "brute"});
  EXPECT_EQ(stale.code, 0);
  EXPECT_NE(stale.err.find("warning"), std::string::npos);
  EXPECT_EQ(slurp(path).rfind("ASMENUM-ALPHA-CACHE v1\n", 0), 0u);

  EXPECT_EQ(run_cli({"--cache", path, "cache", "clear"}).code, 0);
  EXPECT_FALSE(fs::exists(path));
  EXPECT_EQ(run_cli({"cache", "info"}).code, 2);
}

TEST(Cli, OutputFileMatchesStdout) {
  TempDir dir;
  const auto path = (dir / "b.json").string();
  const auto direct = run_cli({"doubly", "5", "--kind", "top-bottom", "--format", "json"});
  ASSERT_EQ(run_cli({"doubly", "5", "--kind", "top-bottom", "--format", "json", "-o", path}).code,
            0);
  EXPECT_EQ(slurp(path), direct.out);
}
