#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qgr/cli.hpp"
#include "qgr/serialize.hpp"

using namespace qgr;

namespace {

struct CliResult {
  int status;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_cli(std::move(args), out, err);
  return CliResult{status, out.str(), err.str()};
}

/// Writes content to a unique temp file and removes it on scope exit.
class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = "qgr_test_" + std::to_string(counter++) + ".poly";
    std::ofstream f(path_);
    f << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("build emits the representation as JSON") {
  TempFile conic("x0*x2 - x1^2\n");
  auto r = run({"build", "--input", conic.path()});
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["dims"] == nlohmann::json({{"1", 1}, {"2", 6}, {"3", 3}}));
  CHECK(j["vertices"] == nlohmann::json({1, 2, 3}));
  CHECK(j["n"] == 2);
  CHECK(j["d"] == 2);
  // The emitted document reloads into the construction it came from.
  auto loaded = representation_from_json(j);
  auto direct = build_representation(parse_system("x0*x2 - x1^2"));
  CHECK(loaded.rep.matrices == direct.rep.matrices);
  CHECK(loaded.e == direct.e);
}

TEST_CASE("point counting for the bare projective line") {
  TempFile empty("ambient n=1\n");
  auto r = run({"points", "--input", empty.path(), "--primes", "7"});
  CHECK(r.status == 0);
  CHECK(r.out.find("q=7 count=8") != std::string::npos);
}

TEST_CASE("verify text output carries one line per prime and a summary") {
  TempFile conic("x0*x2 - x1^2\n");
  auto r = run({"verify", "--input", conic.path(), "--primes", "2,3,5"});
  CHECK(r.status == 0);
  CHECK(r.out.find("q=2 X=3 Gr=3 bijection=ok endo=1") != std::string::npos);
  CHECK(r.out.find("q=3 X=4 Gr=4 bijection=ok endo=1") != std::string::npos);
  CHECK(r.out.find("q=5 X=6 Gr=6 bijection=ok endo=1") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("verify json output is an array of stable report objects") {
  TempFile conic("x0*x2 - x1^2\n");
  auto r = run({"verify", "--input", conic.path(), "--primes", "3,5", "--format", "json"});
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["q"] == 3);
  CHECK(j[0]["variety_count"] == 4);
  CHECK(j[0]["grassmannian_count"] == 4);
  CHECK(j[0]["bijection_ok"] == true);
  CHECK(j[0]["endo_dim"] == 1);
  CHECK(j[0]["warnings"].empty());
  // Key order is part of the contract.
  CHECK(r.out.find("\"q\"") < r.out.find("\"variety_count\""));
  CHECK(r.out.find("\"variety_count\"") < r.out.find("\"grassmannian_count\""));
  CHECK(r.out.find("\"grassmannian_count\"") < r.out.find("\"bijection_ok\""));
  CHECK(r.out.find("\"bijection_ok\"") < r.out.find("\"endo_dim\""));
  // Summary goes to the error stream in json mode.
  CHECK(r.err.find("PASS") != std::string::npos);
}

TEST_CASE("identical invocations are byte-identical") {
  TempFile conic("x0*x2 - x1^2\n");
  for (std::vector<std::string> args :
       {std::vector<std::string>{"build", "--input", conic.path()},
        std::vector<std::string>{"verify", "--input", conic.path(), "--primes", "2,3",
                                 "--format", "json"},
        std::vector<std::string>{"grass", "--input", conic.path(), "--primes", "3",
                                 "--format", "json"}}) {
    auto first = run(args);
    auto second = run(args);
    CHECK(first.status == second.status);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("grass subcommand lists subrepresentation pairs") {
  TempFile conic("x0*x2 - x1^2\n");
  auto text = run({"grass", "--input", conic.path(), "--primes", "3"});
  CHECK(text.status == 0);
  CHECK(text.out.find("q=3 count=4") != std::string::npos);
  CHECK(text.out.find("u2=") != std::string::npos);
  auto json_run =
      run({"grass", "--input", conic.path(), "--primes", "3", "--format", "json"});
  auto j = nlohmann::json::parse(json_run.out);
  CHECK(j[0]["count"] == 4);
  CHECK(j[0]["points"].size() == 4);
  CHECK(j[0]["points"][0].contains("u2"));
  CHECK(j[0]["points"][0].contains("u3"));
}

TEST_CASE("endo subcommand reports the dimension over Q and chosen primes") {
  TempFile conic("x0*x2 - x1^2\n");
  auto r = run({"endo", "--input", conic.path(), "--primes", "3,5"});
  CHECK(r.status == 0);
  CHECK(r.out.find("field=Q endo=1") != std::string::npos);
  CHECK(r.out.find("field=F_3 endo=1") != std::string::npos);
  CHECK(r.out.find("field=F_5 endo=1") != std::string::npos);
}

TEST_CASE("output lands in a file when requested") {
  TempFile conic("x0*x2 - x1^2\n");
  std::string out_path = "qgr_test_report.json";
  auto r = run({"verify", "--input", conic.path(), "--primes", "3", "--format", "json",
                "--output", out_path});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream f(out_path);
  REQUIRE(f.good());
  auto j = nlohmann::json::parse(f);
  CHECK(j[0]["variety_count"] == 4);
  std::remove(out_path.c_str());
}

TEST_CASE("usage and validation failures exit with status 1") {
  TempFile conic("x0*x2 - x1^2\n");
  CHECK(run({"points", "--input", conic.path(), "--primes", "4"}).status == 1);
  CHECK(run({"points", "--input", conic.path(), "--primes", "101"}).status == 1);
  CHECK(run({"points", "--input", conic.path()}).status == 1);  // primes required
  CHECK(run({"verify", "--input", "no_such_file.poly", "--primes", "3"}).status == 1);
  CHECK(run({"bogus"}).status != 0);

  auto missing = run({"verify", "--input", "no_such_file.poly", "--primes", "3"});
  CHECK(missing.err.find("no_such_file.poly") != std::string::npos);
}

TEST_CASE("parse errors are reported with file and position") {
  TempFile bad("x0*x2 -\n");
  auto r = run({"build", "--input", bad.path()});
  CHECK(r.status == 1);
  CHECK(r.err.find(bad.path() + ":1:") != std::string::npos);
}

TEST_CASE("a failing report renders as FAIL") {
  VerificationReport failing;
  failing.q = 3;
  failing.variety_count = 4;
  failing.grassmannian_count = 5;
  failing.bijection_ok = false;
  failing.endo_dim = 1;
  std::ostringstream out;
  emit_report({failing}, Format::text, out);
  CHECK(out.str().find("bijection=fail") != std::string::npos);
  CHECK(out.str().find("FAIL") != std::string::npos);
}

TEST_CASE("an empty report list renders explicitly") {
  std::ostringstream text, json_out;
  emit_report({}, Format::text, text);
  CHECK(text.str() == "no checks run\n");
  emit_report({}, Format::json, json_out);
  CHECK(nlohmann::json::parse(json_out.str()).empty());
}

TEST_CASE("warnings appear in the text report") {
  TempFile vanishing("3*x0*x1\n");
  auto r = run({"verify", "--input", vanishing.path(), "--primes", "3"});
  CHECK(r.status == 0);
  CHECK(r.out.find("warning: equation 1 vanishes identically mod 3") != std::string::npos);
}

TEST_CASE("help is available and succeeds") {
  auto r = run({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("build") != std::string::npos);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("command-line mistakes exit with status 1") {
  TempFile in("x0*x2 - x1^2\n");
  SUBCASE("unexpected argument") {
    auto r = run({"build", "--input", in.path(), "--primes", "3"});
    CHECK(r.status == 1);
    CHECK(r.err.find("--primes") != std::string::npos);
  }
  SUBCASE("unknown subcommand") {
    auto r = run({"frobnicate"});
    CHECK(r.status == 1);
  }
  SUBCASE("missing required input flag") {
    auto r = run({"points", "--primes", "3"});
    CHECK(r.status == 1);
  }
}
