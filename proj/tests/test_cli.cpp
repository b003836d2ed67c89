#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "loopcalc/cli.hpp"

using loopcalc::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(LOOPCALC_TEST_DIR) + "/data/" + name; }

std::string golden(const std::string& name) {
  std::ifstream in(std::string(LOOPCALC_TEST_DIR) + "/golden/" + name);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("series text output") {
  Result r = call({"series", "loop(S(3))", "--cap", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 + t^2 + t^4 + t^6\n");
  CHECK(call({"series", "P(3,3,1)", "--field", "f3", "--cap", "5", "--reduced"}).out == "t^2 + t^3\n");
}

TEST_CASE("hilbert oracle") {
  Result r = call({"hilbert", "--gens", "x:1,y:1,z:1,w:1", "--relators", "sum(com(x,y),com(z,w))", "--cap", "5", "--mode",
                   "oracle"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 + 4t + 15t^2 + 56t^3 + 209t^4 + 780t^5\n");
  Result both = call({"hilbert", "--gens", "x:2,y:2", "--relators", "ad(2;x,y)", "--cap", "10", "--mode", "both"});
  CHECK(both.code == 0);
  CHECK(both.out.find("agree") != std::string::npos);
  // the formula needs an ad relator
  CHECK(call({"hilbert", "--gens", "x:1,y:1", "--relators", "x*y", "--mode", "formula"}).code == 2);
}

TEST_CASE("normalize with a tab-separated trace") {
  Result r = call({"normalize", "sus(S(2))", "--trace"});
  CHECK(r.code == 0);
  CHECK(r.out == "R1\tsus(S(2))\tS(3)\nS(3)\n");
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"series", "S(2", "--cap", "4"}).code == 2);
  CHECK(call({"series", "S(2)", "--field", "f4"}).code == 2);
  CHECK(call({"series", "S(2)", "--cap", "-1"}).code == 2);
  CHECK(call({"verify"}).code == 2);
  CHECK(call({"verify", "NOPE"}).code == 2);
  CHECK(call({"verify", "MTYPEALT", "--level", "medium"}).code == 2);
  CHECK(call({"--help"}).code == 0);
  Result budget = call({"hilbert", "--gens", "x:1,y:1", "--relators", "com(x,y)", "--cap", "12", "--budget", "100"});
  CHECK(budget.code == 3);
  CHECK(budget.err.find("MatrixBudgetExceeded") != std::string::npos);
  Result fail = call({"verify", "CONNSUM", "--instance", data("connsum_wrong_y.json")});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("FAIL CONNSUM") != std::string::npos);
  CHECK(call({"verify", "MTYPEALT", "--instance", data("mtypealt_222.json"), "--cap", "12", "--budget", "50"}).code == 3);
}

TEST_CASE("verify --all --level quick passes") {
  Result r = call({"verify", "--all", "--level", "quick"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("polyprod") {
  Result r = call({"polyprod", "--complex", data("triangle_points.json"), "--spaces", "S(2),S(2),S(2)", "--cap", "8",
                   "--missing-faces", "--add-faces", data("three_edges.json"), "--sigma-a"});
  CHECK(r.code == 0);
  CHECK(r.out == "series: 3t^2\n"
                 "missing faces: {1,2} {1,3} {2,3}\n"
                 "with added faces: 3t^2 + 3t^4\n"
                 "difference: 3t^4\n"
                 "ΣA = sus(wedge(smash(S(2),S(2)),smash(S(2),S(2)),smash(S(2),S(2))))\n"
                 "ΣA series: 3t^5\n");
}

TEST_CASE("golden JSON output") {
  struct Case {
    const char* file;
    std::vector<std::string> args;
  };
  const Case cases[] = {
      {"series_loop_s3.json", {"series", "loop(S(3))", "--cap", "6", "--output", "json"}},
      {"normalize_hsm.json", {"normalize", "hsm(loop(S(3)),S(4))", "--cap", "11", "--trace", "--output", "json"}},
      {"hilbert_both.json", {"hilbert", "--gens", "x:2,y:2", "--relators", "ad(2;x,y)", "--cap", "10", "--mode", "both", "--output", "json"}},
      {"polyprod_edges.json",
       {"polyprod", "--complex", data("triangle_points.json"), "--spaces", "S(2),S(2),S(2)", "--cap", "8", "--add-faces",
        data("three_edges.json"), "--output", "json"}},
      {"verify_mtypealt.json", {"verify", "MTYPEALT", "--instance", data("mtypealt_222.json"), "--cap", "10", "--output", "json"}},
      {"verify_pdex_quick.json", {"verify", "PDEX", "--output", "json"}},
  };
  for (const Case& c : cases) {
    INFO(c.file);
    Result r = call(c.args);
    CHECK(r.code == 0);
    CHECK(r.out == golden(c.file));
    // JSON stays parseable
    CHECK(nlohmann::json::accept(r.out));
  }
}
