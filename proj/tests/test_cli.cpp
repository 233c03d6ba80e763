#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcgcert/cli.hpp"
#include "mcgcert/word.hpp"

using namespace mcgcert;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("power sugar expansion") {
  auto same = [](const std::string& sugared, const std::string& plain) {
    return parse_word(expand_power_sugar(sugared)) == parse_word(plain);
  };
  CHECK(same("(a1 b)^2", "a1 b a1 b"));
  CHECK(same("(a b^-1)^-1", "b a^-1"));
  CHECK(same("c (a b)^2 d", "c a b a b d"));
  CHECK(same("((a)^2 b)^2", "a a b a a b"));
  CHECK(same("(a b)^0", ""));
  CHECK(same("(a)", "a"));
  CHECK(same("x^2 y", "x x y"));
  CHECK_THROWS(expand_power_sugar("(a b"));
  CHECK_THROWS(expand_power_sugar("a b)"));
  CHECK_THROWS(expand_power_sugar("(a)^"));
}

TEST_CASE("nf prints the fundamental form") {
  RunResult r = run({"nf", "--group", "d4", "--word", "(a1 a2 a3 b)^3"});
  CHECK(r.code == 0);
  CHECK(r.out == "Δ^1 · []\n");

  RunResult atom = run({"nf", "--group", "b4", "--word", "a1"});
  CHECK(atom.code == 0);
  CHECK(atom.out == "Δ^0 · [a1]\n");
}

TEST_CASE("nf json output") {
  RunResult r = run({"nf", "--group", "b4", "--word", "(a1 b a2)^4",
                     "--format", "json"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["inf"] == 2);
  CHECK(j["factors"].empty());
}

TEST_CASE("verify words reports certificate counts") {
  RunResult r = run({"verify", "words"});
  CHECK(r.code == 0);
  CHECK(r.out.find("certificates: 1, failed: 0") != std::string::npos);
}

TEST_CASE("verify row emits a json certificate") {
  RunResult r = run({"verify", "row", "--g", "1", "--b", "1", "--n", "1",
                     "--format", "json"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["claim"] == "PMod(1,1,1) ≅ B4");
  CHECK(j["status"] == "pass");
  CHECK(j["steps"].is_array());
  CHECK(j["metadata"].contains("conventions"));
}

TEST_CASE("verify centers passes") {
  RunResult r = run({"verify", "centers"});
  CHECK(r.code == 0);
  CHECK(r.out.find("status: PASS") != std::string::npos);
}

TEST_CASE("verify ht passes") {
  RunResult r = run({"verify", "ht"});
  CHECK(r.code == 0);
}

TEST_CASE("reports can be written to a file") {
  std::string path = "cli_out_test.json";
  RunResult r = run({"verify", "row", "--g", "1", "--b", "0", "--n", "2",
                     "--format", "json", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  nlohmann::json j = nlohmann::json::parse(f);
  CHECK(j["status"] == "pass");
  f.close();
  std::remove(path.c_str());
}

TEST_CASE("rep evaluates a word to a matrix") {
  RunResult r = run({"rep", "--group", "b4", "--word", "a1", "--format", "json"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["dim"] == 6);

  RunResult text = run({"rep", "--group", "b3", "--word", "s1 s2"});
  CHECK(text.code == 0);
  CHECK(text.out.find('[') != std::string::npos);
}

TEST_CASE("rep verifies a row matrix model") {
  RunResult r = run({"rep", "--g", "1", "--b", "1", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("certificates: 1, failed: 0") != std::string::npos);
}

TEST_CASE("abelianize reports matching invariants") {
  RunResult r = run({"abelianize", "--g", "1", "--b", "3", "--n", "0",
                     "--format", "json"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["triple"] == "(1,3,0)");
  CHECK(j["source"] == "Z^3");
  CHECK(j["target"] == "Z^3");
  CHECK(j["match"].get<bool>());

  RunResult t = run({"abelianize", "--g", "0", "--b", "2", "--n", "1"});
  CHECK(t.code == 0);
  CHECK(t.out.find("match: yes") != std::string::npos);
}

TEST_CASE("print-presentation lists the generators") {
  RunResult r = run({"print-presentation", "--g", "1", "--b", "2", "--n", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("gens: b, a1, a2, c12, c21") != std::string::npos);

  RunResult j = run({"print-presentation", "--g", "0", "--b", "2", "--n", "1",
                     "--format", "json"});
  REQUIRE(j.code == 0);
  nlohmann::json jj = nlohmann::json::parse(j.out);
  CHECK(jj["gens"].is_array());
  CHECK(jj["relators"].is_array());
}

TEST_CASE("usage errors exit with code two") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"nf", "--group", "b4"}).code == 2);
  CHECK(run({"verify", "row", "--g", "1"}).code == 2);

  RunResult bad = run({"nf", "--group", "zz", "--word", "a"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") != std::string::npos);

  RunResult badword = run({"nf", "--group", "b4", "--word", "(a1"});
  CHECK(badword.code == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"verify", "--help"}).code == 0);
}
