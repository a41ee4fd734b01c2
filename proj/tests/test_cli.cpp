#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

// drives the installed binary over its documented surface: exit codes,
// golden bytes, format switches and the determinism promise.

namespace {

struct run_result {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool exists(const std::string& path) { return std::ifstream(path).good(); }

run_result run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  std::string base = "/tmp/flopcomb_cli_t" + std::to_string(++counter);
  std::string outp = base + ".out", errp = base + ".err";
  std::string cmd = env_prefix + "\"" FLOPCOMB_CLI_BIN "\" " + args + " > " + outp + " 2> " + errp;
  int rc = std::system(cmd.c_str());
  run_result r;
  if (WIFEXITED(rc)) r.code = WEXITSTATUS(rc);
  r.out = slurp(outp);
  r.err = slurp(errp);
  std::remove(outp.c_str());
  std::remove(errp.c_str());
  return r;
}

} // namespace

TEST_CASE("mutclass dot output matches the golden file") {
  run_result r = run_cli("mutclass --diagram E7~ --marked 2,3,5,6,7 --format dot");
  CHECK(r.code == 0);
  CHECK(r.out == slurp(std::string(FLOPCOMB_GOLDEN_DIR) + "/e7_mutclass.dot"));
}

TEST_CASE("mutclass json on the one node class") {
  run_result r = run_cli("mutclass --diagram A1~ --marked \"\" --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 1);
  REQUIRE(j["arrows"].size() == 2);
  for (const auto& a : j["arrows"]) {
    CHECK(a["from"] == 0);
    CHECK(a["to"] == 0);
  }
  CHECK(j["arrows"][0]["label"] == 0);
  CHECK(j["arrows"][1]["label"] == 1);
}

TEST_CASE("improper marked set is rejected") {
  run_result r = run_cli("mutclass --diagram A2~ --marked 0,1,2");
  CHECK(r.code == 2);
  CHECK(r.out.empty());
}

TEST_CASE("chambers listing carries separators and hasse edges") {
  run_result r = run_cli("chambers --diagram A1~ --sector + --box 2 --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 4);
  CHECK(j["chambers"][0]["separating_roots"].empty());
  REQUIRE(j["hasse"].size() == 3);
  int from_principal = 0;
  for (const auto& e : j["hasse"]) {
    CHECK(e["roots"].size() == 1);
    if (e["from"] == 0) ++from_principal;
  }
  CHECK(from_principal == 2);
}

TEST_CASE("chambers rejects box zero") {
  run_result r = run_cli("chambers --diagram A1~ --sector + --box 0");
  CHECK(r.code == 2);
  CHECK(r.out.empty());
}

TEST_CASE("sector zero chamber counts") {
  run_result r = run_cli("chambers --diagram A2~ --sector 0");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 6);
}

TEST_CASE("classify reports the heart variants") {
  run_result alg = run_cli("classify --diagram A1~ --point 1,1");
  REQUIRE(alg.code == 0);
  auto ja = nlohmann::json::parse(alg.out);
  CHECK(ja["variant"] == "algebraic");
  CHECK(ja["display"] == "H");
  CHECK(ja["shift"] == 0);

  run_result semi = run_cli("classify --diagram A2~ --point -1,0,1");
  REQUIRE(semi.code == 0);
  auto js = nlohmann::json::parse(semi.out);
  CHECK(js["variant"] == "semi_geometric");
  CHECK(js["contracted"] == nlohmann::json::array({1}));
  CHECK(js["path"].empty());
}

TEST_CASE("classify rejects the origin") {
  run_result r = run_cli("classify --diagram A1~ --point 0,0");
  CHECK(r.code == 4);
  CHECK(r.out.empty());
}

TEST_CASE("check passes and the injected fault is caught by name") {
  run_result ok = run_cli("check --diagram A1~");
  REQUIRE(ok.code == 0);
  auto j = nlohmann::json::parse(ok.out);
  CHECK(j["status"] == "pass");

  run_result bad = run_cli("check --diagram A1~ --fault-inject");
  CHECK(bad.code == 1);
  auto jb = nlohmann::json::parse(bad.out);
  CHECK(jb["status"] == "fail");
  std::string prop = jb["failed_property"];
  CHECK(prop.find("cartan") != std::string::npos);
}

TEST_CASE("outputs are byte deterministic") {
  run_result a = run_cli("chambers --diagram A2~ --sector 0 --format json");
  run_result b = run_cli("chambers --diagram A2~ --sector 0 --format json");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);

  run_result sa = run_cli("chambers --diagram A2~ --sector + --box 1 --format svg");
  run_result sb = run_cli("chambers --diagram A2~ --sector + --box 1 --format svg");
  REQUIRE(sa.code == 0);
  CHECK(sa.out == sb.out);
  CHECK(sa.out.rfind("<?xml", 0) == 0);
}

TEST_CASE("resource cap from the environment exits three") {
  run_result r = run_cli("chambers --diagram A1~ --sector + --box 3",
                         "FLOPCOMB_MAX_CHAMBERS=3 ");
  CHECK(r.code == 3);
  CHECK(r.out.empty());
}

TEST_CASE("svg needs a drawable dimension") {
  run_result r = run_cli("chambers --diagram D4~ --sector 0 --format svg");
  CHECK(r.code == 2);
  CHECK(r.out.empty());
}

TEST_CASE("csv and dot chamber forms emit") {
  run_result c = run_cli("chambers --diagram A1~ --sector + --box 2 --format csv");
  REQUIRE(c.code == 0);
  CHECK(c.out.rfind("index,sector,path", 0) == 0);
  int lines = 0;
  for (char ch : c.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 5); // header plus four chambers

  run_result d = run_cli("chambers --diagram A1~ --sector + --box 2 --format dot");
  REQUIRE(d.code == 0);
  CHECK(d.out.rfind("digraph chamber_order", 0) == 0);
}

TEST_CASE("out file holds the artifact and failures leave no file") {
  std::string path = "/tmp/flopcomb_cli_artifact.json";
  std::remove(path.c_str());
  run_result direct = run_cli("classify --diagram A1~ --point 1,1");
  run_result filed = run_cli("classify --diagram A1~ --point 1,1 --out " + path);
  REQUIRE(filed.code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(path) == direct.out);
  std::remove(path.c_str());

  run_result bad = run_cli("classify --diagram A1~ --point 0,0 --out " + path);
  CHECK(bad.code == 4);
  CHECK(!exists(path));
}
