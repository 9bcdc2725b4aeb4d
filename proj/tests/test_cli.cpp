#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "asf/json_io.hpp"

namespace {

struct CmdResult {
  int status = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  std::string cmd = std::string(ASF_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult res;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
  int rc = pclose(pipe);
  if (WIFEXITED(rc)) res.status = WEXITSTATUS(rc);
  return res;
}

std::string data_file(const std::string& name) {
  return std::string(ASF_TEST_DATA_DIR) + "/" + name;
}

const std::string kSolveA2 =
    R"({"type":"A2","h":["1","3"],"E":{"e":{"0":"1","1":"1"},"h":{}}})";

}  // namespace

TEST_CASE("cli: info emits a summary and respects the format flag") {
  CmdResult r = run_cli("info A2 2>/dev/null");
  REQUIRE(r.status == 0);
  asf::json j = asf::json::parse(r.out);
  CHECK(j["type"] == "A2");
  CHECK(j["rank"] == 2);
  CHECK(j["positive_roots"] == 3);
  CHECK(j["max_height"] == 2);
  CHECK(j["dimension"] == 8);
  CHECK(j["weyl_order"] == "6");
  CHECK(j["weyl_enumerable"] == true);

  CmdResult t = run_cli("--format text info A2 2>/dev/null");
  REQUIRE(t.status == 0);
  CHECK(t.out.find("weyl order:     6") != std::string::npos);
  CmdResult t2 = run_cli("info A2 --format text 2>/dev/null");
  CHECK(t2.out == t.out);

  CmdResult e8 = run_cli("info E8 2>/dev/null");
  REQUIRE(e8.status == 0);
  asf::json j8 = asf::json::parse(e8.out);
  CHECK(j8["weyl_order"] == "696729600");
  CHECK(j8["weyl_enumerable"] == false);
}

TEST_CASE("cli: unknown types and missing subcommands are usage errors") {
  CHECK(run_cli("info Z9 2>/dev/null").status == 2);
  CHECK(run_cli("info 2>/dev/null").status == 2);
  CHECK(run_cli("2>/dev/null").status == 2);
  CHECK(run_cli("frobnicate A2 2>/dev/null").status == 2);
  CHECK(run_cli("--help >/dev/null 2>&1").status == 0);
}

TEST_CASE("cli: solve reads a file or stdin and reports the solved sequence") {
  CmdResult r = run_cli("solve A2 --in " + data_file("solve_a2.json") + " 2>/dev/null");
  REQUIRE(r.status == 0);
  asf::json j = asf::json::parse(r.out);
  CHECK(j["omega_check"] == true);
  REQUIRE(j["E_seq"].size() == 2);
  CHECK(j["E_seq"][1]["e"]["2"] == "1/4");
  CHECK(j["phi_inverse"].contains("-1"));
  CHECK(j["phi_inverse"].contains("-2"));

  CmdResult piped = run_cli("solve A2 2>/dev/null <<'EOF'\n" + kSolveA2 + "\nEOF\n");
  REQUIRE(piped.status == 0);
  CHECK(asf::json::parse(piped.out) == j);

  CmdResult text = run_cli("--format text solve A2 --in " + data_file("solve_a2.json") +
                           " 2>/dev/null");
  REQUIRE(text.status == 0);
  CHECK(text.out.find("omega check:  true") != std::string::npos);
}

TEST_CASE("cli: malformed solve inputs exit with the usage code") {
  std::string bad_h = R"({"type":"A2","h":["2","-2"],"E":{"e":{"0":"1"},"h":{}}})";
  CmdResult r = run_cli("solve A2 2>&1 1>/dev/null <<'EOF'\n" + bad_h + "\nEOF\n");
  CHECK(r.status == 2);
  CHECK(r.out.find("not regular") != std::string::npos);

  CHECK(run_cli("solve B2 --in " + data_file("solve_a2.json") + " >/dev/null 2>&1").status == 2);
  CHECK(run_cli("solve A2 >/dev/null 2>&1 <<'EOF'\nnot json\nEOF\n").status == 2);
  CHECK(run_cli("solve A2 --in /nonexistent.json >/dev/null 2>&1").status == 2);
}

TEST_CASE("cli: census lists every Weyl chamber cell") {
  CmdResult r = run_cli("census A2 2>/dev/null");
  REQUIRE(r.status == 0);
  asf::json j = asf::json::parse(r.out);
  REQUIRE(j.size() == 6);
  CHECK(j[0] == asf::json({{"fibre_dim", 3}, {"length", 0}, {"w", "e"}}));
  for (std::size_t i = 0; i < j.size(); ++i) {
    CHECK(j[i]["length"].get<int>() + j[i]["fibre_dim"].get<int>() == 3);
    if (i > 0) CHECK(j[i - 1]["length"].get<int>() <= j[i]["length"].get<int>());
  }
  CmdResult text = run_cli("--format text census A2 2>/dev/null");
  CHECK(text.out.find("total: 6") != std::string::npos);

  CHECK(run_cli("census F4 --cap 100 >/dev/null 2>&1").status == 2);
}

TEST_CASE("cli: components counts box labels and orbits") {
  CmdResult r = run_cli("components A1 --box 1 2>/dev/null");
  REQUIRE(r.status == 0);
  asf::json j = asf::json::parse(r.out);
  CHECK(j["box"] == 1);
  CHECK(j["labels"] == 6);
  CHECK(j["orbits"] == 2);
  CHECK(j["type"] == "A1");

  CHECK(run_cli("components A1 >/dev/null 2>&1").status == 2);
}

TEST_CASE("cli: verify is deterministic for a fixed seed") {
  CmdResult a = run_cli("verify A2 --trials 5 --seed 42 2>/dev/null");
  CmdResult b = run_cli("verify A2 --trials 5 --seed 42 2>/dev/null");
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  asf::json j = asf::json::parse(a.out);
  CHECK(j["pass"] == true);
  CHECK(j["config"]["seed"] == 42);
  CHECK(j["config"]["trials"] == 5);

  CmdResult text = run_cli("--format text verify A2 --trials 5 --seed 42 2>/dev/null");
  REQUIRE(text.status == 0);
  CHECK(text.out.find("PASS (A2, 5 trials, seed 42)") != std::string::npos);

  CHECK(run_cli("verify A2 --trials 0 >/dev/null 2>&1").status == 2);
}
