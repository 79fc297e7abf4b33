#include "doctest.h"

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed binary with the given arguments, keeping stdout and
// discarding stderr (usage text from flag errors).
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(KXVAL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("value and epsilon") {
  RunResult v = run_cli(
      "value --ctx tadic:QQ --val 'pair:t^(1/2):3/2' --poly 'X^2'");
  CHECK(v.exit_code == 0);
  CHECK(v.out == "1\n");

  RunResult tr = run_cli(
      "value --ctx tadic:QQ --val 'trunc[X^2 - t]:pair:t^(1/2):3/2' "
      "--poly 'X^2'");
  CHECK(tr.exit_code == 0);
  CHECK(tr.out == "1\n");

  RunResult e = run_cli(
      "epsilon --ctx tadic:QQ --val 'pair:t^(1/2):3/2' --poly 'X^2 - t'");
  CHECK(e.exit_code == 0);
  CHECK(e.out == "3/2\n");

  RunResult zero = run_cli(
      "value --ctx tadic:QQ --val 'gauss:0' --poly '0'");
  CHECK(zero.exit_code == 0);
  CHECK(zero.out == "inf\n");
}

TEST_CASE("expansion") {
  RunResult r = run_cli(
      "expand --ctx tadic:QQ --poly 'X^3 + t' --q 'X^2 - t'");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"key\""));
  CHECK(contains(r.out, "\"parts\""));
  CHECK(contains(r.out, "t*X + t"));
  CHECK(contains(r.out, "\"X\""));
}

TEST_CASE("polygon formats") {
  RunResult j = run_cli(
      "polygon --ctx tadic:QQ --val 'pair:t^(1/2):3/2' --poly 'X^2 - t'");
  CHECK(j.exit_code == 0);
  CHECK(contains(j.out, "\"vertices\""));
  CHECK(contains(j.out, "\"3/2\""));
  CHECK(contains(j.out, "\"1/2\""));

  RunResult a = run_cli(
      "polygon --ctx tadic:QQ --val 'pair:t^(1/2):3/2' --poly 'X^2 - t' "
      "--format ascii");
  CHECK(a.exit_code == 0);
  CHECK(contains(a.out, "value range [0, 2]"));
  CHECK(contains(a.out, "+---"));

  RunResult s = run_cli(
      "polygon --ctx tadic:QQ --val 'gauss:0' --poly 'X*(X - t^-1)' "
      "--format svg");
  CHECK(s.exit_code == 0);
  CHECK(contains(s.out, "<svg"));
  CHECK(contains(s.out, "polyline"));

  RunResult bad = run_cli(
      "polygon --ctx tadic:QQ --val 'gauss:0' --poly 'X' --format png");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("diskoid decomposition") {
  RunResult r = run_cli(
      "diskoid --ctx tadic:QQ --poly 'X^2 - t' --rho 2 "
      "--roots 't^(1/2), -t^(1/2)'");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"balls\""));
  CHECK(contains(r.out, "\"3/2\""));
}

TEST_CASE("verification fixtures") {
  for (const std::string name : {"product-gap", "product-rule",
                                 "pair-equivalence", "conjugate-invariance",
                                 "root-matching"}) {
    CAPTURE(name);
    RunResult r = run_cli("verify " + name + " --ctx tadic:QQ --a 't^-1'");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"status\": \"pass\""));
    CHECK(!contains(r.out, "\"status\": \"fail\""));
  }
}

TEST_CASE("verification suites") {
  RunResult r = run_cli("verify --suite axioms --seed 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"status\": \"pass\""));
  CHECK(!contains(r.out, "\"status\": \"fail\""));
  CHECK(contains(r.out, "\"seed\""));
  CHECK(contains(r.out, "\"corpus\""));

  RunResult again = run_cli("verify --suite axioms --seed 3");
  CHECK(again.out == r.out); // byte-identical reruns

  RunResult unknown = run_cli("verify --suite nonsense --seed 3");
  CHECK(unknown.exit_code == 2);
  CHECK(contains(unknown.out, "unknown_suite"));
}

TEST_CASE("error behavior") {
  RunResult parse = run_cli(
      "value --ctx tadic:QQ --val 'gauss:0' --poly 'X^^2'");
  CHECK(parse.exit_code == 2);
  CHECK(contains(parse.out, "parse_error"));
  CHECK(contains(parse.out, "offset 2"));

  RunResult missing = run_cli("value --ctx tadic:QQ --val 'gauss:0'");
  CHECK(missing.exit_code == 2);

  RunResult no_sub = run_cli("");
  CHECK(no_sub.exit_code == 2);

  RunResult both = run_cli("verify product-gap --suite axioms --ctx tadic:QQ");
  CHECK(both.exit_code == 2);

  RunResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(contains(help.out, "polygon"));
}

} // TEST_SUITE
