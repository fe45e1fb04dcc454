// End-to-end checks of the installed command line: exit codes, report
// formats, single-instance mode, and byte-stable replay.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef QPB_CLI_PATH
#error "QPB_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct CommandResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

CommandResult run(const std::string& args) {
  const std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv(
                                                                  "TMPDIR")
                                                            : "/tmp") +
                          "/qpb_cli_out.txt";
  const std::string cmd =
      std::string(QPB_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::stringstream buf;
  buf << in.rdbuf();
  int code = -1;
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
  return CommandResult{code, buf.str()};
}

std::vector<std::string> body_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] != '{') continue;  // summary text
    if (line.find("\"type\":\"header\"") != std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_CASE("usage and config errors exit with code 2") {
  CHECK(run("verify main --case nonsense --trials 2").exit_code == 2);
  CHECK(run("verify main --case iii --trials 0").exit_code == 2);
  CHECK(run("verify main --case iii --bad-flag").exit_code == 2);

  CommandResult bad_regime =
      run("verify main --case iii --q 0.5 --r 2 --trials 1 --dims 2");
  CHECK(bad_regime.exit_code == 2);
  CHECK(bad_regime.output.find("regime") != std::string::npos);
}

TEST_CASE("small verification run exits 0 and emits one line per trial") {
  CommandResult r = run(
      "verify main --case iii --dims 2 --trials 2 --seed 9 --q 1.5 --r 2");
  CHECK(r.exit_code == 0);
  CHECK(body_lines(r.output).size() >= 2);
  CHECK(r.output.find("result: PASS") != std::string::npos);
}

TEST_CASE("csv format has the documented column order") {
  CommandResult r = run(
      "verify variant --direction convex --dims 2 --trials 1 --seed 1 "
      "--format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("name,case,q,r,dim,seed,trial,lhs,rhs,slack,holds,tol")
        != std::string::npos);
}

TEST_CASE("--out writes the report file") {
  const std::string path = "/tmp/qpb_cli_report.jsonl";
  std::remove(path.c_str());
  CommandResult r = run(
      "verify entropy --suite limits --dims 2 --trials 2 --seed 4 --out " +
      path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(body_lines(buf.str()).size() == 2);
}

TEST_CASE("replay is byte-identical apart from the header timestamp") {
  const std::string args =
      "verify main --case v --dims 2,3 --trials 3 --seed 31337";
  CommandResult a = run(args);
  CommandResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(body_lines(a.output) == body_lines(b.output));
}

TEST_CASE("single-instance mode reads the shared matrix JSON format") {
  const std::string ma = "/tmp/qpb_cli_a.json";
  const std::string mb = "/tmp/qpb_cli_b.json";
  {
    std::ofstream fa(ma);
    fa << R"({"dim": 2, "re": [[0.3, 0.1], [0.1, 0.5]]})";
    std::ofstream fb(mb);
    fb << R"({"dim": 2, "re": [[0.1, 0.0], [0.0, -0.1]]})";
  }
  CommandResult r = run("verify main --case iii --q 1.5 --r 2 --matrix-a " +
                        ma + " --matrix-b " + mb);
  CHECK(r.exit_code == 0);
  CHECK(body_lines(r.output).size() == 1);

  {
    std::ofstream fa(ma);
    fa << R"({"dim": 2, "re": [[0.3, 0.9], [0.1, 0.5]]})";
  }
  CommandResult bad = run("verify main --case iii --q 1.5 --r 2 --matrix-a " +
                          ma + " --matrix-b " + mb);
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("Hermitian") != std::string::npos);
}

TEST_CASE("--print-grids lists every default table") {
  CommandResult r = run("--print-grids");
  CHECK(r.exit_code == 0);
  for (const char* needle :
       {"main case i", "main case v", "variant convex", "convexity G",
        "entropy bound", "frechet windows"}) {
    CHECK(r.output.find(needle) != std::string::npos);
  }
}
