#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is dropped unless merge_stderr.
RunResult run_cli(const std::string& args, bool merge_stderr = false,
                  const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + " \"" CARTQEC_CLI_PATH "\" " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) {
  return read_file(std::string(CARTQEC_GOLDEN_DIR "/") + name);
}

}  // namespace

TEST_CASE("table output matches the golden files") {
  struct Case {
    const char* args;
    const char* file;
  };
  const Case cases[] = {
      {"table --p 2 --r 3,3 --delta 3..8 --format csv", "table_q8_r33.csv"},
      {"table --p 5 --r 1,1,1,1 --delta 3..6 --format csv", "table_q5_r1111.csv"},
      {"table --p 2 --r 4,4,2 --delta 3..17 --format csv", "table_q16_r442.csv"},
      {"table --p 2 --r 3,3,3,1 --delta 3..9 --q 8 --format csv", "table_q8_r3331.csv"},
      {"table --p 2 --r 3,3 --delta 3..8", "table_q8_r33.txt"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.args);
    const auto result = run_cli(c.args);
    CHECK(result.exit_code == 0);
    CHECK(result.out == golden(c.file));
  }
}

TEST_CASE("grid output matches the golden file") {
  const auto result = run_cli("grid --p 3 --r 2,1");
  CHECK(result.exit_code == 0);
  CHECK(result.out == golden("grid_p3_r21.txt"));
}

TEST_CASE("byte-identical reruns") {
  const std::string args = "table --p 2 --r 4,4,2 --delta 3..17 --format json";
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK_FALSE(first.out.empty());
}

TEST_CASE("params output lines") {
  auto result = run_cli("params --p 3 --r 2,2,1 --delta 4");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("[243,236,4]") != std::string::npos);
  CHECK(result.out.find("[[243,229,4]] *") != std::string::npos);
  CHECK(result.out.find("[[243,232,>=4]] *") != std::string::npos);

  result = run_cli("params --p 3 --r 2,1 --delta 3");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("[[27,23,3]] !") != std::string::npos);
  CHECK(result.out.find("SINGLETON: MDS") != std::string::npos);
}

TEST_CASE("exit codes") {
  // usage errors
  CHECK(run_cli("params --p 3 --delta 4").exit_code == 1);         // missing --r
  CHECK(run_cli("params --p 3 --r 2,x --delta 4").exit_code == 1); // malformed r
  CHECK(run_cli("table --p 2 --r 3,3 --delta 3..8 --format yaml").exit_code == 1);
  CHECK(run_cli("table --p 2 --r 3,3 --delta 3..8 --q 7").exit_code == 1);  // q not a power of p
  CHECK(run_cli("nonsense").exit_code == 1);

  // hypothesis / domain failures
  const auto empty = run_cli("params --p 2 --r 1,1 --delta 5", true);
  CHECK(empty.exit_code == 2);
  CHECK(empty.out.find("EmptyCode") != std::string::npos);
  CHECK(run_cli("params --p 4 --r 1,1 --delta 2").exit_code == 2);  // composite p
  const auto ndc = run_cli("params --p 2 --r 1,1 --delta 4", true);
  CHECK(ndc.exit_code == 2);
  CHECK(ndc.out.find("NotDualContaining") != std::string::npos);

  // verification success
  CHECK(run_cli("verify --p 3 --r 2,1 --delta 4 --level matrix").exit_code == 0);
}

TEST_CASE("verify output includes the brute-force distance line") {
  const auto result = run_cli("verify --p 2 --r 2,1 --delta 3 --level matrix");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("dist_brute=3 dist_designed=3") != std::string::npos);
  CHECK(result.out.find("RESULT: PASS") != std::string::npos);

  const auto rank = run_cli("verify --p 3 --r 2,2,1 --delta 4 --level matrix");
  CHECK(rank.exit_code == 0);
  CHECK(rank.out.find("rank=236") != std::string::npos);

  const auto level_none = run_cli("verify --p 3 --r 2,2,1 --delta 4 --level none");
  CHECK(level_none.exit_code == 0);
  CHECK(level_none.out.find("rank_vs_dim") == std::string::npos);
}

TEST_CASE("matrix cap environment override") {
  const auto blocked = run_cli("verify --p 3 --r 2,1 --delta 4", true, "CARTQEC_MATRIX_CAP=8");
  CHECK(blocked.exit_code == 2);
  CHECK(blocked.out.find("TooLarge") != std::string::npos);

  const auto allowed = run_cli("verify --p 3 --r 2,1 --delta 4", false, "CARTQEC_MATRIX_CAP=27");
  CHECK(allowed.exit_code == 0);
}

TEST_CASE("table warnings go to stderr, rows to stdout") {
  const auto quiet = run_cli("table --p 3 --r 2,1 --delta 2..7 --format csv");
  const auto noisy = run_cli("table --p 3 --r 2,1 --delta 2..7 --format csv", true);
  CHECK(quiet.exit_code == 0);
  CHECK(quiet.out.find("skip") == std::string::npos);
  CHECK(noisy.out.find("skip delta=2") != std::string::npos);
  CHECK(noisy.out.find("skip delta=6") != std::string::npos);
}

TEST_CASE("tau subcommand") {
  const auto result = run_cli("tau --p 2 --r 4,4,2 --s 12 --format csv");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("12,15,2,4,false") != std::string::npos);

  const auto range = run_cli("tau --p 3 --r 2,2,1 --s 1..6 --format csv");
  CHECK(range.exit_code == 0);
  CHECK(range.out.find("3,3,3,3,true") != std::string::npos);
  CHECK(range.out.find("6,8,2,4,false") != std::string::npos);
}

TEST_CASE("ambient field flags are equivalent") {
  const auto via_q = run_cli("table --p 2 --r 1,1 --q 4 --delta 2..4 --format csv");
  const auto via_r = run_cli("table --p 2 --r 1,1 --ambient-r 2 --delta 2..4 --format csv");
  CHECK(via_q.exit_code == 0);
  CHECK(via_q.out == via_r.out);
  CHECK(run_cli("table --p 2 --r 1,1 --q 4 --ambient-r 2 --delta 2..4").exit_code == 1);
}

TEST_CASE("output lands in --out files") {
  const std::string path = "/tmp/cartqec_test_table.csv";
  std::remove(path.c_str());
  const auto result = run_cli("table --p 2 --r 3,3 --delta 3..8 --format csv --out " + path);
  CHECK(result.exit_code == 0);
  CHECK(result.out.empty());
  CHECK(read_file(path) == golden("table_q8_r33.csv"));
  std::remove(path.c_str());
}
