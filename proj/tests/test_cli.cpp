#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include <json.hpp>

#include "helpers.hpp"
#include "laddermat/io.hpp"

using namespace laddermat;
using namespace laddermat::testing;
using json = nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + std::string(LADDERMAT_CLI_PATH) + " " + args +
                          " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int rc = ::pclose(pipe);
  RunResult res;
  res.out = std::move(out);
  res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

std::vector<json> parse_lines(const std::string& text) {
  std::vector<json> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(json::parse(line));
  return lines;
}

std::string strip_wall_time(std::string text) {
  const std::string key = "\"wall_time_ms\":";
  for (std::size_t at = text.find(key); at != std::string::npos; at = text.find(key, at)) {
    std::size_t end = at + key.size();
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    text.erase(at, end - at);
  }
  return text;
}

struct FileGuard {
  std::string path;
  explicit FileGuard(std::string suffix)
      : path("/tmp/laddermat_cli_" + std::to_string(::getpid()) + "_" + std::move(suffix)) {}
  ~FileGuard() { std::remove(path.c_str()); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("help exits zero and lists the subcommands") {
  RunResult res = run_cli("--help");
  CHECK(res.status == 0);
  for (const char* name : {"gen", "permute", "recover", "verify-thm1", "verify-thm3",
                           "gb-check", "dim-check", "system-check"})
    CHECK(res.out.find(name) != std::string::npos);
}

TEST_CASE("verify-thm1 on the 2x2 grid: five unique trials, exit zero") {
  RunResult res = run_cli("verify-thm1 --m 2 --n 2 --r 1 --trials 5 --seed 42");
  CHECK(res.status == 0);
  std::vector<json> lines = parse_lines(res.out);
  REQUIRE(lines.size() == 6);
  for (int t = 0; t < 5; ++t) {
    const json& line = lines[static_cast<std::size_t>(t)];
    CHECK(line.at("trial") == t);
    CHECK(line.at("preserving_count") == 8);
    CHECK(line.at("unique") == true);
    CHECK(line.at("verdict") == true);
    CHECK(line.at("instance").at("rows") == 2);
  }
  const json& agg = lines[5];
  CHECK(agg.at("mode") == "verify-thm1");
  CHECK(agg.at("trials") == 5);
  CHECK(agg.at("errors") == 0);
  CHECK(agg.at("verdict") == true);
  CHECK(agg.contains("wall_time_ms"));
}

TEST_CASE("same config and seed give byte-identical reports modulo wall time") {
  const std::string args = "verify-thm1 --m 2 --n 3 --r 1 --trials 4 --seed 9";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.status == 0);
  CHECK(strip_wall_time(a.out) == strip_wall_time(b.out));

  // Worker count is echoed in the aggregate, so compare trial lines bytewise
  // and the aggregate modulo the config echo of workers.
  RunResult parallel = run_cli(args + " --workers 4");
  std::vector<json> serial_lines = parse_lines(a.out);
  std::vector<json> parallel_lines = parse_lines(parallel.out);
  REQUIRE(serial_lines.size() == parallel_lines.size());
  for (std::size_t k = 0; k + 1 < serial_lines.size(); ++k)
    CHECK(serial_lines[k] == parallel_lines[k]);
  json serial_agg = serial_lines.back();
  json parallel_agg = parallel_lines.back();
  for (json* agg : {&serial_agg, &parallel_agg}) {
    agg->erase("workers");
    agg->erase("wall_time_ms");
  }
  CHECK(serial_agg == parallel_agg);
}

TEST_CASE("gb-check certifies the full 3x3 grid at r=1") {
  RunResult res = run_cli("gb-check --m 3 --n 3 --r 1");
  CHECK(res.status == 0);
  std::vector<json> lines = parse_lines(res.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].at("num_minors") == 9);
  CHECK(lines[0].at("is_groebner") == true);
  CHECK(lines[0].at("ops").get<long long>() > 0);
  CHECK(lines[0].at("verdict") == true);
}

TEST_CASE("gb-check reports the double staircase failure at r=1") {
  FileGuard lf("l7.json");
  save_ladder(lf.path, ladder_7cell());
  RunResult res = run_cli("gb-check --ladder " + lf.path + " --r 1");
  CHECK(res.status == 1);
  std::vector<json> lines = parse_lines(res.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].at("is_groebner") == false);
  CHECK(lines[0].at("verdict") == false);
  CHECK(lines[0].at("errors") == 0);
}

TEST_CASE("dim-check matches the corner formula on the full 3x3 grid") {
  RunResult res = run_cli("dim-check --m 3 --n 3 --r 1");
  CHECK(res.status == 0);
  std::vector<json> lines = parse_lines(res.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].at("dim_formula") == 5);
  CHECK(lines[0].at("dim_initial") == 5);
  CHECK(lines[0].at("match") == true);
}

TEST_CASE("dim-check reports the double staircase disagreement") {
  FileGuard lf("l7dim.json");
  save_ladder(lf.path, ladder_7cell());
  RunResult res = run_cli("dim-check --ladder " + lf.path + " --r 1");
  CHECK(res.status == 1);
  std::vector<json> lines = parse_lines(res.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].at("dim_formula") == 5);
  CHECK(lines[0].at("dim_initial") == 6);
  CHECK(lines[0].at("match") == false);
}

TEST_CASE("recover on the 8-cell ladder finds unclassified permutations") {
  FileGuard lf("l8.json");
  save_ladder(lf.path, ladder_8cell());
  RunResult res = run_cli("recover --ladder " + lf.path + " --r 1 --trials 2 --seed 3");
  CHECK(res.status == 1);
  std::vector<json> lines = parse_lines(res.out);
  REQUIRE(lines.size() == 3);
  for (int t = 0; t < 2; ++t) {
    CHECK(lines[static_cast<std::size_t>(t)].at("preserving_count") == 8);
    CHECK(lines[static_cast<std::size_t>(t)].at("unique") == false);
  }
  CHECK(lines[2].at("verdict") == false);
  CHECK(lines[2].at("errors") == 0);
}

TEST_CASE("permute trials keep the trivial-class rank contract") {
  RunResult res = run_cli("permute --m 2 --n 2 --r 1 --trials 10 --seed 7");
  CHECK(res.status == 0);
  std::vector<json> lines = parse_lines(res.out);
  REQUIRE(lines.size() == 11);
  for (int t = 0; t < 10; ++t) {
    const json& line = lines[static_cast<std::size_t>(t)];
    CHECK(line.at("verdict") == true);
    if (line.at("class") != "none") CHECK(line.at("preserved") == true);
  }
  CHECK(lines[10].at("verdict") == true);
}

TEST_CASE("system-check builds zero-dimensional systems on the 2x2 grid") {
  RunResult res =
      run_cli("system-check --m 2 --n 2 --r 1 --trials 2 --seed 11 --budget 4000000");
  CHECK(res.status == 0);
  std::vector<json> lines = parse_lines(res.out);
  REQUIRE(lines.size() == 3);
  for (int t = 0; t < 2; ++t) {
    const json& line = lines[static_cast<std::size_t>(t)];
    CHECK(line.at("combos") == 4);
    CHECK(line.at("zero_dimensional") == true);
    CHECK(line.at("base_point_ok") == true);
  }
  CHECK(lines[2].at("verdict") == true);
  CHECK(lines[2].at("budget") == 4000000);
}

TEST_CASE("a starved LADDERMAT_BUDGET is recorded as a trial error") {
  RunResult res = run_cli("gb-check --m 3 --n 3 --r 1", "LADDERMAT_BUDGET=10 ");
  CHECK(res.status == 1);
  std::vector<json> lines = parse_lines(res.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].at("errors") == 1);
  CHECK(lines[0].at("verdict") == false);
  CHECK(lines[0].contains("error"));
}

TEST_CASE("gen prints a matrix of the requested shape and saves to files") {
  RunResult res = run_cli("gen --m 2 --n 3 --r 1 --seed 5");
  CHECK(res.status == 0);
  RationalMatrix X = matrix_from_json(res.out);
  CHECK(X.rows() == 2);
  CHECK(X.cols() == 3);
  CHECK(rank(X) == 1);

  FileGuard mf("gen.csv");
  RunResult saved = run_cli("gen --m 2 --n 3 --r 1 --seed 5 --out " + mf.path);
  CHECK(saved.status == 0);
  CHECK(saved.out.empty());
  CHECK(load_matrix(mf.path) == X);
}

TEST_CASE("--out redirects the whole report to a file") {
  FileGuard rf("report.jsonl");
  RunResult res =
      run_cli("verify-thm1 --m 2 --n 2 --r 1 --trials 3 --seed 1 --out " + rf.path);
  CHECK(res.status == 0);
  CHECK(res.out.empty());
  RunResult direct = run_cli("verify-thm1 --m 2 --n 2 --r 1 --trials 3 --seed 1");
  CHECK(strip_wall_time(slurp(rf.path)) == strip_wall_time(direct.out));
}

TEST_CASE("malformed invocations exit nonzero") {
  CHECK(run_cli("").status != 0);
  CHECK(run_cli("no-such-mode --m 2").status != 0);
  CHECK(run_cli("recover --trials 0").status != 0);
  CHECK(run_cli("gb-check --ladder /nonexistent/ladder.json").status == 2);
  CHECK(run_cli("dim-check --m 2 --n 2 --r 2").status == 2);
}
