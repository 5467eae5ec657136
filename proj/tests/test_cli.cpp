#include <doctest.h>

#include <cstdio>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "simdim/families.hpp"
#include "simdim/family_io.hpp"
#include "simdim/errors.hpp"

using namespace simdim;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(SIMDIM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "simdim_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p);
  REQUIRE(f.good());
  f << text;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("family files round trip through gen and the parser") {
  auto path = temp_file("stars.txt");
  RunResult gen = run("gen stars -r 4 --out " + path.string());
  REQUIRE(gen.exit_code == 0);
  GraphFamily f = load_family_file(path.string());
  CHECK(f.size() == 5);
  CHECK(family_file_text(f) == read_file(path));
}

TEST_CASE("dims agrees with its oracle and reports the family dimension") {
  auto path = temp_file("fig1.txt");
  write_file(path, family_file_text(fig1_family()));
  RunResult r = run("dims " + path.string() + " --oracle");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("sd_s: 6") != std::string::npos);
  CHECK(r.output.find("verdict: AGREE") != std::string::npos);
}

TEST_CASE("table and json carry the same numbers") {
  auto path = temp_file("pair.txt");
  RunResult gen = run("gen cycle -n 7 --out " + path.string());
  REQUIRE(gen.exit_code == 0);
  RunResult table = run("complement-pair " + path.string());
  RunResult json = run("complement-pair " + path.string() + " --format json");
  CHECK(table.exit_code == 0);
  CHECK(json.exit_code == 0);
  CHECK(table.output.find("sd_s_pair: 5") != std::string::npos);
  CHECK(json.output.find("\"sd_s_pair\": 5") != std::string::npos);
  CHECK(table.output.find("beta_s: 5") != std::string::npos);
  CHECK(json.output.find("\"beta_s\": 5") != std::string::npos);
}

TEST_CASE("structured output is byte-identical across runs") {
  auto path = temp_file("det.txt");
  REQUIRE(run("gen shared-paths -n 7 -k 3 --seed 11 --out " + path.string()).exit_code == 0);
  RunResult a = run("dims " + path.string() + " --format json");
  RunResult b = run("dims " + path.string() + " --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  auto p2 = temp_file("det2.txt");
  RunResult g1 = run("gen graph -n 9 --prob 0.4 --seed 3 --out " + p2.string());
  std::string first = read_file(p2);
  RunResult g2 = run("gen graph -n 9 --prob 0.4 --seed 3 --out " + p2.string());
  CHECK(g1.exit_code == 0);
  CHECK(g2.exit_code == 0);
  CHECK(first == read_file(p2));
}

TEST_CASE("exit codes follow the contract") {
  auto bad = temp_file("bad.txt");
  write_file(bad, "labels a b\n");  // labels before n
  CHECK(run("dims " + bad.string()).exit_code == 1);

  auto disc = temp_file("disc.txt");
  write_file(disc, "n 4\nlabels a b c d\ngraph G\na b\nc d\nend\n");
  RunResult r = run("dims " + disc.string());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("'G'") != std::string::npos);

  auto ok = temp_file("ok.txt");
  write_file(ok, "n 3\ngraph G\nv0 v1\nv1 v2\nend\n");
  CHECK(run("dims " + ok.string()).exit_code == 0);
  CHECK(run("srgraph " + ok.string() + " --graph NOPE").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 1);
  CHECK(run("dims").exit_code == 1);
}

TEST_CASE("comments and default labels parse") {
  auto path = temp_file("commented.txt");
  write_file(path, "# a family\nn 3\n# default labels v0..v2\ngraph G\nv0 v1\nv1 v2\nend\n");
  RunResult r = run("srgraph " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[v0, v2]") != std::string::npos);

  auto crlf = temp_file("crlf.txt");
  write_file(crlf, "n 3\r\ngraph G\r\nv0 v1\r\nv1 v2\r\nend\r\n");
  CHECK(run("dims " + crlf.string()).exit_code == 0);
}

TEST_CASE("bounds command marks the rho fallback above the exact limit") {
  auto path = temp_file("long_path.txt");
  REQUIRE(run("gen path -n 12 --out " + path.string()).exit_code == 0);
  RunResult exact = run("bounds " + path.string());
  CHECK(exact.exit_code == 0);
  CHECK(exact.output.find("rho_exact: true") != std::string::npos);
  RunResult heur = run("bounds " + path.string() + " --exact-limit 5");
  CHECK(heur.exit_code == 0);
  CHECK(heur.output.find("rho_exact: false") != std::string::npos);
  CHECK(heur.output.find("heuristic lower bound") != std::string::npos);

  std::string env_cmd = "SIMDIM_EXACT_LIMIT=5 " + std::string(SIMDIM_CLI_PATH) + " bounds " +
                        path.string() + " 2>&1";
  FILE* pipe = popen(env_cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string envout;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) envout.append(buf, got);
  pclose(pipe);
  CHECK(envout.find("rho_exact: false") != std::string::npos);
}

TEST_CASE("gen hsp2 writes the instance next to the family") {
  auto path = temp_file("red.txt");
  RunResult gen = run("gen hsp2 --ground v1,v2,v3,v4 --sets \"v1,v2;v3;v2,v4\" --budget 2 --out " +
                      path.string());
  REQUIRE(gen.exit_code == 0);
  CHECK(read_file(path).find("# ssd-budget 3") != std::string::npos);
  GraphFamily f = load_family_file(path.string());
  CHECK(f.size() == 3);
  CHECK(f.n() == 9);
  RunResult verify = run("verify-reduction " + path.string() + ".hsp2");
  CHECK(verify.exit_code == 0);
  CHECK(verify.output.find("verdict: PASS") != std::string::npos);
  CHECK(run("gen hsp2 --ground v1,v2 --sets v1 --budget 1").exit_code == 2);
}

TEST_CASE("golden outputs are reproduced byte for byte") {
  const std::string dir = SIMDIM_GOLDEN_DIR;
  auto run_in_golden = [&](const std::string& args) {
    std::string cmd =
        "cd " + dir + " && " + std::string(SIMDIM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    return out;
  };
  CHECK(run_in_golden("dims fig1.family --format table") ==
        read_file(std::filesystem::path(dir) / "fig1_dims.table"));
  CHECK(run_in_golden("dims fig1.family --format json") ==
        read_file(std::filesystem::path(dir) / "fig1_dims.json"));
  CHECK(run_in_golden("bounds fig1.family --format json") ==
        read_file(std::filesystem::path(dir) / "fig1_bounds.json"));
}

TEST_CASE("figure fixtures are reachable from the command line") {
  auto path = temp_file("fig4.txt");
  REQUIRE(run("gen figure --which fig4 --out " + path.string()).exit_code == 0);
  RunResult r = run("complement-pair " + path.string() + " --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"sd_s_pair\": 5") != std::string::npos);
  CHECK(r.output.find("\"beta\": 5") != std::string::npos);
  CHECK(r.output.find("\"dim_s\": 4") != std::string::npos);
}

}  // TEST_SUITE
