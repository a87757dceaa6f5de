#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

static std::string cliPath() {
  const char* p = std::getenv("CFTLAB_CLI");
  REQUIRE(p != nullptr);
  return p;
}

struct RunResult {
  int code;
  std::string out;
};

static RunResult run(const std::string& args, const fs::path& dir) {
  fs::path log = dir / "stdout.txt";
  std::string cmd =
      "'" + cliPath() + "' " + args + " > '" + log.string() + "' 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.code = WEXITSTATUS(rc);
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

static std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST_CASE("artifacts are written and reruns are byte-identical") {
  fs::path dir = fs::temp_directory_path() / "cftlab_cli_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::string out = (dir / "a").string();

  auto r1 = run("spectrum --N 3 --out '" + out + "'", dir);
  CHECK(r1.code == 0);
  CHECK(r1.out.find("spectrum:") != std::string::npos);
  REQUIRE(fs::exists(out + "/spectrum.csv"));
  std::string first = slurp(out + "/spectrum.csv");
  CHECK(first.rfind("k,omega,theta\n", 0) == 0);

  auto r2 = run("spectrum --N 3 --out '" + out + "'", dir);
  CHECK(r2.code == 0);
  CHECK(slurp(out + "/spectrum.csv") == first);
}

TEST_CASE("config file with flag override") {
  fs::path dir = fs::temp_directory_path() / "cftlab_cli_test";
  fs::create_directories(dir);
  std::string out = (dir / "b").string();
  std::ofstream(dir / "cfg.txt") << "# comment\nN = 3\nkmax = 1\n";

  auto r = run("virasoro-check --config '" + (dir / "cfg.txt").string() +
                   "' --out '" + out + "'",
               dir);
  CHECK(r.code == 0);
  CHECK(r.out.find("N=3") != std::string::npos);

  auto r2 = run("virasoro-check --config '" + (dir / "cfg.txt").string() +
                    "' --N 2 --out '" + out + "'",
                dir);
  CHECK(r2.code == 0);
  CHECK(r2.out.find("N=2") != std::string::npos);

  std::ofstream(dir / "bad.txt") << "no equals sign here\n";
  auto r3 = run("spectrum --config '" + (dir / "bad.txt").string() +
                    "' --out '" + out + "'",
                dir);
  CHECK(r3.code == 2);
  CHECK(r3.out.find(":1:") != std::string::npos);  // line diagnostic
}

TEST_CASE("module errors map to distinct exit codes") {
  fs::path dir = fs::temp_directory_path() / "cftlab_cli_test";
  fs::create_directories(dir);
  std::string out = (dir / "c").string();

  CHECK(run("central-charge --k 1 --out '" + out + "'", dir).code == 8);
  CHECK(run("error-curves --rg wavelet --taps 2 --delta 0.9 --out '" + out +
                "'",
            dir)
            .code == 12);
  CHECK(run("error-curves --rg momentum --k 2 --M 4 --Nmin 3 --Nmax 5 --out '" +
                out + "'",
            dir)
            .code == 4);
  CHECK(run("wavelet-cascade --taps 5 --out '" + out + "'", dir).code == 9);
  CHECK(run("no-such-subcommand", dir).code == 2);
}

TEST_CASE("error curves: gnuplot emission and Moebius nullity") {
  fs::path dir = fs::temp_directory_path() / "cftlab_cli_test";
  fs::create_directories(dir);
  std::string out = (dir / "d").string();

  auto r = run("error-curves --rg momentum --k 0 --M 2 --Nmin 3 --Nmax 5 "
               "--gnuplot --out '" +
                   out + "'",
               dir);
  CHECK(r.code == 0);
  CHECK(r.out.find("hs_null=1") != std::string::npos);
  CHECK(fs::exists(out + "/error_curves.gp"));
  CHECK(slurp(out + "/error_curves.gp").find("error_curves.csv") !=
        std::string::npos);
}

TEST_CASE("circuit-sim pipeline summary") {
  fs::path dir = fs::temp_directory_path() / "cftlab_cli_test";
  fs::create_directories(dir);
  std::string out = (dir / "e").string();
  auto r = run("circuit-sim --sites 4 --k 1 --t 0.5 --steps 32 --out '" + out +
                   "'",
               dir);
  CHECK(r.code == 0);
  REQUIRE(fs::exists(out + "/circuit_sim.csv"));
  // discrepancy printed in the summary must be tiny for order-2 at 32 steps
  auto pos = r.out.find("discrepancy=");
  REQUIRE(pos != std::string::npos);
  double d = std::strtod(r.out.c_str() + pos + 12, nullptr);
  CHECK(d < 1e-5);
}
