// Integration tests for the hyperpolar CLI: documented exit codes, file
// outputs, and byte-level determinism of repeated runs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = HYPERPOLAR_CLI_PATH;

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("hyperpolar_cli_" + std::to_string(::getpid()) + "_" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("generate then analyze round trip") {
  TempDir dir;
  const std::string z = dir.file("z.csv");
  const std::string truth = dir.file("truth.csv");
  CHECK(run("generate --model paper --fs 4000 --out " + z + " --truth " + truth) == 0);
  CHECK(std::filesystem::exists(z));
  CHECK(std::filesystem::exists(truth));

  const std::string polar = dir.file("polar.csv");
  const std::string report = dir.file("report.txt");
  CHECK(run("analyze --in " + z + " --out " + polar + " --report " + report) == 0);
  CHECK(std::filesystem::exists(polar));
  const std::string report_text = slurp(report);
  CHECK(report_text.find("checksum.polar_csv=") != std::string::npos);
}

TEST_CASE("verify passes on the paper model and is byte-deterministic") {
  TempDir dir;
  const std::string r1 = dir.file("r1.txt");
  const std::string r2 = dir.file("r2.txt");
  const std::string p1 = dir.file("p1.csv");
  const std::string p2 = dir.file("p2.csv");
  CHECK(run("verify --model paper --fs 10000 --report " + r1 + " --out " + p1) == 0);
  CHECK(run("verify --model paper --fs 10000 --report " + r2 + " --out " + p2) == 0);
  const std::string a = slurp(r1);
  const std::string b = slurp(r2);
  CHECK(!a.empty());
  CHECK(a == b);
  CHECK(slurp(p1) == slurp(p2));
}

TEST_CASE("input errors exit with code 2") {
  TempDir dir;
  SUBCASE("missing input file") {
    CHECK(run("analyze --in " + dir.file("absent.csv")) == 2);
  }
  SUBCASE("bad header") {
    const std::string path = dir.file("bad.csv");
    std::ofstream(path) << "x,y,z\n1,2,3\n";
    CHECK(run("analyze --in " + path) == 2);
  }
  SUBCASE("too short") {
    const std::string path = dir.file("short.csv");
    std::ofstream(path) << "t,z_r,z_i\n0,1,0\n0.001,1,0\n0.002,1,0\n";
    CHECK(run("analyze --in " + path) == 2);
  }
  SUBCASE("unknown flag") {
    CHECK(run("analyze --in x.csv --frobnicate") == 2);
  }
  SUBCASE("bad model parameters") {
    CHECK(run("generate --model paper --fs -5 --out " + dir.file("z.csv")) == 2);
  }
}

TEST_CASE("numerical stage errors exit with code 3") {
  TempDir dir;
  // identically zero signal: every axis sample is degenerate
  const std::string path = dir.file("zero.csv");
  std::ofstream out(path);
  out << "t,z_r,z_i\n";
  for (int i = 0; i < 16; ++i)
    out << (i * 1e-3) << ",0,0\n";
  out.close();
  CHECK(run("analyze --in " + path) == 3);
}

TEST_CASE("plot data emission") {
  TempDir dir;
  const std::string plots = dir.file("plots");
  CHECK(run("verify --model paper --fs 2000 --duration 0.1 --emit-plot-data " +
            plots) == 0);
  for (const char* name :
       {"envelope_re.csv", "envelope_im.csv", "phase_re.csv", "phase_im.csv",
        "freq_re.csv", "freq_im.csv"}) {
    CHECK(std::filesystem::exists(std::filesystem::path(plots) / name));
  }
}

TEST_CASE("config file supplies defaults") {
  TempDir dir;
  const std::string conf = dir.file("run.conf");
  std::ofstream(conf) << "fs=4000\nmodel=paper\n";
  const std::string report = dir.file("report.txt");
  CHECK(run("verify --config " + conf + " --report " + report) == 0);
  CHECK(slurp(report).find("samples=1601") != std::string::npos);
}
