// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0
//
// Exercises the installed binary end to end: exit codes, file artifacts, and
// demo determinism. CLI_BIN and TEST_DATA_DIR are injected by CMake.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run_raw(const std::string& cmd_line) {
  const std::string cmd = cmd_line + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

RunResult run(const std::string& args) { return run_raw(std::string(CLI_BIN) + " " + args); }

std::string data(const char* name) { return std::string(TEST_DATA_DIR) + "/" + name; }

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "biloewner_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("cli: validate the scalar fixture") {
  const RunResult r = run("validate --system " + data("s1_system.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"spectral_abscissa\": -1.0") != std::string::npos);
  CHECK(r.output.find("\"ok\": true") != std::string::npos);
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run("--definitely-not-a-flag").exit_code == 2);
  CHECK(run("validate").exit_code == 2);            // missing required option
  CHECK(run("frobnicate --x 1").exit_code == 2);    // unknown subcommand
}

TEST_CASE("cli: domain errors exit 1 with JSON on stderr") {
  CHECK(run("validate --system /nonexistent.json").exit_code == 1);
  // resonance: S1 generator at kappa 3
  const RunResult r = run("reduce mm --system " + data("s1_system.json") + " --generator " +
                          data("s1_generator.json") + " --kappa 3 --out /tmp/should_not_exist.json");
  CHECK(r.exit_code == 1);
}

TEST_CASE("cli: tf eval emits the oracle values as CSV") {
  const fs::path dir = temp_dir();
  const fs::path pts = dir / "points.json";
  {
    std::FILE* f = std::fopen(pts.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs("[[[2.0, 0.0]], [[3.0, 0.0]]]", f);
    std::fclose(f);
  }
  const RunResult r = run("tf eval --system " + data("s1_system.json") + " --points " +
                          pts.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("s1_re,s1_im,h_re,h_im") != std::string::npos);
  CHECK(r.output.find("0.33333333333333") != std::string::npos);
  CHECK(r.output.find("0.25") != std::string::npos);
}

TEST_CASE("cli: reduce blf then check interpolation and kappa") {
  const fs::path dir = temp_dir();
  const std::string rom = (dir / "rom.json").string();
  const std::string mm = (dir / "mm.json").string();

  CHECK(run("reduce blf --system " + data("s1_system.json") + " --generator " +
            data("s1_generator.json") + " --kappa 2 --svd-tol 1e-12 --out " + rom)
            .exit_code == 0);
  CHECK(run("check interpolation --system " + data("s1_system.json") + " --rom " + rom +
            " --generator " + data("s1_generator.json") + " --kappa 2 --tol 1e-8")
            .exit_code == 0);
  CHECK(run("check kappa --a " + data("s1_system.json") + " --b " + rom + " --generator " +
            data("s1_generator.json") + " --kappa 2 --tol 1e-9")
            .exit_code == 0);

  CHECK(run("reduce mm --system " + data("s1_system.json") + " --generator " +
            data("s1_generator.json") + " --kappa 2 --out " + mm)
            .exit_code == 0);
  CHECK(run("check kappa --a " + data("s1_system.json") + " --b " + mm + " --generator " +
            data("s1_generator.json") + " --kappa 2 --tol 1e-9")
            .exit_code == 0);
}

TEST_CASE("cli: simulate and compare round trip") {
  const fs::path dir = temp_dir();
  const std::string trace_a = (dir / "a.csv").string();
  const std::string trace_b = (dir / "b.csv").string();
  const std::string mm = (dir / "mm_osc.json").string();

  CHECK(run("reduce mm --system " + data("s1_system.json") + " --generator " +
            data("osc_generator.json") + " --kappa 2 --out " + mm)
            .exit_code == 0);
  CHECK(run("simulate --system " + data("s1_system.json") + " --generator " +
            data("osc_generator.json") + " --zeta0 [[0.01,0]] --horizon 10 --dt 0.001 --out " +
            trace_a)
            .exit_code == 0);
  CHECK(run("simulate --mm-rom " + mm + " --generator " + data("osc_generator.json") +
            " --zeta0 [[0.01,0]] --horizon 10 --dt 0.001 --out " + trace_b)
            .exit_code == 0);
  const RunResult r =
      run("compare --a " + trace_a + " --b " + trace_b + " --transient-fraction 0.8");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"rms_rel\"") != std::string::npos);
}

TEST_CASE("cli: BILOEWNER_THREADS caps parallelism without changing results") {
  const fs::path dir = temp_dir();
  const fs::path pts = dir / "grid.json";
  {
    std::FILE* f = std::fopen(pts.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs("[[[2.0,0.0],[1.0,0.0]], [[3.0,0.0],[1.0,0.0]], [[4.0,0.0],[2.0,0.0]]]", f);
    std::fclose(f);
  }
  const std::string args =
      "tf eval --system " + data("s1_system.json") + " --points " + pts.string();
  const RunResult parallel = run(args);
  const RunResult serial =
      run_raw("env BILOEWNER_THREADS=1 " + std::string(CLI_BIN) + " " + args);
  CHECK(parallel.exit_code == 0);
  CHECK(serial.exit_code == 0);
  CHECK(parallel.output == serial.output);
}

TEST_CASE("cli: reduce blf accepts an explicit tuple file") {
  const fs::path dir = temp_dir();
  const fs::path tuples = dir / "tuples.json";
  {
    std::FILE* f = std::fopen(tuples.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs("{\"left\": [[[3.0,0.0]]], \"right\": [[[1.0,0.0]]]}", f);
    std::fclose(f);
  }
  const std::string rom = (dir / "rom_tuples.json").string();
  const RunResult r = run("reduce blf --system " + data("s1_system.json") + " --tuples " +
                          tuples.string() + " --out " + rom);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("order-1") != std::string::npos);
  CHECK(run("check interpolation --system " + data("s1_system.json") + " --rom " + rom +
            " --generator " + data("s1_generator.json") + " --kappa 1 --tol 1e-10")
            .exit_code == 0);
}

TEST_CASE("cli: demo is deterministic across runs") {
  const fs::path dir = temp_dir();
  const RunResult first = run("demo --out-dir " + (dir / "demo1").string());
  const RunResult second = run("demo --out-dir " + (dir / "demo2").string());
  CHECK(first.exit_code == 0);
  CHECK(second.exit_code == 0);
  // identical stdout up to the differing artifact paths
  std::string a = first.output;
  std::string b = second.output;
  const std::string d1 = (dir / "demo1").string();
  const std::string d2 = (dir / "demo2").string();
  std::size_t pos;
  while ((pos = a.find(d1)) != std::string::npos) a.replace(pos, d1.size(), "OUT");
  while ((pos = b.find(d2)) != std::string::npos) b.replace(pos, d2.size(), "OUT");
  CHECK(a == b);
  CHECK(fs::exists(dir / "demo1" / "reports.json"));
  CHECK(fs::exists(dir / "demo1" / "trace_full.csv"));
}
