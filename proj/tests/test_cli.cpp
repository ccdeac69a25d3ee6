#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "coopsim/commands.hpp"
#include "coopsim/csv.hpp"
#include "doctest.h"

namespace cli = coopsim::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("coopsim_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(COOPSIM_BINARY) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

const char* kSmoke = "[game]\nstrategy = KS\nx = 0.7\n[run]\niterations = 10\nseed = 3\n";

}  // namespace

TEST_CASE("thresholds") {
  std::ostringstream out, err;
  CHECK(cli::cmd_thresholds("DR", 4, 2, out, err) == cli::kExitOk);
  CHECK(out.str().find("ESS w = 0.5\n") != std::string::npos);
  CHECK(out.str().find("RD w = 0.66666666666666") != std::string::npos);
  CHECK(out.str().find("AD w = 0.75\n") != std::string::npos);

  std::ostringstream ks;
  CHECK(cli::cmd_thresholds("KS", 4, 2, ks, err) == cli::kExitOk);
  CHECK(ks.str().find("ESS r = 0.5\nRD r = 0.5\nAD r = 0.5\n") != std::string::npos);

  std::ostringstream bad, bad_err;
  CHECK(cli::cmd_thresholds("KS", 2, 4, bad, bad_err) == cli::kExitConfig);
  CHECK(bad.str().find("unreachable") != std::string::npos);
  CHECK(bad_err.str().find("unreachable") != std::string::npos);

  std::ostringstream o, e;
  CHECK(cli::cmd_thresholds("ZZ", 4, 2, o, e) == cli::kExitConfig);
  CHECK(e.str().find("ZZ") != std::string::npos);
}

TEST_CASE("classify") {
  std::ostringstream out, err;
  CHECK(cli::cmd_classify("KS", 4, 2, 0.25, out, err) == cli::kExitOk);
  CHECK(out.str().find("class = PrisonersDilemma") != std::string::npos);

  std::ostringstream ir;
  CHECK(cli::cmd_classify("IR", 4, 2, 1.0, ir, err) == cli::kExitOk);
  CHECK(ir.str().find("class = UnidentifiedOnlyMutual") != std::string::npos);

  std::ostringstream dr;
  CHECK(cli::cmd_classify("DR", 4, 2, 0.5, dr, err) == cli::kExitOk);
  CHECK(dr.str().find("class = Boundary (R=T)") != std::string::npos);
  CHECK(dr.str().find("R = 4\n") != std::string::npos);

  std::ostringstream o, e;
  CHECK(cli::cmd_classify("DR", 4, 2, 1.0, o, e) == cli::kExitConfig);
  CHECK(e.str().find("game.x") != std::string::npos);
}

TEST_CASE("run writes a series with a summary line") {
  const auto cfg = write_file("smoke.ini", kSmoke);
  const auto out_path = scratch_dir() / "smoke.csv";
  std::ostringstream out, err;
  REQUIRE(cli::cmd_run(cfg.string(), out_path.string(), {}, out, err) == cli::kExitOk);
  const std::string csv = slurp(out_path);
  CHECK(csv.rfind("tick,cooperator_fraction\n1,", 0) == 0);
  CHECK(count_lines(csv) == 12);
  CHECK(csv.find("\n10,") != std::string::npos);
  CHECK(csv.find("# summary: tail_mean=") != std::string::npos);

  std::ostringstream to_stdout;
  REQUIRE(cli::cmd_run(cfg.string(), "-", {}, to_stdout, err) == cli::kExitOk);
  CHECK(to_stdout.str() == csv);

  const auto longer = write_file("longer.ini", "[game]\nstrategy = KS\nx = 0.7\n[run]\niterations = 400\nseed = 3\n");
  std::ostringstream base, other;
  REQUIRE(cli::cmd_run(longer.string(), "-", {}, base, err) == cli::kExitOk);
  REQUIRE(cli::cmd_run(longer.string(), "-", {.seed = 4, .window = std::nullopt}, other, err) == cli::kExitOk);
  CHECK(other.str() != base.str());
}

TEST_CASE("run errors") {
  std::ostringstream out, err;
  const auto dr = write_file("dr.ini", "[game]\nstrategy = DR\nx = 1\n");
  CHECK(cli::cmd_run(dr.string(), "-", {}, out, err) == cli::kExitConfig);
  CHECK(err.str().find("game.x") != std::string::npos);
  CHECK(err.str().find("dr.ini:3") != std::string::npos);

  std::ostringstream err2;
  const auto typo = write_file("typo.ini", "[game]\nstrategy = KS\nx = 0.5\n[run]\niteration = 5\n");
  CHECK(cli::cmd_run(typo.string(), "-", {}, out, err2) == cli::kExitConfig);
  CHECK(err2.str().find("typo.ini:5") != std::string::npos);
  CHECK(err2.str().find("run.iteration") != std::string::npos);

  std::ostringstream err3;
  const auto smoke = write_file("smoke2.ini", kSmoke);
  CHECK(cli::cmd_run(smoke.string(), "/nonexistent/dir/out.csv", {}, out, err3) == cli::kExitRuntime);

  std::ostringstream err4;
  CHECK(cli::cmd_run(smoke.string(), "-", {.seed = std::nullopt, .window = 11}, out, err4) == cli::kExitConfig);
  CHECK(err4.str().find("run.window") != std::string::npos);
}

TEST_CASE("seed falls back to COOPSIM_SEED") {
  const auto cfg = write_file("noseed.ini", "[game]\nstrategy = KS\nx = 0.7\n[run]\niterations = 400\n");
  std::ostringstream a, b, c, err;
  ::setenv("COOPSIM_SEED", "99", 1);
  CHECK(cli::default_seed() == 99);
  REQUIRE(cli::cmd_run(cfg.string(), "-", {}, a, err) == 0);
  REQUIRE(cli::cmd_run(cfg.string(), "-", {.seed = 99, .window = std::nullopt}, b, err) == 0);
  ::unsetenv("COOPSIM_SEED");
  CHECK(cli::default_seed() == 0);
  REQUIRE(cli::cmd_run(cfg.string(), "-", {}, c, err) == 0);
  CHECK(a.str() == b.str());
  CHECK(a.str() != c.str());
}

TEST_CASE("sweep from a config file") {
  const auto cfg = write_file("sweep.ini",
                              "[game]\nstrategy = DR\n[run]\niterations = 100\nseed = 8\n"
                              "[sweep]\nx_lo = 0.9\nx_hi = 1\nx_step = 0.05\nrepetitions = 2\n");
  const auto out_path = scratch_dir() / "sweep.csv";
  const auto plot = scratch_dir() / "plot.csv";
  const auto per_seed = scratch_dir() / "per_seed.csv";
  cli::SweepOptions opts;
  opts.plot_data = plot.string();
  opts.per_seed = per_seed.string();
  std::ostringstream out, err;
  REQUIRE(cli::cmd_sweep(cfg.string(), std::nullopt, out_path.string(), opts, out, err) == cli::kExitOk);
  const std::string csv = slurp(out_path);
  CHECK(csv.rfind(std::string(coopsim::kSweepHeader) + "\n", 0) == 0);
  CHECK(count_lines(csv) == 4);
  CHECK(csv.find("DR,0.90000000000000002,8,") != std::string::npos);
  CHECK(csv.find("DR,1,8,,,error: game.x") != std::string::npos);
  CHECK(count_lines(slurp(plot)) == 3);
  CHECK(count_lines(slurp(per_seed)) == 1 + 2 * 2 + 1);
}

TEST_CASE("named experiment sweep") {
  cli::SweepOptions opts;
  opts.iterations = 50;
  opts.repetitions = 1;
  std::ostringstream out, err;
  REQUIRE(cli::cmd_sweep("behavior", std::string("KS"), "-", opts, out, err) == cli::kExitOk);
  CHECK(count_lines(out.str()) == 51);

  std::ostringstream pop;
  REQUIRE(cli::cmd_sweep("population", std::string("DR"), "-", opts, pop, err) == cli::kExitOk);
  CHECK(count_lines(pop.str()) == 1 + 14 * 25);

  std::ostringstream o, e;
  CHECK(cli::cmd_sweep("behavior", std::nullopt, "-", opts, o, e) == cli::kExitConfig);
  CHECK(cli::cmd_sweep("behavior", std::string("QQ"), "-", opts, o, e) == cli::kExitConfig);
  opts.repetitions = 0;
  CHECK(cli::cmd_sweep("behavior", std::string("KS"), "-", opts, o, e) == cli::kExitConfig);
}

TEST_CASE("binary end to end") {
  const auto cfg = write_file("e2e.ini", kSmoke);
  const auto a = scratch_dir() / "a.csv", b = scratch_dir() / "b.csv";
  CHECK(run_binary("run " + cfg.string() + " " + a.string()) == 0);
  CHECK(run_binary("run " + cfg.string() + " " + b.string()) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(count_lines(slurp(a)) == 12);

  const auto s1 = scratch_dir() / "s1.csv", s8 = scratch_dir() / "s8.csv";
  const std::string sweep = "sweep robustness IR --iterations 60 --repetitions 2 --seed 5 ";
  CHECK(run_binary(sweep + s1.string() + " --jobs 1") == 0);
  CHECK(run_binary(sweep + s8.string() + " --jobs 8") == 0);
  CHECK(slurp(s1) == slurp(s8));

  CHECK(run_binary("thresholds DR 4 2") == 0);
  CHECK(run_binary("thresholds KS 2 4") == 2);
  CHECK(run_binary("classify DR 4 2 1") == 2);
  CHECK(run_binary("frobnicate") == 2);
  CHECK(run_binary("run /nonexistent.ini out.csv") == 2);
  CHECK(run_binary("sweep nothing-here out.csv") == 2);
}
