#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

using json = nlohmann::json;

const std::string cli = SPECWALK_CLI_PATH;

struct RunResult {
  int status;
  std::string output;
};

RunResult run(const std::string& args, bool raw_command = false) {
  const std::string out_file = "cli_stdout.tmp";
  const std::string cmd = (raw_command ? args : cli + " " + args) + " > " + out_file +
                          " 2> cli_stderr.tmp";
  int raw = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(raw), ss.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  std::string path;
  explicit TempDir(const std::string& name) : path("cli_test_" + name) {
    if (std::system(("rm -rf " + path + " && mkdir -p " + path).c_str()) != 0)
      throw std::runtime_error("cannot prepare " + path);
  }
  ~TempDir() {
    if (std::system(("rm -rf " + path).c_str()) != 0) std::fputs("cleanup failed\n", stderr);
  }
  std::string file(const std::string& name) const { return path + "/" + name; }
};

}  // namespace

TEST_CASE("cli: k-complete fixture and exact paths decision") {
  TempDir dir("paths");
  CHECK(run("fixture --kind k-complete --n 5 --out-dir " + dir.path + " --prefix k5")
            .status == 0);
  RunResult r = run("paths --graph " + dir.file("k5.graph.txt") + " --perm " +
                    dir.file("k5.perm.txt") +
                    " --q 0 --r 1 --m 2 --g 0 --epsilon 0.5 --b 1 --out " +
                    dir.file("report.json"));
  CHECK(r.status == 0);
  json report = json::parse(slurp(dir.file("report.json")));
  CHECK(report["schema"] == 1);
  CHECK(report["verdict"] == "GE");
  CHECK(report["delta_estimate"] == 1.0);
}

TEST_CASE("cli: walk sweep on K2 matches the closed form") {
  TempDir dir("walk");
  CHECK(run("fixture --kind k-complete --n 2 --out-dir " + dir.path + " --prefix k2")
            .status == 0);
  RunResult r = run("walk --graph " + dir.file("k2.graph.txt") + " --perm " +
                    dir.file("k2.perm.txt") + " --sweep 0:5:50 --csv " +
                    dir.file("sweep.csv") + " --out " + dir.file("report.json"));
  CHECK(r.status == 0);
  std::ifstream csv(dir.file("sweep.csv"));
  std::string header;
  std::getline(csv, header);
  CHECK(header == "t,c_exact,lower_envelope,upper_envelope");
  std::string line;
  int rows = 0;
  while (std::getline(csv, line)) {
    double t, c, lo, hi;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &t, &c, &lo, &hi) == 4);
    CHECK(std::abs(c - std::exp(-2.0 * t)) < 1e-9);
    CHECK(c >= lo - 1e-12);
    CHECK(c <= hi + 1e-12);
    ++rows;
  }
  CHECK(rows == 51);
}

TEST_CASE("cli: reduce emits loadable gadget files and verify passes on them") {
  TempDir dir("reduce");
  std::ofstream(dir.file("y.txt")) << "circuit 3 011\nht 1 2 0\nh 0\n";
  RunResult r = run("reduce --circuit " + dir.file("y.txt") + " --form h --out-dir " +
                    dir.path + " --prefix clk --out " + dir.file("reduce.json"));
  CHECK(r.status == 0);
  json report = json::parse(slurp(dir.file("reduce.json")));
  CHECK(report["clock"]["integer_rows"] == true);
  CHECK(report["clock"]["m"] == 5);

  RunResult v = run("verify --circuit " + dir.file("y.txt") + " --form h --m 6 --out " +
                    dir.file("verify.json"));
  CHECK(v.status == 0);
  json verify = json::parse(slurp(dir.file("verify.json")));
  CHECK(verify["ok"] == true);
  CHECK(verify["clock_rows"]["clean"] == true);
  CHECK(verify["reduction_identity"]["identity_holds"] == true);

  // The emitted graph is a valid instance for the paths subcommand.
  const auto q = report["pair"]["q"].get<long long>();
  const auto r2 = report["pair"]["r"].get<long long>();
  // Delta^2 = (A^2)_jj = 4 and the promise gap is 0.4 * 8 = 3.2.
  RunResult p = run("paths --graph " + dir.file("clk.graph.txt") + " --perm " +
                    dir.file("clk.perm.txt") + " --q " + std::to_string(q) + " --r " +
                    std::to_string(r2) +
                    " --m 2 --g 0 --epsilon 0.4 --b 2.8284271247461903 --out " +
                    dir.file("paths.json"));
  CHECK(p.status == 0);
  json paths = json::parse(slurp(dir.file("paths.json")));
  CHECK(paths["verdict"] == "GE");
  CHECK(paths["delta_estimate"] == 4.0);
}

TEST_CASE("cli: spectral report ties the numeric measure to the closed form") {
  TempDir dir("spectral");
  std::ofstream(dir.file("y.txt")) << "circuit 2 10\nh 1\n";
  RunResult r = run("spectral --circuit " + dir.file("y.txt") + " --form z --csv " +
                    dir.file("measure.csv") + " --out " + dir.file("spectral.json"));
  CHECK(r.status == 0);
  json report = json::parse(slurp(dir.file("spectral.json")));
  CHECK(report["alpha1_sq"].get<double>() == doctest::Approx(1.0));
  CHECK(report["max_deviation"].get<double>() < 1e-8);
  std::ifstream csv(dir.file("measure.csv"));
  std::string header;
  std::getline(csv, header);
  CHECK(header == "value,weight");
}

TEST_CASE("cli: witness subcommand finds the accepting index") {
  TempDir dir("witness");
  std::ofstream(dir.file("and.txt")) << "circuit 3 000\nht 1 2 0\nh 0\n";
  RunResult r = run("witness --circuit " + dir.file("and.txt") +
                    " --witness-bits 2 --out " + dir.file("witness.json"));
  CHECK(r.status == 0);
  json report = json::parse(slurp(dir.file("witness.json")));
  CHECK(report["verdict"] == "EXISTS");
  CHECK(report["witness_index"] == 3);
  CHECK(report["pair_c"].size() == 4);
}

TEST_CASE("cli: diag-entry decides the clock matrix diagonal") {
  TempDir dir("diag");
  std::ofstream(dir.file("y.txt")) << "circuit 2 00\nh 1\n";
  RunResult r0 = run("reduce --circuit " + dir.file("y.txt") + " --form h --out-dir " +
                     dir.path + " --prefix clk --out " + dir.file("reduce.json"));
  CHECK(r0.status == 0);
  json reduce = json::parse(slurp(dir.file("reduce.json")));
  const auto j = reduce["clock"]["start_index"].get<long long>();
  // (A^2)_jj = 4 exactly; test both sides of the promise.
  RunResult ge = run("diag-entry --matrix " + dir.file("clk.matrix.txt") + " --j " +
                     std::to_string(j) +
                     " --m 2 --g 3 --epsilon 0.1 --b 2.8284271247461903 --out " +
                     dir.file("ge.json"));
  CHECK(ge.status == 0);
  CHECK(json::parse(slurp(dir.file("ge.json")))["verdict"] == "GE");
  RunResult sim =
      run("diag-entry --matrix " + dir.file("clk.matrix.txt") + " --j " +
          std::to_string(j) +
          " --m 2 --g 3 --epsilon 0.3 --b 2.8284271247461903 --method quantum-sim "
          "--seed 7 --out " +
          dir.file("sim.json"));
  CHECK(sim.status == 0);
  json simr = json::parse(slurp(dir.file("sim.json")));
  CHECK(simr["verdict"] == "GE");
  CHECK(simr["budget"]["p"].get<int>() >= 1);
  CHECK(simr["budget"]["samples"].get<long long>() >= 1);
}

TEST_CASE("cli: byte-identical reports for identical config and seed") {
  TempDir dir("determinism");
  CHECK(run("fixture --kind k-complete --n 5 --out-dir " + dir.path + " --prefix k5")
            .status == 0);
  const std::string base = "paths --graph " + dir.file("k5.graph.txt") + " --perm " +
                           dir.file("k5.perm.txt") +
                           " --q 0 --r 1 --m 2 --g 0 --epsilon 0.5 --b 1 "
                           "--method quantum-sim --seed 424242 --out ";
  CHECK(run(base + dir.file("one.json")).status == 0);
  CHECK(run(base + dir.file("two.json")).status == 0);
  const std::string one = slurp(dir.file("one.json"));
  CHECK(!one.empty());
  CHECK(one == slurp(dir.file("two.json")));
}

TEST_CASE("cli: promise violation exits with status 2") {
  TempDir dir("violation");
  CHECK(run("fixture --kind k-complete --n 5 --out-dir " + dir.path + " --prefix k5")
            .status == 0);
  RunResult r = run("paths --graph " + dir.file("k5.graph.txt") + " --perm " +
                    dir.file("k5.perm.txt") +
                    " --q 0 --r 1 --m 1 --g -1 --epsilon 0.5 --b 1 --out " +
                    dir.file("report.json"));
  CHECK(r.status == 2);
}

TEST_CASE("cli: missing files and unknown flags are plain errors") {
  CHECK(run("paths --graph does_not_exist.txt --b 1").status == 1);
  CHECK(run("walk --graph nope.txt --no-such-flag 3").status != 0);
  CHECK(run("fixture --kind nonsense --n 5 --out-dir . --prefix x").status == 1);
}

TEST_CASE("cli: infeasible fixture degree is rejected") {
  TempDir dir("fixture");
  RunResult r = run("fixture --kind random-regular --n 4 --degree 5 --out-dir " +
                    dir.path + " --prefix rr");
  CHECK(r.status == 1);
  RunResult ok = run("fixture --kind random-regular --n 8 --degree 3 --seed 5 "
                     "--out-dir " + dir.path + " --prefix rr");
  CHECK(ok.status == 0);
}

TEST_CASE("cli: fixture files are byte-stable across runs") {
  TempDir a("stable_a");
  TempDir b("stable_b");
  CHECK(run("fixture --kind random-regular --n 10 --degree 4 --seed 99 --out-dir " +
            a.path + " --prefix rr").status == 0);
  CHECK(run("fixture --kind random-regular --n 10 --degree 4 --seed 99 --out-dir " +
            b.path + " --prefix rr").status == 0);
  CHECK(slurp(a.file("rr.graph.txt")) == slurp(b.file("rr.graph.txt")));
  CHECK(!slurp(a.file("rr.graph.txt")).empty());
}

TEST_CASE("cli: SPECWALK_DENSE_CAP env var caps materialization") {
  TempDir dir("densecap");
  CHECK(run("fixture --kind k-complete --n 6 --out-dir " + dir.path + " --prefix k6")
            .status == 0);
  const std::string args = "walk --graph " + dir.file("k6.graph.txt") +
                           " --perm " + dir.file("k6.perm.txt") + " --t 1.0 --out " +
                           dir.file("report.json");
  CHECK(run(args).status == 0);
  RunResult capped = run("env SPECWALK_DENSE_CAP=4 " + cli + " " + args, true);
  CHECK(capped.status == 1);
}
