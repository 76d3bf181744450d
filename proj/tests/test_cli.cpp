#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// TROPICOST_CLI_PATH and TROPICOST_SAMPLES_DIR come in from the build so the
// test drives the installed-shape binary against the shipped sample files.

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(TROPICOST_CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string sample(const char* name) {
  return std::string(TROPICOST_SAMPLES_DIR) + "/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// JSON reports are deterministic except for the wall-clock field.
std::string without_timings(const std::string& text) {
  std::string out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(pos, end - pos);
    if (!contains(line, "duration_ms")) out += line + "\n";
    pos = end + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("cost subcommands print the golden values") {
  RunResult r = run("longrun " + sample("lrc.tsys"));
  CHECK(r.code == 0);
  CHECK(r.out == "rho = 4\n");

  r = run("global " + sample("lrc.tsys"));
  CHECK(r.code == 0);
  CHECK(r.out == "gc = top\n");

  r = run("global " + sample("lrc_minplus.tsys"));
  CHECK(r.code == 0);
  CHECK(r.out == "gc = 15\n");

  r = run("longrun " + sample("lrc_minplus.tsys"));
  CHECK(r.code == 0);
  CHECK(r.out == "rho = 2\n");

  r = run("global " + sample("chain.tsys"));
  CHECK(r.code == 0);
  CHECK(r.out == "gc = 9/2\n");
}

TEST_CASE("abstract reports the lifted system and sound bounds") {
  RunResult r = run("abstract " + sample("lrc.tsys") + " --partition " +
                    sample("partition_ab.map") + " --check");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "edge A B 8"));
  CHECK(contains(r.out, "edge B B 5"));
  CHECK(contains(r.out, "galois laws: ok"));
  CHECK(contains(r.out, "correct abstraction: ok"));
  CHECK(contains(r.out, "gc = top  gc-abstract = top  bound holds"));
  CHECK(contains(r.out, "rho = 4  rho-abstract = 5  bound holds"));

  // --longrun narrows the cost section.
  r = run("abstract " + sample("lrc.tsys") + " --partition " +
          sample("partition_ab.map") + " --longrun");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "rho = 4"));
  CHECK(!contains(r.out, "gc ="));
}

TEST_CASE("json output is byte-stable apart from the timer") {
  std::string args = "longrun --json " + sample("lrc.tsys");
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(without_timings(a.out) == without_timings(b.out));
  CHECK(contains(a.out, "\"rho\": \"4\""));
  CHECK(contains(a.out, "\"digests\""));
  CHECK(contains(a.out, "\"duration_ms\""));
}

TEST_CASE("galois subcommand renders and verifies the running lattice") {
  RunResult r = run("galois even-intervals --n 2 --show-matrix --verify");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "e e . . ."));
  CHECK(contains(r.out, ". e e e ."));
  CHECK(contains(r.out, ". . . e e"));
  CHECK(contains(r.out, "residuated pair: ok"));

  r = run("galois " + sample("levels.lat") + " --show-matrix --verify");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "residuated pair: ok"));
}

TEST_CASE("verify subcommand runs all three campaigns") {
  RunResult r =
      run("verify --dioid minplus --trials 5 --states 3 --seed 9 --lemmas");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "partition campaign:"));
  CHECK(contains(r.out, "linear campaign:"));
  CHECK(contains(r.out, "oracle campaign:"));
  CHECK(contains(r.out, "all checks passed"));

  r = run("verify --dioid cap-cup --trials 5 --states 3 --seed 9 --json");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"ok\": true"));
}

TEST_CASE("misuse and bad inputs exit with code 2") {
  RunResult r = run("global /nonexistent/system.tsys", true);
  CHECK(r.code == 2);
  CHECK(contains(r.out, "error:"));

  r = run("frobnicate", true);
  CHECK(r.code == 2);

  r = run("global", true);
  CHECK(r.code == 2);

  r = run("--help");
  CHECK(r.code == 0);

  // Parse failures carry a position.
  std::string bad = std::string(TROPICOST_SCRATCH_DIR) + "/bad.tsys";
  {
    std::ofstream out(bad);
    out << "dioid maxplus\nstates a b\nedge a zz 4\n";
  }
  r = run("global " + bad, true);
  CHECK(r.code == 2);
  CHECK(contains(r.out, "error:"));
  CHECK(contains(r.out, "line 3"));
  std::remove(bad.c_str());
}
