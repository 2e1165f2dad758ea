// Drives the installed CLI binary end to end: output determinism, exit codes
// and the summary lines scripts depend on.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(CRITSCALE_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string cfg(const char* name) { return std::string(CRITSCALE_CONFIG_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("spectral command succeeds and reports the support table") {
  RunResult r = run("spectral " + cfg("unstable_example.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("block,kind,lambda") != std::string::npos);
  CHECK(r.output.find("hX_plus") != std::string::npos);
  CHECK(r.output.find("5.38337") != std::string::npos);
}

TEST_CASE("determinism: identical config gives byte-identical CSV") {
  for (const std::string& sub :
       {std::string("spectral "), std::string("bounds --kmax 12 "),
        std::string("oracle --kmax 5 ")}) {
    RunResult a = run(sub + cfg("unstable_example.json"));
    RunResult b = run(sub + cfg("unstable_example.json"));
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
  }
}

TEST_CASE("bounds command writes the certificate") {
  RunResult r = run("bounds --kmax 15 " + cfg("unstable_example.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("# certificate") != std::string::npos);
  CHECK(r.output.find("0.2860360360360") != std::string::npos);
  CHECK(r.output.find("LimitFormula") != std::string::npos);
}

TEST_CASE("oracle command emits the figure data file") {
  const std::string out = std::string(CRITSCALE_CONFIG_DIR) + "/../build/oracle_test_out.csv";
  RunResult r = run("oracle --kmax 5 --out " + out + " " + cfg("unstable_example.json"));
  CHECK(r.exit_code == 0);
  const std::string body = slurp(out);
  CHECK(body.find("k,alpha_star,bound_T1,bound_T3,bound_T4,bound_T6,winner") !=
        std::string::npos);
  CHECK(body.find("\n2,") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("attack command prints the exit summary") {
  const std::string out = std::string(CRITSCALE_CONFIG_DIR) + "/../build/attack_test_out.csv";
  RunResult r =
      run("attack --alpha 0.30 --x0 0,0 --out " + out + " " + cfg("unstable_example.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("exit at k=12") != std::string::npos);
  const std::string body = slurp(out);
  CHECK(body.find("k,x1,x2,u1,w1,w2,in_X") != std::string::npos);
  std::remove(out.c_str());

  RunResult no = run("attack --alpha 0.0 --max-steps 50 " + cfg("unstable_example.json"));
  CHECK(no.exit_code == 0);
  CHECK(no.output.find("no exit within 50") != std::string::npos);
}

TEST_CASE("exit codes") {
  // 2: malformed config
  const std::string badpath = std::string(CRITSCALE_CONFIG_DIR) + "/../build/bad_config.json";
  {
    std::ofstream bad(badpath);
    bad << "{ definitely not json";
  }
  CHECK(run("spectral " + badpath).exit_code == 2);
  std::remove(badpath.c_str());

  // 2: missing file
  CHECK(run("bounds /nonexistent.json").exit_code == 2);

  // 3: no applicable bound (irrational complex angle)
  const std::string irrpath = std::string(CRITSCALE_CONFIG_DIR) + "/../build/irrational.json";
  {
    std::ofstream irr(irrpath);
    irr << R"({
      "system": {
        "A": [[0.648362767041768, -1.009765181769476], [1.009765181769476, 0.648362767041768]],
        "B": [[1,0],[0,1]],
        "X": {"type": "box", "lower": [-3,-3], "upper": [3,3]},
        "U": {"type": "box", "lower": [-1,-1], "upper": [1,1]},
        "Wbar": {"type": "box", "lower": [-1,-1], "upper": [1,1]}
      }
    })";  // 1.2 * R(1 rad): theta/pi is irrational beyond denominator 64
  }
  CHECK(run("bounds " + irrpath).exit_code == 3);

  // 4: oracle on an n = 3 system
  const std::string threedpath = std::string(CRITSCALE_CONFIG_DIR) + "/../build/threed.json";
  {
    std::ofstream td(threedpath);
    td << R"({
      "system": {
        "A": [[2.0,0,0],[0,0.5,0],[0,0,0.25]],
        "B": [[1,0,0],[0,1,0],[0,0,1]],
        "X": {"type": "box", "lower": [-3,-3,-3], "upper": [3,3,3]},
        "U": {"type": "box", "lower": [-1,-1,-1], "upper": [1,1,1]},
        "Wbar": {"type": "box", "lower": [-1,-1,-1], "upper": [1,1,1]}
      }
    })";
  }
  CHECK(run("oracle " + threedpath).exit_code == 4);
  CHECK(run("bounds " + threedpath).exit_code == 0);  // bounds work in any n

  // 5: alpha_hi too small for the oracle bracket
  RunResult hi = run("oracle --alpha-hi 0.000001 " + cfg("unstable_example.json"));
  CHECK(hi.exit_code == 5);
  CHECK(hi.output.find("UpperBoundNotEmpty") != std::string::npos);

  // attack on a complex block: unsupported
  CHECK(run("attack --alpha 0.5 " + irrpath).exit_code == 4);
  std::remove(irrpath.c_str());
  std::remove(threedpath.c_str());
}
