#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

using Json = nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(SYMZ_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, AnalyzeWorkedExample) {
  const CliResult r = run("analyze 'x0^2*x1'");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["dim_g"], 2);
  EXPECT_EQ(j["dim_torus"], 0);
  EXPECT_EQ(j["dim_unipotent"], 1);
  ASSERT_EQ(j["nilpotent"]["square_zero"].size(), 1u);
  EXPECT_EQ(j["nilpotent"]["square_zero"][0]["images"][0]["point"], Json::parse(R"(["0","1"])"));
}

TEST(Cli, AnalyzeFermatAndCone) {
  const CliResult fermat = run("analyze 'x0^3+x1^3+x2^3' --compact");
  ASSERT_EQ(fermat.code, 0);
  const Json j = Json::parse(fermat.out);
  EXPECT_EQ(j["dim_g"], 3);
  EXPECT_EQ(j["st_blocks"]["k"], 3);

  const CliResult cone = run("analyze 'x0^3' --nvars 2");
  ASSERT_EQ(cone.code, 0);
  const Json c = Json::parse(cone.out);
  EXPECT_EQ(c["nondegenerate"], false);
  EXPECT_EQ(c["kernel"], Json::parse(R"([["0","1"]])"));
  EXPECT_EQ(run("analyze 'x0^3' --nvars 2 --require-nondegenerate").code, 3);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run("analyze 'x0^2 + x1^3'").code, 2);
  EXPECT_EQ(run("analyze 'x0^3 + x1^^3'").code, 2);
  EXPECT_EQ(run("analyze 'x0^3 + x2^3' --nvars 2").code, 2);
  EXPECT_EQ(run("analyze").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("generate quintic").code, 2);
  EXPECT_EQ(run("generate st_sum --nvars 3 --blocks 1,1").code, 2);
}

TEST(Cli, Recover) {
  CliResult r = run("recover 'x0^2*x1' 'x0^2*x1 + x0^3'");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out), Json::parse(R"([["1","0"],["3","1"]])"));
  r = run("recover 'x0^2*x1' 'x0^2*x1'");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out), Json::parse(R"([["1","0"],["0","1"]])"));
  EXPECT_EQ(run("recover 'x0^2*x1' 'x0^3+x1^3'").code, 4);
}

TEST(Cli, Check) {
  EXPECT_EQ(run("check 'x0^2*x1'").code, 0);
  const CliResult r = run("check 'x0^2*x2 + x0*x1^2'");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["checks"]["cube_zero"]["status"], "pass");
  EXPECT_EQ(j["checks"]["square_zero_count_bound"]["status"], "pass");
  const CliResult cone = run("check 'x0^3' --nvars 2");
  EXPECT_EQ(cone.code, 0);
  EXPECT_EQ(Json::parse(cone.out)["checks"]["fiber_transport"]["status"], "skipped");
  const Json no = Json::parse(run("check 'x0^2*x2 + x0*x1^2' --no-assume-finite").out);
  EXPECT_EQ(no["checks"]["cube_zero"]["status"], "skipped");
}

TEST(Cli, GenerateIsDeterministic) {
  EXPECT_EQ(run("generate fermat --nvars 3 --degree 3").out, "x0^3 + x1^3 + x2^3\n");
  const CliResult a = run("generate random --seed 1");
  const CliResult b = run("generate random --seed 1");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run("generate random --seed 2").out);
  EXPECT_EQ(run("generate prescribed_nilpotent --nvars 2 --nilpotent '[[\"0\",\"0\"],[\"1\",\"0\"]]'").code, 0);
}

TEST(Cli, CensusFlagsAndSpecFile) {
  CliResult r = run("census --kind random --nvars 3 --degree 3 --count 10 --seed 1");
  ASSERT_EQ(r.code, 0);
  std::size_t lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  EXPECT_EQ(lines, 10u);
  EXPECT_EQ(r.out, run("census --kind random --nvars 3 --degree 3 --count 10 --seed 1").out);

  const std::string path = testing::TempDir() + "symz_specs.json";
  std::ofstream(path) << R"([{"kind":"fermat","nvars":3,"degree":3},{"kind":"cone","nvars":2,"degree":3}])";
  r = run("census " + path);
  ASSERT_EQ(r.code, 0);
  const auto nl = r.out.find('\n');
  EXPECT_EQ(Json::parse(r.out.substr(0, nl))["dim_torus"], 2);
  EXPECT_EQ(Json::parse(r.out.substr(nl + 1))["status"], "degenerate");
  std::ofstream(path) << "not json";
  EXPECT_EQ(run("census " + path).code, 2);
}
