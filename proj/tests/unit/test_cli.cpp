#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

namespace fs = std::filesystem;
using pnspace::cli::ExitCode;

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = pnspace::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(PNSPACE_DATA_DIR) + "/" + name; }

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("pnspace_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(Cli, SibleyPrintsTwelveDecimals) {
  const CliRun r = run({"sibley", "--left", data("h0.json"), "--right", data("step_0p5.json")});
  EXPECT_EQ(r.code, ExitCode::kOk);
  EXPECT_EQ(r.out, "0.500000000000\n");
}

TEST(Cli, SibleyJson) {
  const CliRun r = run({"sibley", "--left", data("h0.json"), "--right", data("ramp.json"), "--format", "json"});
  ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out).contains("distance"));
}

TEST(Cli, MalformedInputReportsIndex) {
  const CliRun r = run({"sibley", "--left", data("h0.json"), "--right", data("bad_nonmonotone.json")});
  EXPECT_EQ(r.code, ExitCode::kConfigError);
  EXPECT_NE(r.err.find("breakpoints[2]"), std::string::npos) << r.err;
}

TEST(Cli, MissingFileAndUnknownOptionsAreConfigErrors) {
  EXPECT_EQ(run({"sibley", "--left", data("nope.json"), "--right", data("h0.json")}).code, ExitCode::kConfigError);
  EXPECT_EQ(run({"sibley", "--bogus"}).code, ExitCode::kConfigError);
  EXPECT_EQ(run({}).code, ExitCode::kConfigError);
  EXPECT_EQ(run({"axioms", "--suite", "pnn", "--dim", "2", "--order", "3"}).code, ExitCode::kConfigError);
}

TEST(Cli, HelpExitsZero) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, ExitCode::kOk);
  EXPECT_NE(r.out.find("suite"), std::string::npos);
}

TEST(Cli, TauCsvHasHeader) {
  const CliRun r = run({"tau", "--left", data("step_0p5.json"), "--right", data("ramp.json"), "--format", "csv"});
  ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
  EXPECT_EQ(r.out.rfind("x,value,right_limit\n", 0), 0u);
}

TEST(Cli, NNormOfExampleVectors) {
  const CliRun r = run({"nnorm", "--vectors", data("vectors.json")});
  ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
  EXPECT_EQ(r.out, "2.000000000000\n");
}

TEST(Cli, AxiomsSuiteIsDeterministic) {
  const std::vector<std::string> args{"axioms", "--space", "simple", "--dim", "4", "--order", "3",
                                      "--tnorm", "min", "--trials", "100", "--seed", "13"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  ASSERT_EQ(a.code, ExitCode::kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const nlohmann::json j = nlohmann::json::parse(a.out);
  EXPECT_TRUE(j.at("all_passed").get<bool>());
  EXPECT_EQ(j.at("seed"), 13);
}

TEST(Cli, MissingSeedIsGeneratedAndEchoed) {
  const CliRun r = run({"axioms", "--suite", "tnorm", "--tnorm", "prod", "--trials", "20"});
  ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
  EXPECT_NE(r.err.find("seed"), std::string::npos) << r.err;
}

TEST(Cli, ConvergeWritesTraceUnderOutDir) {
  const fs::path dir = scratch_dir("converge");
  ASSERT_EQ(setenv("PNSPACE_OUT_DIR", dir.c_str(), 1), 0);
  const CliRun r = run({"converge", "--seq", data("seq_geometric.json"), "--horizon", "60", "--trace", "trace.csv",
                     "--out", "report.json"});
  unsetenv("PNSPACE_OUT_DIR");
  ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
  std::ifstream trace(dir / "trace.csv");
  std::string header;
  std::getline(trace, header);
  EXPECT_EQ(header, "m,sibley_distance");
  EXPECT_TRUE(fs::exists(dir / "report.json"));
}

TEST(Cli, DivergentSequenceReportsNonConvergence) {
  const CliRun r = run({"converge", "--seq", data("seq_oscillating.json"), "--horizon", "60", "--format", "json"});
  ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
  EXPECT_NE(r.out.find("\"converges\": false"), std::string::npos);
}

TEST(Cli, CauchyOnHarmonic) {
  const CliRun r = run({"cauchy", "--seq", data("seq_harmonic.json"), "--horizon", "100", "--seed", "1",
                     "--format", "csv"});
  ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
  EXPECT_EQ(r.out.rfind("m,r,sibley_distance\n", 0), 0u);
}

TEST(Cli, BallPrintsBoolean) {
  EXPECT_EQ(run({"ball", "--center", "1,0,0", "--radius", "0.5", "--point", "[1.25,0,0]"}).out, "true\n");
  EXPECT_EQ(run({"ball", "--center", "1,0,0", "--radius", "0.5", "--point", "6,0,0"}).out, "false\n");
  EXPECT_EQ(run({"ball", "--center", "1,0,0", "--radius", "0", "--point", "1,0,0"}).code, ExitCode::kConfigError);
}

TEST(Cli, SuiteWithInjectedTNormFails) {
  const CliRun r = run({"suite", "--seed", "5", "--scale", "0.05", "--inject-noncommutative-tnorm", "--format", "csv"});
  EXPECT_EQ(r.code, ExitCode::kCheckFailed) << r.err;
  EXPECT_EQ(r.out.rfind("id,criterion,passed,checks,worst_margin\n", 0), 0u);
  EXPECT_NE(r.out.find("\n3,"), std::string::npos);
  EXPECT_NE(r.out.find("false"), std::string::npos);
}

}  // namespace
