#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "telecode/cli.hpp"
#include "telecode/correlations.hpp"
#include "telecode/json_io.hpp"
#include "telecode/protocols.hpp"

using namespace telecode;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json report(const CliRun& r) { return Json::parse(r.out); }

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("telecode_test_" + name)).string();
}

Json strip_time(Json j) {
  j.erase("wall_time");
  return j;
}

}  // namespace

TEST(Cli, VerifyIsomorphism) {
  const CliRun r = call({"verify", "--suite", "isomorphism", "--d", "2", "--dim", "4", "--seed", "0"});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  const Json j = report(r);
  EXPECT_TRUE(j["summary"]["pass"].get<bool>());
  EXPECT_LT(j["summary"]["max_residual"].get<double>(), 1e-10);
  EXPECT_EQ(j["command"]["suite"], "isomorphism");
  EXPECT_DOUBLE_EQ(j["thresholds"]["crossed"].get<double>(), 1e-12);
}

TEST(Cli, CorrelationReport) {
  const CliRun r = call({"correlation", "--target", "f4_m2", "--levels", "16"});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  const Json j = report(r);
  EXPECT_GT(j["result"]["distance"].get<double>(), 0.0);
  EXPECT_EQ(j["result"]["entries"].size(), 16u);
  EXPECT_EQ(j["result"]["obstruction"]["case"], "relations_violated");
  for (const char* k : {"target", "N", "entries", "deviations", "distance", "obstruction"})
    EXPECT_TRUE(j["result"].contains(k)) << k;
}

TEST(Cli, TeleportFromFile) {
  const std::string path = tmp("rho.json");
  save_json_file(path, matrix_to_json(DensityMatrix::random(3, 1).matrix()));
  const CliRun r = call({"teleport", "--d", "3", "--rho", path});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  const CMatrix out = matrix_from_json(report(r)["result"]["output"]);
  EXPECT_LT((out - DensityMatrix::random(3, 1).matrix()).norm(), 1e-10);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, cli::kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(call({"verify", "--suite", "nope"}).code, cli::kExitUsage);
  EXPECT_EQ(call({"correlation", "--target", "nope"}).code, cli::kExitUsage);
  EXPECT_EQ(call({"teleport", "--d", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(call({"verify", "--tol", "-1"}).code, cli::kExitUsage);
  EXPECT_EQ(call({"obstruct", "--in", "/nonexistent.json"}).code, cli::kExitUsage);
  EXPECT_EQ(call({"words", "reduce"}).code, cli::kExitUsage);
  EXPECT_EQ(call({"--help"}).code, cli::kExitPass);
}

TEST(Cli, FaultInjectionFails) {
  const CliRun r = call({"isomorphism-check", "--d", "2", "--inject-fault"});
  EXPECT_EQ(r.code, cli::kExitFail);
  EXPECT_NE(r.err.find("FAIL"), std::string::npos);
  // an impossible tolerance also fails verification rather than usage
  EXPECT_EQ(call({"teleport", "--d", "3", "--tol", "1e-300"}).code, cli::kExitFail);
}

TEST(Cli, DeterministicModuloWallTime) {
  const std::vector<std::string> args = {"verify", "--suite", "pauli", "--d", "3", "--n", "10", "--seed", "7"};
  const CliRun a = call(args), b = call(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(strip_time(report(a)).dump(), strip_time(report(b)).dump());
}

TEST(Cli, SeedEnvironmentOverride) {
  ::setenv("TELECODE_SEED", "11", 1);
  const Json a = report(call({"superdense", "--d", "2", "--seed", "3"}));
  ::unsetenv("TELECODE_SEED");
  const Json b = report(call({"superdense", "--d", "2", "--seed", "11"}));
  EXPECT_EQ(a["command"]["seed"], 11);
  EXPECT_EQ(a["result"]["input"], b["result"]["input"]);
  ::setenv("TELECODE_SEED", "abc", 1);
  EXPECT_EQ(call({"superdense"}).code, cli::kExitUsage);
  ::unsetenv("TELECODE_SEED");
}

TEST(Cli, ObstructShiftAndCertificate) {
  const CliRun r = call({"obstruct", "--depth", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(report(r)["result"]["verdict"]["case"], "relations_violated");
  const std::string path = tmp("cert.json");
  save_json_file(path, certificate_to_json(random_certificate(2, 3, 4)));
  const CliRun c = call({"obstruct", "--in", path});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_GT(report(c)["result"]["verdict"]["residual"].get<double>(), 0.1);
}

TEST(Cli, WordsActions) {
  Json j = report(call({"words", "reduce", "s0 s0 g", "--group", "zzf"}));
  EXPECT_EQ(j["result"]["reduced"], "g");
  j = report(call({"words", "embed", "g", "--embedding", "v"}));
  EXPECT_EQ(j["result"]["image"], "a b2 a2 b");
  j = report(call({"words", "trace", "g01 g10", "--d", "2"}));
  EXPECT_EQ(j["result"]["trivial_base"], false);
  EXPECT_EQ(j["result"]["labels"].size(), 3u);
}

TEST(Cli, OutAndCsv) {
  const std::string out = tmp("rep.json"), csv = tmp("rep.csv");
  const CliRun r = call({"embezzle", "--levels", "8", "--out", out, "--csv", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("checks passed"), std::string::npos);
  const Json j = load_json_file(out);
  EXPECT_NEAR(j["result"]["err"].get<double>(), 0.517694908639, 1e-11);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "name,ref,residual,threshold,pass");
}

TEST(Cli, SchmidtAndSuperdense) {
  EXPECT_EQ(call({"schmidt", "--dim", "3", "--seed", "2"}).code, 0);
  EXPECT_EQ(call({"superdense", "--d", "4"}).code, 0);
}

TEST(Cli, VerifySuitesPass) {
  for (const char* s : {"pauli", "protocols", "words", "embezzlement", "correlations"}) {
    const CliRun r = call({"verify", "--suite", s, "--n", "5", "--levels", "64", "--jobs", "2"});
    EXPECT_EQ(r.code, 0) << s << "\n" << r.err;
  }
}
