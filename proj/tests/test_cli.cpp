#include "srf/cli/cli.hpp"
#include "srf/cli/report.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace srf;
using namespace srf::cli;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "srf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json payload(const std::string& text) {
  Json j = Json::parse(text);
  return Json{{"results", j["results"]}, {"checks", j["checks"]}, {"tables", j["tables"]}, {"status", j["status"]}};
}

}  // namespace

TEST(Cli, GramJson) {
  const Invocation r = run({"gram", "--y", "0.1", "--support", "0,1,2", "--format", "json"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema_version"], "1");
  EXPECT_EQ(j["status"], "pass");
  ASSERT_EQ(j["results"]["matrix"].size(), 3u);
  const HPReal g01 = hp_from_json(j["results"]["matrix"][0][1]);
  EXPECT_EQ(g01.precision(), 256);
  EXPECT_LE(abs(g01 - HPReal::parse("0.98363164308346596735", 256)), 1e-19);
  EXPECT_TRUE(hp_from_json(j["results"]["matrix"][2][2]) == 1.0);
  EXPECT_EQ(j["config"]["seed"], 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"bounds", "--y", "0.6", "--n", "4"}).code, kUsageError);
  EXPECT_EQ(run({"smin", "--y", "0.1", "--srf", "10"}).code, kUsageError);
  EXPECT_EQ(run({"smin"}).code, kUsageError);
  EXPECT_EQ(run({"smin", "--y", "0.1", "--precision-bits", "32"}).code, kUsageError);
  EXPECT_EQ(run({"frobnicate", "--y", "0.1"}).code, kUsageError);
  EXPECT_EQ(run({"smin", "--y", "abc"}).code, kUsageError);
  EXPECT_EQ(run({"epsilon", "--y", "0.1", "--mode", "greedy"}).code, kUsageError);
  EXPECT_EQ(run({"scaling", "--y", "0.1"}).code, kUsageError);
  const Invocation bad = run({"smin", "--y", "0.6"});
  EXPECT_TRUE(bad.out.empty());
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, ComputationalErrors) {
  const Invocation r = run({"recover", "--y", "0.2", "--support", "0,2,4", "--values", "1,1,1", "--sigma", "1e-30", "--k", "1"});
  EXPECT_EQ(r.code, kComputeError);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ScalingSlope) {
  const Invocation r = run({"scaling", "--k", "2", "--srf-grid", "8,12,16,24,32"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_NEAR(hp_from_json(j["results"]["slope"]).to_double(), -3.0, 0.15);
  EXPECT_EQ(j["tables"][0]["rows"].size(), 5u);
}

TEST(Cli, SrfAndYGiveIdenticalPayloads) {
  const Invocation a = run({"smin", "--srf", "10", "--support", "0,1,3"});
  const Invocation b = run({"smin", "--y", "0.1", "--support", "0,1,3"});
  ASSERT_EQ(a.code, kPass);
  ASSERT_EQ(b.code, kPass);
  EXPECT_EQ(payload(a.out), payload(b.out));
  EXPECT_EQ(Json::parse(a.out)["config"]["parameter"], Json::parse(b.out)["config"]["parameter"]);
}

TEST(Cli, DeterministicApartFromTimestamp) {
  const std::vector<std::string> args = {"bounds", "--y", "0.3", "--n", "2", "--samples", "5", "--seed", "9"};
  Json a = Json::parse(run(args).out);
  Json b = Json::parse(run(args).out);
  a.erase("timestamp");
  b.erase("timestamp");
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["status"], "pass");
}

TEST(Cli, JsonRoundTrip) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"minimax", "--y", "0.2", "--k", "1", "--sigma", "1e-4"},
           {"spark", "--y", "0.1", "--eps", "0.1", "--k", "4"},
           {"szego", "--y", "0.1", "--z", "2,1", "--zeta", "inf", "--w", "1.5,0.5"}}) {
    const Invocation r = run(args);
    ASSERT_EQ(r.code, kPass) << args[0] << r.err;
    const Report rep = report_from_json(Json::parse(r.out));
    EXPECT_EQ(report_from_json(to_json(rep)), rep) << args[0];
    EXPECT_EQ(to_json(rep).dump(2) + "\n", r.out) << args[0];
  }
}

TEST(Cli, CsvChecksRoundTrip) {
  const Invocation json = run({"bounds", "--y", "0.1", "--n", "2", "--samples", "4"});
  const Invocation csv = run({"bounds", "--y", "0.1", "--n", "2", "--samples", "4", "--format", "csv"});
  ASSERT_EQ(csv.code, kPass) << csv.err;
  const Report rep = report_from_json(Json::parse(json.out));
  const std::vector<BoundCheck> back = checks_from_csv(csv.out);
  ASSERT_EQ(back.size(), rep.checks.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].name, rep.checks[i].name);
    EXPECT_TRUE(back[i].lhs == rep.checks[i].lhs) << back[i].name;
    EXPECT_TRUE(back[i].rhs == rep.checks[i].rhs) << back[i].name;
    EXPECT_TRUE(back[i].slack == rep.checks[i].slack) << back[i].name;
    EXPECT_EQ(back[i].satisfied, rep.checks[i].satisfied);
  }
  const auto sections = parse_csv(csv.out);
  ASSERT_EQ(sections.size(), 3u);
  EXPECT_EQ(sections[0].header, (std::vector<std::string>{"name", "lhs", "rhs", "slack", "satisfied"}));
  EXPECT_EQ(sections[2].title, "table ratios");
  EXPECT_EQ(sections[2].rows, rep.tables[1].rows);
}

TEST(Cli, SparkSaturationIsPartial) {
  const Invocation r = run({"spark", "--y", "0.1", "--eps", "1e-30", "--k", "2"});
  ASSERT_EQ(r.code, kPass);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "partial");
  EXPECT_EQ(j["results"]["spark"], 2);
  EXPECT_EQ(run({"spark", "--y", "0.1", "--eps", "1.1"}).out.find("\"spark\": 0") != std::string::npos, true);
}

TEST(Cli, RecoverAndOutputFile) {
  const std::string path = ::testing::TempDir() + "srf_recover.json";
  const Invocation r = run({"recover", "--y", "0.2", "--support", "1,5", "--values", "1,-0.7", "--window", "0..7",
                     "--sigma", "1e-20", "--k", "3", "--output", path});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  EXPECT_EQ(j["results"]["support"], Json::array({1, 5}));
  EXPECT_EQ(j["results"]["window"].size(), 8u);
  std::remove(path.c_str());
}

TEST(Cli, FailedChecksExitOne) {
  // Near SRF = 2 the eps_6 curve is still far from its asymptotic slope of -5.
  const Invocation r = run({"scaling", "--k", "3", "--srf-grid", "2.1,2.2,2.3,2.4"});
  EXPECT_EQ(r.code, kChecksFailed) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "fail");
  EXPECT_FALSE(j["checks"][0]["satisfied"].get<bool>());
  EXPECT_EQ(run({"asymptote", "--n", "1", "--y-grid", "0.01"}).code, kUsageError);
}

TEST(Cli, Help) { EXPECT_EQ(run({"--help"}).code, 0); }
