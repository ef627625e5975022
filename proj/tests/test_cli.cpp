#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "predomain/cli.hpp"

using namespace predomain;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "predomain");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("predomain_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    write("train.csv", "id,score,label\na,0.1,live\nb,0.2,live\nc,0.8,fake\nd,0.9,fake\n");
    write("dev.csv", "a,0.15,live\nb,0.35,live\nc,0.6,fake\nd,0.95,fake\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name, std::ios::binary) << text;
    return path(name);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, AnalyzeTextSmoke) {
  const auto r = run({"analyze", "--in", path("train.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("# predomain 0.1.0 analyze"), std::string::npos);
  EXPECT_NE(r.out.find("live"), std::string::npos);
  EXPECT_NE(r.out.find("fake"), std::string::npos);
}

TEST_F(Cli, AnalyzeJsonSchema) {
  const auto r = run({"analyze", "--in", path("train.csv"), "--format", "json", "--center", "mean"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["tool"], "predomain");
  EXPECT_EQ(j["command"], "analyze");
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_NEAR(j["rows"][0]["center"].get<double>(), 0.15, 1e-12);
  EXPECT_NEAR(j["rows"][0]["radius"].get<double>(), 0.025, 1e-12);
  EXPECT_EQ(j["rows"][0]["center_method"], "mean");
  EXPECT_TRUE(j["rows"][0]["selected_index"].is_null());
}

TEST_F(Cli, ThresholdsAllHasSixRows) {
  const auto r = run({"thresholds", "--in", path("train.csv"), "--dev", path("dev.csv"), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 6u);
  EXPECT_EQ(j["rows"][0]["strategy"], "fake-border");
  EXPECT_TRUE(j["rows"][0]["dev"].contains("acer"));
  EXPECT_EQ(j["rows"][0]["train"]["apcer"], 0.5);

  const auto csv = run({"thresholds", "--in", path("train.csv"), "--format", "csv"});
  ASSERT_EQ(csv.code, kExitOk);
  std::size_t data_lines = 0;
  std::istringstream lines(csv.out);
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty() && line[0] != '#') ++data_lines;
  }
  EXPECT_EQ(data_lines, 7u);  // header + 6
}

TEST_F(Cli, RocReportsAuc) {
  const auto r = run({"roc", "--in", path("train.csv"), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["auc"].get<double>(), 1.0);
}

TEST_F(Cli, SynthIsDeterministicAndReadable) {
  const auto a = run({"synth", "--n", "50", "--seed", "7", "--clamp", "0,1"});
  const auto b = run({"synth", "--n", "50", "--seed", "7", "--clamp", "0,1"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"synth", "--n", "50", "--seed", "8"}).out);

  const auto live = run({"synth", "--n", "30", "--out", path("live.csv")});
  ASSERT_EQ(live.code, kExitOk);
  const auto fake = run({"synth", "--n", "30", "--mean", "0.9", "--seed", "3", "--label", "fake"});
  std::ofstream append(path("live.csv"), std::ios::app);
  std::istringstream rows(fake.out);
  for (std::string line; std::getline(rows, line);) {
    if (line.rfind("s", 0) == 0) append << line << '\n';
  }
  append.close();
  EXPECT_EQ(run({"analyze", "--in", path("live.csv")}).code, kExitOk);
}

TEST_F(Cli, VizWritesSvg) {
  const auto r = run({"viz", "--in", path("train.csv"), "--out", path("a.svg"), "--thresholds", "all"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto svg = slurp(path("a.svg"));
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("data-strategy=\"acer-left\""), std::string::npos);

  const auto cmp = run({"viz", "--in", path("train.csv"), "--after", path("dev.csv"), "--out", path("b.svg")});
  ASSERT_EQ(cmp.code, kExitOk) << cmp.err;
  EXPECT_NE(slurp(path("b.svg")).find("data-panel=\"after\""), std::string::npos);
}

TEST_F(Cli, CompareRowsPerClass) {
  const auto r = run({"compare", "--before", path("train.csv"), "--after", path("dev.csv"), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "compare");
  EXPECT_FALSE(j["rows"].empty());
}

TEST_F(Cli, DataErrorsExitOneWithLocation) {
  write("bad.csv", "a,0.1,live\nb,NaN,fake\n");
  const auto r = run({"analyze", "--in", path("bad.csv")});
  EXPECT_EQ(r.code, kExitDataError);
  EXPECT_NE(r.err.find("error[data]"), std::string::npos);
  EXPECT_NE(r.err.find("line=2"), std::string::npos);

  write("one.csv", "a,0.1,live\n");
  EXPECT_EQ(run({"thresholds", "--in", path("one.csv")}).code, kExitDataError);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "--in", path("train.csv"), "--center", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze"}).code, kExitUsage);
  EXPECT_EQ(run({"thresholds", "--in", path("train.csv"), "--strategy", "best"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "--in", path("missing.csv")}).code, kExitUsage);
}

TEST_F(Cli, HelpAndVersionExitZero) {
  auto r = run({"--version"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE((r.out + r.err).find("predomain 0.1.0"), std::string::npos);
  r = run({"thresholds", "--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("Example:"), std::string::npos);
}

TEST_F(Cli, EverySubcommandIsByteIdenticalAcrossRuns) {
  const std::vector<std::vector<std::string>> commands = {
      {"analyze", "--in", path("train.csv")},
      {"thresholds", "--in", path("train.csv"), "--dev", path("dev.csv")},
      {"roc", "--in", path("train.csv"), "--format", "csv"},
      {"synth", "--n", "20"},
      {"compare", "--before", path("train.csv"), "--after", path("dev.csv")},
  };
  for (const auto& c : commands) {
    EXPECT_EQ(run(c).out, run(c).out) << c[0];
  }
  run({"viz", "--in", path("train.csv"), "--out", path("x.svg")});
  run({"viz", "--in", path("train.csv"), "--out", path("y.svg")});
  EXPECT_EQ(slurp(path("x.svg")), slurp(path("y.svg")));
}
