// Copyright 2026 The qkdkr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

namespace qkdkr::cli {
namespace {

namespace fs = std::filesystem;

const std::string kDataDir = QKDKR_TEST_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

double Field(const std::string& line, const std::string& key) {
  const std::size_t pos = line.find(" " + key + "=");
  if (pos == std::string::npos) return std::nan("");
  return std::strtod(line.c_str() + pos + key.size() + 2, nullptr);
}

fs::path TempDir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("qkdkr_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string Body(const std::string& csv) {
  std::string out, line;
  std::stringstream ss(csv);
  while (std::getline(ss, line)) {
    if (line.empty() || line[0] != '#') out += line + "\n";
  }
  return out;
}

std::vector<std::vector<double>> Rows(const fs::path& p) {
  std::vector<std::vector<double>> rows;
  std::stringstream ss(Body(ReadFile(p)));
  std::string line;
  std::getline(ss, line);
  while (std::getline(ss, line)) {
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    rows.push_back(row);
  }
  return rows;
}

TEST(CliKeyRate, NoiselessRate) {
  Result r = Invoke({"keyrate", "--dim", "4", "--mode", "full", "--channel", "depolarizing",
                  "--noise", "0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find(" key_rate=2 "), std::string::npos) << r.out;
}

TEST(CliKeyRate, LemmaBound) {
  Result ok = Invoke({"keyrate", "--dim", "2", "--bound", "lemma", "--noise", "0.02"});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_GT(Field(ok.out, "key_rate"), 0.0);

  Result outside = Invoke({"keyrate", "--dim", "2", "--bound", "lemma", "--noise", "0.2"});
  EXPECT_EQ(outside.code, kExitComputeError);
  EXPECT_NE(outside.err.find("bound not applicable"), std::string::npos) << outside.err;
}

TEST(CliKeyRate, NegativeRateIsNotAnError) {
  Result r = Invoke({"keyrate", "--dim", "2", "--noise", "0.1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_LT(Field(r.out, "key_rate"), 0.0);
}

TEST(CliKeyRate, CsvRow) {
  Result r = Invoke({"keyrate", "--dim", "2", "--noise", "0.0185", "--csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "2,0.0185,0.134750695731,0.731351155241,0.132933562395,0.132933562395,"
                   "0.00278171996888,winter\n");
}

TEST(CliKeyRate, UsageErrors) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"keyrate", "--mode", "sideways", "--noise", "0"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"keyrate", "--dim", "2"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"keyrate", "--dim", "2", "--noise", "0.9"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"keyrate", "--dim", "3", "--bound", "lemma", "--noise", "0.01"}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"keyrate", "--channel", "bogus", "--noise", "0"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"keyrate", "--dim", "1", "--noise", "0"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitUsage);
}

TEST(CliKeyRate, AmplitudeDamping) {
  Result r = Invoke({"keyrate", "--dim", "4", "--channel", "amp-damping", "--noise", "0.1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NEAR(Field(r.out, "epsilon"), 0.164194109071, 1e-12);
  EXPECT_NE(r.out.find("epsilon_method=general"), std::string::npos);
}

TEST(CliKeyRate, ChannelFile) {
  Result r = Invoke({"keyrate", "--channel", "file:" + kDataDir + "/depolarizing_d3.json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  Result direct = Invoke({"keyrate", "--dim", "3", "--noise", "0.06"});
  EXPECT_NEAR(Field(r.out, "key_rate"), Field(direct.out, "key_rate"), 1e-10);

  EXPECT_EQ(Invoke({"keyrate", "--dim", "4", "--channel",
                 "file:" + kDataDir + "/depolarizing_d3.json"}).code,
            kExitUsage);
  Result bad = Invoke({"keyrate", "--channel", "file:" + kDataDir + "/bad_column_sum.json"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("column 0"), std::string::npos) << bad.err;
  EXPECT_EQ(Invoke({"keyrate", "--channel", "file:/nonexistent.json"}).code, kExitUsage);
}

TEST(CliTolerance, Depolarizing) {
  Result d3 = Invoke({"tolerance", "--dim", "3", "--mode", "full", "--bound", "winter",
                   "--channel", "depolarizing"});
  EXPECT_EQ(d3.code, kExitOk);
  EXPECT_NEAR(Field(d3.out, "tolerance"), 0.03541, 5e-4);
  EXPECT_NE(d3.out.find("evaluations="), std::string::npos);
  Result d6 = Invoke({"tolerance", "--dim", "6"});
  EXPECT_NEAR(Field(d6.out, "tolerance"), 0.06169, 5e-4);
}

TEST(CliTolerance, AmplitudeDampingPartial) {
  Result r = Invoke({"tolerance", "--dim", "4", "--channel", "amp-damping", "--mode", "partial"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NEAR(Field(r.out, "tolerance"), 0.123, 2e-3);
}

TEST(CliTolerance, FileChannelIsRejected) {
  EXPECT_EQ(Invoke({"tolerance", "--channel", "file:" + kDataDir + "/depolarizing_d3.json"}).code,
            kExitUsage);
}

TEST(CliFigure, Fig4CurvesAreOrdered) {
  const fs::path dir = TempDir("fig4");
  Result r = Invoke({"figure", "fig4", "--out", dir.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto winter = Rows(dir / "fig4_winter.csv");
  auto lemma = Rows(dir / "fig4_lemma.csv");
  auto conj = Rows(dir / "fig4_conjecture.csv");
  ASSERT_EQ(winter.size(), 400u);
  for (std::size_t i = 0; i < winter.size(); ++i) {
    EXPECT_GE(winter[i][1], lemma[i][1]);
    EXPECT_GE(lemma[i][1], conj[i][1]);
  }
  const std::string text = ReadFile(dir / "fig4_winter.csv");
  EXPECT_EQ(text.rfind("# command: ", 0), 0u);
  EXPECT_NE(text.find("# tool_version: qkdkr "), std::string::npos);
  EXPECT_NE(text.find("\nnoise,delta_bound\n"), std::string::npos);
}

TEST(CliFigure, Fig3Thresholds) {
  const fs::path dir = TempDir("fig3");
  ASSERT_EQ(Invoke({"figure", "fig3", "--out", dir.string()}).code, kExitOk);
  auto tol = Rows(dir / "fig3_tolerance.csv");
  ASSERT_EQ(tol.size(), 1u);
  EXPECT_NEAR(tol[0][0], 0.0185, 5e-4);
  EXPECT_NEAR(tol[0][1], 0.0239, 5e-4);
  auto lemma = Rows(dir / "fig3_lemma.csv");
  for (const auto& row : lemma) EXPECT_LE(row[0], 0.1464);
}

TEST(CliFigure, Fig2TolerancesIncrease) {
  const fs::path dir = TempDir("fig2");
  ASSERT_EQ(Invoke({"figure", "fig2-full", "--out", dir.string()}).code, kExitOk);
  auto tol = Rows(dir / "fig2-full_tolerance.csv");
  ASSERT_EQ(tol.size(), 11u);
  EXPECT_EQ(tol.front()[0], 10.0);
  EXPECT_EQ(tol.back()[0], 110.0);
  for (std::size_t i = 1; i < tol.size(); ++i) EXPECT_GT(tol[i][1], tol[i - 1][1]);
  EXPECT_TRUE(fs::exists(dir / "fig2-full_D110.csv"));
}

TEST(CliFigure, OutputIsDeterministic) {
  const fs::path a = TempDir("det_a");
  const fs::path b = TempDir("det_b");
  ASSERT_EQ(Invoke({"figure", "ampdamp-partial", "--out", a.string(), "--grid", "0:0.3:0.01"}).code,
            kExitOk);
  ASSERT_EQ(Invoke({"figure", "ampdamp-partial", "--out", b.string(), "--grid", "0:0.3:0.01"}).code,
            kExitOk);
  for (const char* f : {"ampdamp-partial_D4.csv", "ampdamp-partial_D12.csv",
                        "ampdamp-partial_tolerance.csv"}) {
    const std::string body = Body(ReadFile(a / f));
    EXPECT_EQ(body, Body(ReadFile(b / f))) << f;
    EXPECT_FALSE(body.empty());
  }
  EXPECT_EQ(Rows(a / "ampdamp-partial_D4.csv").size(), 31u);
}

TEST(CliFigure, Fig1Overlay) {
  const fs::path dir = TempDir("fig1");
  Result r = Invoke({"figure", "fig1", "--out", dir.string(), "--overlay",
                  kDataDir + "/prior_work_overlay.csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (int d = 2; d <= 8; ++d) {
    EXPECT_TRUE(fs::exists(dir / ("fig1_D" + std::to_string(d) + ".csv")));
  }
  auto overlay = Rows(dir / "fig1_prior_work.csv");
  ASSERT_EQ(overlay.size(), 3u);
  EXPECT_EQ(overlay[1][0], 0.05);
  EXPECT_EQ(overlay[1][1], 0.5);
}

TEST(CliFigure, UsageErrors) {
  const fs::path dir = TempDir("bad");
  EXPECT_EQ(Invoke({"figure", "fig1", "--out", dir.string(), "--overlay", "/nonexistent.csv"}).code,
            kExitUsage);
  EXPECT_FALSE(fs::exists(dir / "fig1_D2.csv"));
  EXPECT_EQ(Invoke({"figure", "fig9", "--out", dir.string()}).code, kExitUsage);
  EXPECT_EQ(Invoke({"figure", "fig4", "--out", dir.string(), "--overlay", "x.csv"}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"figure", "fig4", "--out", dir.string(), "--grid", "0:1"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"figure", "fig4", "--out", dir.string(), "--grid", "0:1:-1"}).code,
            kExitUsage);
}

TEST(CliVerify, SmallRunPasses) {
  Result r = Invoke({"verify", "--seed", "7", "--trials", "2", "--dims", "2,3"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("verify: PASS"), std::string::npos);
  EXPECT_NE(r.out.find("suite=horn checked=8 failed=0"), std::string::npos) << r.out;
}

TEST(CliVerify, QubitDepolarizingIncludesLemmaChecks) {
  Result r = Invoke({"verify", "--family", "depolarizing", "--dims", "2", "--trials", "4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.find("suite=delta_vs_lemma checked=0"), std::string::npos) << r.out;
}

TEST(CliVerify, ZeroTrialsWarns) {
  Result r = Invoke({"verify", "--trials", "0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

}  // namespace
}  // namespace qkdkr::cli
