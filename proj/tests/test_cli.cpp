/*
Copyright 2026 The metricdim Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

// Runs the CLI with `args`, feeding `input` on stdin.
CliRun run(const std::string& args, const std::string& input = "") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto in_path = dir / ("metricdim_cli_in_" + std::to_string(::getpid()));
  {
    std::ofstream f(in_path);
    f << input;
  }
  const std::string cmd = std::string(METRICDIM_CLI) + " " + args + " < " + in_path.string() + " 2>/dev/null";
  CliRun r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::filesystem::remove(in_path);
  return r;
}

nlohmann::json parse(const CliRun& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, EdimOfTriangle) {
  const CliRun r = run("edim --format graph6", "Bw\n");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["value"], 2);
  EXPECT_EQ(parse(r)["optimal"], true);
}

TEST(Cli, DimOfPath) {
  const CliRun r = run("dim --format edgelist", "5 4\n0 1\n1 2\n2 3\n3 4\n");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["value"], 1);
  EXPECT_EQ(parse(r)["basis"], nlohmann::json::array({0}));
}

TEST(Cli, DisconnectedInput) {
  EXPECT_EQ(run("dim --format edgelist", "4 2\n0 1\n2 3\n").code, 3);
}

TEST(Cli, ParseErrors) {
  EXPECT_EQ(run("dim --format graph6", "B\x7f\n").code, 2);
  EXPECT_EQ(run("dim --format edgelist", "3 5\n0 1\n").code, 2);
  EXPECT_EQ(run("dim", "Bw\n").code, 2);
  EXPECT_EQ(run("dim --format adjacency", "Bw\n").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, BudgetExhaustion) {
  std::string c20 = "20 20\n";
  for (int i = 0; i < 20; ++i) c20 += std::to_string(i) + " " + std::to_string((i + 1) % 20) + "\n";
  const CliRun b = run("dim --format edgelist --budget 1", c20);
  EXPECT_EQ(b.code, 4);
  EXPECT_EQ(parse(b)["optimal"], false);
  EXPECT_EQ(parse(b)["lower_bound"], 1);
  const CliRun t = run("dim --format edgelist --budget 1 --output table", c20);
  EXPECT_NE(t.out.find("1 <= dim <= 2"), std::string::npos);
  EXPECT_EQ(run("dim --format edgelist", c20).code, 0);
}

TEST(Cli, VerifyGridCertificate) {
  const std::string g6 = parse(run("construct grid --dims 3,4"))["graph6"];
  EXPECT_EQ(run("verify --format graph6 --landmarks 0,2 --edges", g6 + "\n").code, 0);
}

TEST(Cli, VerifyTriangleFailsWithWitness) {
  const CliRun r = run("verify --format graph6 --landmarks 0 --edges", "Bw\n");
  ASSERT_EQ(r.code, 1);
  const auto j = parse(r);
  EXPECT_EQ(j["witness"]["first"], nlohmann::json::array({0, 1}));
  EXPECT_EQ(j["witness"]["second"], nlohmann::json::array({0, 2}));
}

TEST(Cli, VerifyPathEndpoint) {
  EXPECT_EQ(run("verify --format graph6 --landmarks 0", "Bg\n").code, 0);
  EXPECT_EQ(run("verify --format graph6 --landmarks 1", "Bg\n").code, 1);
}

TEST(Cli, VerifyBadLandmark) {
  EXPECT_EQ(run("verify --format graph6 --landmarks 9", "Bg\n").code, 2);
  EXPECT_EQ(run("verify --format graph6 --landmarks 0,0", "Bg\n").code, 2);
}

TEST(Cli, ConstructMdComplete) {
  const CliRun r = run("construct md-complete --k 2 --check");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["landmarks"].size(), 2u);
  EXPECT_EQ(j["check"]["ok"], true);
  EXPECT_EQ(j["check"]["solver"]["value"], 2);
}

TEST(Cli, ConstructGrid) {
  const CliRun r = run("construct grid --dims 2,3,4 --check");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["certifies"], "edges");
  EXPECT_EQ(j["landmarks"].size(), 3u);
}

TEST(Cli, ConstructMdStarReportsSurvivingStar) {
  const CliRun r = run("construct md-star --k 2 --check");
  const auto j = parse(r);
  EXPECT_GE(j["check"]["max_degree"].get<int>(), 6);
  EXPECT_EQ(r.code, j["check"]["ok"].get<bool>() ? 0 : 1);
}

TEST(Cli, ConstructRangeErrors) {
  EXPECT_EQ(run("construct md-complete --k 9").code, 2);
  EXPECT_EQ(run("construct grid").code, 2);
  EXPECT_EQ(run("construct nonsense --k 2").code, 2);
}

TEST(Cli, CheckDiameterFive) {
  const CliRun r = run("check diam-le-5 --max-n 7");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["counts"]["7"], 853);
  EXPECT_EQ(j["graphs_checked"], 994);
  EXPECT_TRUE(j["failures"].empty());
}

TEST(Cli, CheckEdgeBoundNew) {
  EXPECT_EQ(run("check edge-bound-new --max-n 6").code, 0);
}

TEST(Cli, CheckUnknownId) { EXPECT_EQ(run("check not-a-theorem").code, 2); }

TEST(Cli, CheckThreadsDeterministic) {
  const CliRun a = run("check char2-equiv --max-n 6 --no-timing --threads 1");
  const CliRun b = run("check char2-equiv --max-n 6 --no-timing --threads 4");
  EXPECT_EQ(a.out, b.out);
  const CliRun c = run("check char2-equiv --max-n 6 --no-timing");
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, ThreadsFromEnvironment) {
  EXPECT_EQ(run("check tuple-lemma --max-n 5 --no-timing", "").code, 0);
  const std::string cmd = std::string("METRICDIM_THREADS=2 ") + METRICDIM_CLI +
                          " check tuple-lemma --max-n 5 --no-timing > /dev/null 2>&1";
  EXPECT_EQ(WEXITSTATUS(std::system(cmd.c_str())), 0);
  const std::string bad = std::string("METRICDIM_THREADS=zero ") + METRICDIM_CLI +
                          " check tuple-lemma --max-n 5 > /dev/null 2>&1";
  EXPECT_EQ(WEXITSTATUS(std::system(bad.c_str())), 2);
}

TEST(Cli, BoundsTable) {
  const CliRun r = run("bounds --k 2 --d 2..4");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  ASSERT_EQ(j["rows"].size(), 3u);
  EXPECT_EQ(j["rows"][1]["D"], 3);
  EXPECT_EQ(j["rows"][1]["edge_bound_new"], "13");
  EXPECT_EQ(j["rows"][1]["edge_bound_zubrilina"], "16");
  const CliRun csv = run("bounds --k 2 --d 3 --output csv");
  EXPECT_NE(csv.out.find("2,3,13,16,11,16"), std::string::npos);
  EXPECT_EQ(run("bounds --k 2 --d 4..2").code, 2);
}

TEST(Cli, TableOutput) {
  const CliRun r = run("dim --format graph6 --output table", "Bg\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("basis       {0}"), std::string::npos);
}
