// Copyright 2026 The Goalcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "goalcheck/dataset.h"
#include "json.hpp"

namespace goalcheck {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "goalcheck");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("goalcheck-cli-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  std::string Write(const std::string& name, const std::string& text) const {
    WriteTextFile(dir_ / name, text);
    return Path(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"bogus"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"compile", Path("missing.txt")}).code, kExitUsage);
  EXPECT_EQ(Invoke({"reward", "--group-size", "1", "1", "0"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"reward"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"generate", "-o", Path("d"), "--min-steps", "5", "--max-steps", "2"}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"score", "--verdicts", Path("none")}).code, kExitUsage);
  const CliResult help = Invoke({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("train-toy"), std::string::npos);
}

TEST_F(CliTest, RewardRow) {
  const CliResult r = Invoke({"reward", "1", "1", "1", "0"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "reward=0.75\n");
  EXPECT_EQ(Invoke({"reward", "--mode", "FA", "1", "1", "1", "0"}).out, "reward=0\n");
  EXPECT_EQ(Invoke({"reward", "--mode", "SC", "1", "1", "1"}).out, "reward=1\n");
  EXPECT_EQ(Invoke({"reward", "1", "x"}).code, kExitData);
}

TEST_F(CliTest, RewardGroupsAdvantages) {
  const std::string in = Write("rows.txt", "1 1\n0 0\n# comment\n1 0\n");
  const CliResult r = Invoke({"reward", "--group-size", "2", "--input", in, "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["trajectories"].size(), 3u);
  EXPECT_NEAR(j["trajectories"][0]["advantage"].get<double>(), 1.0, 1e-7);
  EXPECT_NEAR(j["trajectories"][1]["advantage"].get<double>(), -1.0, 1e-7);
  EXPECT_TRUE(j["trajectories"][2]["advantage"].is_null());
  EXPECT_EQ(j["trajectories"][2]["reward"], 0.5);
}

TEST_F(CliTest, CompileTextAndJson) {
  const std::string skel = Write("s.txt", "lconst[A,B,1]\npara[A,B,C,D]\n");
  const CliResult text = Invoke({"compile", skel});
  EXPECT_EQ(text.code, kExitOk) << text.err;
  EXPECT_EQ(text.out.rfind("T0 length 1 len(A,B)\n", 0), 0u);
  const auto j = nlohmann::json::parse(Invoke({"compile", skel, "--format", "json"}).out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["id"], "T1");
  EXPECT_EQ(Invoke({"compile", Write("bad.txt", "lconst[A,B]\n")}).code, kExitData);
}

TEST_F(CliTest, GenerateScoreRoundTrip) {
  const std::string data = Path("data");
  const std::string truth = Path("truth");
  const CliResult gen = Invoke({"generate", "-o", data, "--count", "12", "--seed", "4",
                             "--emit-truth", truth, "--diagrams"});
  ASSERT_EQ(gen.code, kExitOk) << gen.err;
  EXPECT_TRUE(fs::exists(fs::path(data) / "diagrams" / "test-0011.svg"));

  const std::string results = Path("results.json");
  const CliResult score = Invoke({"score", data, truth, "--format", "json", "-o", results});
  ASSERT_EQ(score.code, kExitOk) << score.err;
  const auto j = nlohmann::json::parse(score.out);
  for (const char* key : {"sr", "sc", "fa", "cr"}) EXPECT_EQ(j["aggregate"][key], 100.0) << key;
  EXPECT_EQ(ReadTextFile(results), score.out);

  fs::remove(fs::path(truth) / "test-0003.txt");
  EXPECT_EQ(Invoke({"score", data, truth}).code, kExitOk);
  EXPECT_EQ(Invoke({"score", data, truth, "--strict"}).code, kExitData);

  const CliResult stats = Invoke({"stats", data, "--format", "json"});
  ASSERT_EQ(stats.code, kExitOk) << stats.err;
  EXPECT_EQ(nlohmann::json::parse(stats.out)["count"], 12);

  const std::string inst = (fs::path(data) / "instances" / "test-0000.gc").string();
  const CliResult verify = Invoke({"verify", inst, (fs::path(truth) / "test-0000.txt").string()});
  EXPECT_EQ(verify.code, kExitOk) << verify.err;
  EXPECT_NE(verify.out.find("c=1 fa=1"), std::string::npos);
  const CliResult svg = Invoke({"render", inst});
  EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);

  std::string tampered = ReadTextFile(inst);
  tampered.replace(tampered.find("[skeleton]"), 10, "[skeletn]");
  WriteTextFile(inst, tampered);
  EXPECT_EQ(Invoke({"score", data, truth}).code, kExitData);
}

TEST_F(CliTest, IngestSingleInstance) {
  const std::string points = Write("p.txt", "A 0 0\nB 3 0\nC 0 4\n");
  const std::string skel = Write("s.txt", "perp[A,B,A,C]\nlconst[B,C,5]\n");
  const std::string inst = Path("one.gc");
  const CliResult r = Invoke({"generate", "--skeleton", skel, "--points", points, "--id", "one",
                           "-o", inst, "--emit-truth", Path("t")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(ParseInstance(ReadTextFile(inst)).id, "one");
  EXPECT_EQ(Invoke({"generate", "--skeleton", skel, "-o", inst}).code, kExitUsage);
  const std::string wrong = Write("s2.txt", "lconst[B,C,6]\n");
  EXPECT_EQ(Invoke({"generate", "--skeleton", wrong, "--points", points, "-o", inst}).code,
            kExitData);
}

TEST_F(CliTest, ScoreVerdictRows) {
  const std::string rows = Write("v.txt", "1 1 1\n1 0 1\n0 0 0 1\n");
  const CliResult r = Invoke({"score", "--verdicts", rows, "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 3);
  EXPECT_NEAR(j["sc"].get<double>(), 100.0 / 3.0, 1e-9);
  EXPECT_NEAR(j["fa"].get<double>(), 100.0, 1e-9);
  EXPECT_EQ(Invoke({"score", "--verdicts", Write("e.txt", "# none\n")}).code, kExitData);
}

TEST_F(CliTest, TrainToyTraceIsDeterministic) {
  const std::vector<std::string> args = {"train-toy", "--iterations", "5", "--problems", "3",
                                         "--seed", "9"};
  const CliResult a = Invoke(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, Invoke(args).out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 5);
  const std::string cfg = Write("train.ini", "[train-toy]\niterations=2\nproblems=2\n");
  const CliResult c = Invoke({"train-toy", "--config", cfg});
  ASSERT_EQ(c.code, kExitOk) << c.err;
  EXPECT_EQ(std::count(c.out.begin(), c.out.end(), '\n'), 2);
  EXPECT_EQ(Invoke({"train-toy", "--config", Write("bad.ini", "[train-toy]\nbogus=1\n")}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"train-toy", "--config", Path("none.ini")}).code, kExitUsage);
  EXPECT_EQ(Invoke({"train-toy", "--lr", "0"}).code, kExitUsage);
}

}  // namespace
}  // namespace goalcheck
