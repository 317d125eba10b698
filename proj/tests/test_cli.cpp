// Copyright 2026 The minorkit Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "minorkit/formats.hpp"
#include "minorkit/generators.hpp"
#include "minorkit/serialize.hpp"
#include "minorkit_cli/cli.hpp"

namespace minorkit::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "minorkit");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("minorkit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST(Sha256, KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_F(CliTest, GenerateGnpIsFrozen) {
  const CliRun r = run_cli({"generate", "gnp", "--n", "10", "--p", "0.5", "--seed", "7", "--out", path("gnp")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(slurp(dir_ / "gnp" / "gnp-0000.g6"), "Iv\\MKR@[O\n");
  const auto manifest = nlohmann::json::parse(slurp(dir_ / "gnp" / "manifest.json"));
  EXPECT_EQ(manifest["schema"], 1);
  EXPECT_EQ(manifest["seed"], 7);
  ASSERT_EQ(manifest["graphs"].size(), 1u);
  EXPECT_EQ(manifest["graphs"][0]["digest"], "f3a52d88c3c02cabfaff8cf121de213cba5dcb5fccd388608dcdfeded5bb4455");
  EXPECT_EQ(manifest["graphs"][0]["size"], 22);

  const CliRun again = run_cli({"generate", "gnp", "--n", "10", "--p", "0.5", "--seed", "7", "--out", path("again")});
  ASSERT_EQ(again.code, kExitOk);
  EXPECT_EQ(slurp(dir_ / "again" / "gnp-0000.g6"), slurp(dir_ / "gnp" / "gnp-0000.g6"));
}

TEST_F(CliTest, GenerateStructuredKinds) {
  ASSERT_EQ(run_cli({"generate", "multipartite", "--m", "3", "--r", "2", "--out", path("mp")}).code, kExitOk);
  const std::string mp = slurp(dir_ / "mp" / "multipartite-0000.g6");
  EXPECT_EQ(mp, "EFz_\n");
  EXPECT_EQ(parse_graph6_lines(mp).front(), complete_bipartite(3, 3));

  ASSERT_EQ(run_cli({"generate", "grid", "--rows", "3", "--cols", "3", "--out", path("grid")}).code, kExitOk);
  EXPECT_EQ(parse_graph6_lines(slurp(dir_ / "grid" / "grid-0000.g6")).front().size(), 12u);

  ASSERT_EQ(run_cli({"generate", "petersen", "--out", path("p")}).code, kExitOk);
  EXPECT_EQ(parse_graph6_lines(slurp(dir_ / "p" / "petersen-0000.g6")).front(), petersen_graph());

  ASSERT_EQ(run_cli({"generate", "gnp", "--n", "8", "--p", "0.3", "--count", "3", "--seed", "1", "--out", path("three")}).code,
            kExitOk);
  EXPECT_TRUE(fs::exists(dir_ / "three" / "gnp-0002.g6"));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"generate", "gnp", "--n", "5", "--p", "2", "--out", path("x")}).code, kExitUsage);
  EXPECT_EQ(run_cli({"generate", "hypercube", "--out", path("x")}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "no-such-suite", "--corpus", "enum:3"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "mader"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "mader", "--corpus", "enum:12"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"find", "clique-minor", "--named", "dodecahedron", "--t", "3"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"find", "clique-minor", "--named", "petersen", "--graph", "x.g6", "--t", "3"}).code, kExitUsage);
}

TEST_F(CliTest, VerifyEmptyCorpus) {
  fs::create_directories(dir_ / "empty");
  const CliRun r = run_cli({"verify", "mader", "--corpus", path("empty")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto report = nlohmann::json::parse(r.out);
  EXPECT_EQ(report["schema"], 1);
  EXPECT_TRUE(report["instances"].empty());
  EXPECT_EQ(report["summary"]["fail"], 0);
}

TEST_F(CliTest, VerifyIsDeterministicAcrossJobs) {
  const CliRun one = run_cli({"verify", "geodesic-express", "--corpus", "gnp:30:12:0.3", "--seed", "5", "--jobs", "1",
                           "--out", path("one.json")});
  const CliRun four = run_cli({"verify", "geodesic-express", "--corpus", "gnp:30:12:0.3", "--seed", "5", "--jobs", "4",
                            "--out", path("four.json")});
  ASSERT_EQ(one.code, kExitOk) << one.err;
  ASSERT_EQ(four.code, kExitOk) << four.err;
  EXPECT_EQ(slurp(path("one.json")), slurp(path("four.json")));
  const auto report = nlohmann::json::parse(slurp(path("one.json")));
  EXPECT_EQ(report["instances"].size(), 30u);
  EXPECT_EQ(report["summary"]["fail"], 0);

  const CliRun check = run_cli({"check", "--report", path("one.json")});
  EXPECT_EQ(check.code, kExitOk) << check.err;
  EXPECT_GT(recheck_report(slurp(path("one.json"))), 0);

  const CliRun other_seed = run_cli({"verify", "geodesic-express", "--corpus", "gnp:30:12:0.3", "--seed", "6"});
  EXPECT_NE(other_seed.out, slurp(path("one.json")));
}

TEST_F(CliTest, TamperedReportIsRejected) {
  ASSERT_EQ(run_cli({"verify", "degeneracy-color", "--corpus", "gnp:5:8:0.5", "--out", path("r.json")}).code, kExitOk);
  auto report = nlohmann::ordered_json::parse(slurp(path("r.json")));
  bool tampered = false;
  for (auto& inst : report["instances"]) {
    if (!inst["certificate"].is_object()) continue;
    auto& colours = inst["certificate"]["coloring"];
    if (colours.size() >= 2 && inst["size"].get<int>() > 0) {
      for (auto& c : colours) c = 1;
      tampered = true;
      break;
    }
  }
  ASSERT_TRUE(tampered);
  {
    std::ofstream out(path("bad.json"));
    out << report.dump(2);
  }
  EXPECT_EQ(run_cli({"check", "--report", path("bad.json")}).code, kExitFailure);
}

TEST_F(CliTest, FindClassesAndCertificates) {
  const CliRun k5 = run_cli({"find", "clique-minor", "--named", "petersen", "--t", "5", "--out", path("k5.json")});
  ASSERT_EQ(k5.code, kExitOk) << k5.err;
  EXPECT_TRUE(verify_certificate_json(petersen_graph(), slurp(path("k5.json"))));
  EXPECT_EQ(run_cli({"check", "--named", "petersen", "--certificate", path("k5.json")}).code, kExitOk);
  EXPECT_EQ(run_cli({"check", "--named", "cycle:10", "--certificate", path("k5.json")}).code, kExitFailure);

  EXPECT_EQ(run_cli({"find", "clique-minor", "--named", "path:6", "--t", "3"}).code, kExitAbsent);
  EXPECT_EQ(run_cli({"find", "clique-minor", "--named", "petersen", "--t", "6", "--budget", "10"}).code, kExitExhausted);
  EXPECT_EQ(run_cli({"find", "biclique-minor", "--named", "grid:3x3", "--s", "2", "--t", "2"}).code, kExitOk);
  EXPECT_EQ(run_cli({"find", "linkage", "--named", "cycle:4", "--pairs", "0-2,1-3"}).code, kExitAbsent);
  EXPECT_EQ(run_cli({"find", "linkage", "--named", "complete:4", "--pairs", "0-1", "--parity", "0"}).code, kExitOk);

  const CliRun geo = run_cli({"find", "geodesic", "--named", "grid:2x3", "--count", "2"});
  ASSERT_EQ(geo.code, kExitOk) << geo.err;
  EXPECT_NE(geo.out.find("total length: 4"), std::string::npos) << geo.out;
}

TEST(Corpus, Specs) {
  const auto small = load_corpus("enum:4", 0);
  EXPECT_EQ(small.size(), 1u + 2 + 4 + 11);
  for (std::size_t i = 1; i < small.size(); ++i) EXPECT_LE(small[i - 1].digest, small[i].digest);
  for (const Instance& inst : small) EXPECT_EQ(inst.digest, sha256_hex(inst.graph6));
  EXPECT_EQ(load_corpus("tree:7:9", 3).size(), 7u);
  EXPECT_EQ(load_corpus("gnp:4:6:0.5", 3).size(), 4u);
  EXPECT_EQ(load_corpus("gnp:4:6:0.5", 3).front().graph6, load_corpus("gnp:4:6:0.5", 3).front().graph6);
  EXPECT_THROW(load_corpus("enum:9", 0), Error);
  EXPECT_THROW(load_corpus("gnp:4:6", 0), Error);
  EXPECT_THROW(load_corpus("/nonexistent/corpus", 0), Error);
  EXPECT_EQ(suite_names().size(), 10u);
}

}  // namespace
}  // namespace minorkit::cli
