// Copyright 2026 The Chevalley Authors
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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_main.hpp"

namespace fs = std::filesystem;
using namespace chevalley;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "chevalley");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("chevalley_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenG2ByFolding) {
  const auto r = run({"gen", "--type", "G2", "--method", "fold", "--out", path("g2.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = parse_document(slurp(path("g2.json")));
  EXPECT_EQ(doc.provenance.method, "folded");
  EXPECT_EQ(doc.provenance.parent, "D4");
  EXPECT_EQ(doc.type, "G2");
}

TEST_F(Cli, GenE7ClosedThenJacobi) {
  ASSERT_EQ(run({"gen", "--type", "E7", "--method", "closed", "--out", path("e7.json")}).code, 0);
  const auto r = run({"verify", "--in", path("e7.json"), "--suite", "jacobi"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("jacobi: pass"), std::string::npos);
}

TEST_F(Cli, IllegalTypeIsUsageError) {
  const auto r = run({"gen", "--type", "B1", "--out", path("b1.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("B1"), std::string::npos);
  EXPECT_FALSE(fs::exists(path("b1.json")));
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"gen", "--type", "A2"}).code, 2);
  EXPECT_EQ(run({"gen", "--type", "A2", "--method", "magic", "--out", path("x.json")}).code, 2);
  EXPECT_EQ(run({"gen", "--type", "A2", "--epsilon", "sideways", "--out", path("x.json")}).code, 2);
  EXPECT_EQ(run({"gen", "--type", "B3", "--method", "closed", "--out", path("x.json")}).code, 2);
  EXPECT_EQ(run({"gen", "--type", "B2", "--method", "fold", "--out", path("x.json")}).code, 2);
  EXPECT_EQ(run({"gen", "--type", "E7", "--method", "fold", "--out", path("x.json")}).code, 2);
  EXPECT_EQ(run({"fold", "--type", "A4", "--out", path("x.json")}).code, 2);
  EXPECT_EQ(run({"verify", "--in", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, DefaultMethods) {
  ASSERT_EQ(run({"gen", "--type", "B2", "--out", path("b2.json")}).code, 0);
  EXPECT_EQ(parse_document(slurp(path("b2.json"))).provenance.method, "inductive");
  ASSERT_EQ(run({"gen", "--type", "F4", "--out", path("f4.json")}).code, 0);
  EXPECT_EQ(parse_document(slurp(path("f4.json"))).provenance.parent, "E6");
  ASSERT_EQ(run({"gen", "--type", "D5", "--out", path("d5.json")}).code, 0);
  EXPECT_EQ(parse_document(slurp(path("d5.json"))).provenance.method, "closed_form");
  ASSERT_EQ(run({"gen", "--type", "C3", "--epsilon", "flipped", "--out", path("c3.json")}).code, 0);
  const auto c3 = parse_document(slurp(path("c3.json")));
  EXPECT_EQ(c3.provenance.parent, "A5");
  EXPECT_EQ(c3.epsilon, (std::vector<int>{-1, 1, -1}));
}

TEST_F(Cli, Deterministic) {
  ASSERT_EQ(run({"gen", "--type", "F4", "--out", path("a.json"), "--csv", path("a.csv")}).code, 0);
  ASSERT_EQ(run({"gen", "--type", "F4", "--out", path("b.json"), "--csv", path("b.csv")}).code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  EXPECT_EQ(slurp(path("a.csv")).rfind("alpha,beta,sum,N\n", 0), 0u);
}

TEST_F(Cli, VerifyAllSuitesAndCorruption) {
  ASSERT_EQ(run({"gen", "--type", "A3", "--out", path("a3.json")}).code, 0);
  const auto ok = run({"verify", "--in", path("a3.json")});
  EXPECT_EQ(ok.code, 0) << ok.out;
  for (const char* suite : {"jacobi", "chevalley", "canonical", "omega", "antisymmetry", "differential vs inductive",
                            "differential vs closed", "slN"}) {
    EXPECT_NE(ok.out.find(std::string(suite) + ": pass"), std::string::npos) << suite;
  }

  auto doc = parse_document(slurp(path("a3.json")));
  doc.constants[0][3] = -doc.constants[0][3];
  std::ofstream(path("bad.json"), std::ios::binary) << serialize(doc);
  const auto bad = run({"verify", "--in", path("bad.json"), "--suite", "jacobi,differential"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);

  EXPECT_EQ(run({"verify", "--in", path("a3.json"), "--suite", "nonsense"}).code, 2);
}

TEST_F(Cli, VerifyFoldedTable) {
  ASSERT_EQ(run({"fold", "--type", "E6", "--out", path("f4.json")}).code, 0);
  const auto r = run({"verify", "--in", path("f4.json")});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("differential vs fold: pass"), std::string::npos);
  EXPECT_EQ(run({"verify", "--in", path("f4.json"), "--suite", "slN"}).code, 2);
}

TEST_F(Cli, FoldD4BothOrders) {
  const auto g = run({"fold", "--type", "D4", "--out", path("g2.json")});
  ASSERT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("folds to G2 over nodes 3 1"), std::string::npos) << g.out;
  const auto b = run({"fold", "--type", "D4", "--order", "2", "--out", path("b3.json")});
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(parse_document(slurp(path("b3.json"))).type, "B3");
}

TEST_F(Cli, Show) {
  ASSERT_EQ(run({"gen", "--type", "G2", "--out", path("g2.json")}).code, 0);
  const auto r = run({"show", "--in", path("g2.json"), "--alpha", "0,1", "--beta", "1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("N = 2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("q = 1, p = 2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("string: 10 11 12 13"), std::string::npos) << r.out;

  const auto h = run({"show", "--in", path("g2.json"), "--alpha", "1,1", "--beta", "-1,-1"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("h_1"), std::string::npos) << h.out;

  EXPECT_EQ(run({"show", "--in", path("g2.json"), "--alpha", "2,0", "--beta", "1,1"}).code, 2);
  EXPECT_EQ(run({"show", "--in", path("g2.json"), "--alpha", "1", "--beta", "1,1"}).code, 2);
}
