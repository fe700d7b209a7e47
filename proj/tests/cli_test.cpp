// Copyright 2026 The gnl Authors
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

#include "gnl/cli.hpp"

#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

using namespace gnl;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome gnl_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = std::filesystem::temp_directory_path() / (std::string("gnl_cli_") + info->name());
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, build_then_verify) {
  const Outcome b = gnl_run({"build", "theorem1", "--x", "3", "--y", "4", "--out", path("t1.json")});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_NE(b.out.find("states=10"), std::string::npos) << b.out;

  const Outcome v = gnl_run({"verify", "--set", path("t1.json"), "--cert", path("c.json"), "--markdown", path("c.md")});
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_NE(v.out.find("verdict=Certified"), std::string::npos) << v.out;
  const auto cert = nlohmann::json::parse(slurp(path("c.json")));
  EXPECT_EQ(cert["verdict"], "Certified");
  EXPECT_NE(slurp(path("c.md")).find("Certified"), std::string::npos);
}

TEST_F(CliTest, basis_flags_are_one_based) {
  const Outcome ok = gnl_run({"build", "theorem1", "--x", "3", "--y", "3", "--basis-a", "3,1,2", "--unitary", "hadamard",
                          "--out", path("p.json")});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(gnl_run({"verify", "--set", path("p.json")}).code, 0);
  EXPECT_EQ(gnl_run({"build", "theorem1", "--x", "3", "--y", "3", "--basis-a", "0,1,2", "--out", path("q.json")}).code,
            2);
  EXPECT_EQ(gnl_run({"build", "theorem1", "--x", "3", "--y", "3", "--basis-b", "1,1,2", "--out", path("q.json")}).code,
            2);
}

TEST_F(CliTest, theorem3_plan_certifies) {
  ASSERT_EQ(gnl_run({"build", "theorem3", "--x", "3", "--y", "4", "--z", "3", "--out", path("s.json"), "--plan-out",
                     path("p.json")})
                .code,
            0);
  const Outcome c = gnl_run({"certify", "--plan", path("p.json"), "--set", path("s.json")});
  EXPECT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find("verdict=Certified"), std::string::npos);
  const Outcome bad = gnl_run({"build", "theorem3", "--x", "3", "--y", "3", "--z", "3", "--out", path("s3.json")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("y >= 4"), std::string::npos) << bad.err;
}

TEST_F(CliTest, compose_and_certify) {
  ASSERT_EQ(gnl_run({"compose", "star", "--dims", "3,3,3,3", "--out", path("s.json"), "--plan-out", path("p.json")})
                .code,
            0);
  EXPECT_EQ(gnl_run({"certify", "--plan", path("p.json")}).code, 0);
  EXPECT_EQ(gnl_run({"compose", "general", "--plan", path("p.json"), "--out", path("g.json")}).code, 0);
  EXPECT_EQ(slurp(path("g.json")), slurp(path("s.json")));
  const Outcome tri = gnl_run({"compose", "tristar", "--blocks", "3", "--out", path("t.json"), "--plan-out", path("tp.json")});
  ASSERT_EQ(tri.code, 0) << tri.err;
  EXPECT_NE(tri.out.find("states=60"), std::string::npos) << tri.out;
  EXPECT_EQ(gnl_run({"certify", "--plan", path("tp.json")}).code, 0);
}

TEST_F(CliTest, synthesize_exit_codes) {
  const Outcome ok = gnl_run({"synthesize", "--dims", "4,3,5", "--out", path("s.json")});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_NE(ok.out.find("states=26"), std::string::npos) << ok.out;
  EXPECT_NE(ok.out.find("construction=theorem3"), std::string::npos);

  const Outcome seed = gnl_run({"synthesize", "--dims", "3,3,3"});
  EXPECT_EQ(seed.code, 1);
  EXPECT_NE(seed.out.find("NeedsExternalSeed"), std::string::npos);

  const Outcome qubit = gnl_run({"synthesize", "--dims", "2,5"});
  EXPECT_EQ(qubit.code, 2);
  EXPECT_FALSE(qubit.err.empty());
}

TEST_F(CliTest, invalid_input_exits_two) {
  EXPECT_EQ(gnl_run({}).code, 2);
  EXPECT_EQ(gnl_run({"verify", "--set", path("s.json"), "--bogus"}).code, 2);
  EXPECT_EQ(gnl_run({"verify", "--set", path("missing.json")}).code, 2);
  {
    std::ofstream(path("broken.json")) << "{\"dims\": [3, 3], \"states\": [";
  }
  EXPECT_EQ(gnl_run({"verify", "--set", path("broken.json")}).code, 2);
  {
    std::ofstream(path("unnormalized.json"))
        << R"({"dims": [2, 2], "states": [{"factors": [[[1, 0], [1, 0]], [[1, 0], [0, 0]]]}]})";
  }
  EXPECT_EQ(gnl_run({"verify", "--set", path("unnormalized.json")}).code, 2);
  EXPECT_EQ(gnl_run({"build", "theorem1", "--x", "2", "--y", "5", "--out", path("q.json")}).code, 2);
  EXPECT_EQ(gnl_run({"verify", "--set", path("x.json"), "--format", "yaml"}).code, 2);
}

TEST_F(CliTest, product_basis_verify_is_inconclusive) {
  StateSet basis = [] {
    std::vector<ProductState> states;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) states.push_back({{basis_vector(3, i), basis_vector(3, j)}});
    }
    return StateSet(PartyDims{3, 3}, std::move(states));
  }();
  write_state_set(basis, path("pb.json"));
  const Outcome v = gnl_run({"verify", "--set", path("pb.json"), "--format", "json"});
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.out.find("\"solution_dim\": 3"), std::string::npos) << v.out;
}

TEST_F(CliTest, same_seed_same_bytes) {
  for (int k = 0; k < 2; ++k) {
    const std::string s = path("s" + std::to_string(k) + ".json");
    const std::string c = path("c" + std::to_string(k) + ".json");
    ASSERT_EQ(gnl_run({"synthesize", "--dims", "4,3,5", "--unitary", "random", "--seed", "11", "--out", s, "--cert", c})
                  .code,
              0);
  }
  EXPECT_EQ(slurp(path("s0.json")), slurp(path("s1.json")));
  EXPECT_EQ(slurp(path("c0.json")), slurp(path("c1.json")));
  ASSERT_EQ(gnl_run({"synthesize", "--dims", "4,3,5", "--unitary", "random", "--seed", "12", "--out", path("s2.json")})
                .code,
            0);
  EXPECT_NE(slurp(path("s0.json")), slurp(path("s2.json")));
}
