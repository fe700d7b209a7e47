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

#include "gnl/state_io.hpp"

#include <filesystem>
#include <fstream>
#include <random>

#include "gnl/constructors/bipartite.hpp"
#include "gtest/gtest.h"
#include "support/oracles.hpp"

using namespace gnl;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "gnl_state_io_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

TEST(state_io, theorem1_round_trip) {
  const StateSet set = build_theorem1(3, 3, UflUnitary::make(fourier(2)), random_ufl(2, 7));
  const auto path = scratch("t1.json");
  write_state_set(set, path);
  const StateSet back = read_state_set(path);
  EXPECT_EQ(back.dims(), set.dims());
  EXPECT_EQ(back.label(), set.label());
  ASSERT_EQ(back.size(), set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t p = 0; p < set.parties(); ++p) {
      EXPECT_LE(max_abs_diff(back[i].factors[p], set[i].factors[p]), 1e-15);
    }
  }
}

TEST(state_io, seventeen_digits_are_lossless) {
  std::mt19937_64 rng(2);
  const StateSet set = gnl::testing::random_product_set(PartyDims{3, 4, 2}, 6, rng);
  const StateSet back = parse_state_set(nlohmann::json::parse(to_json_text(set)));
  EXPECT_EQ(back, set);
  // Writing the parsed set again reproduces the bytes.
  EXPECT_EQ(to_json_text(back), to_json_text(set));
}

TEST(state_io, bad_norm_names_the_factor) {
  const auto path = scratch("bad_norm.json");
  write_text(path, R"({"dims":[2,2],"states":[
    {"factors":[[[1,0],[0,0]],[[1,0],[0,0]]]},
    {"factors":[[[0,0],[1,0]],[[0.5,0],[0,0]]]}]})");
  try {
    read_state_set(path);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("state 1 factor 1"), std::string::npos) << e.what();
  }
}

TEST(state_io, qubit_party_parses) {
  const StateSet set = parse_state_set(nlohmann::json::parse(
      R"({"dims":[2,3],"label":"q","states":[{"factors":[[[1,0],[0,0]],[[0,0],[0,1],[0,0]]]}]})"));
  EXPECT_EQ(set.dims(), (PartyDims{2, 3}));
  EXPECT_EQ(set[0].factors[1][1], Complex(0.0, 1.0));
}

TEST(state_io, malformed_inputs) {
  using nlohmann::json;
  EXPECT_THROW(parse_state_set(json::parse("[]")), InputError);
  EXPECT_THROW(parse_state_set(json::parse(R"({"dims":[3,3]})")), InputError);
  EXPECT_THROW(parse_state_set(json::parse(R"({"dims":[3],"states":[]})")), InputError);
  EXPECT_THROW(parse_state_set(json::parse(R"({"dims":[2,2],"states":[{"factors":[[[1,0]],[[1,0],[0,0]]]}]})")),
               InputError);
  EXPECT_THROW(parse_state_set(json::parse(R"({"dims":[2,2],"states":[{"factors":[[[1,0,0],[0,0]],[[1,0],[0,0]]]}]})")),
               InputError);
  const auto path = scratch("garbage.json");
  write_text(path, "{not json");
  EXPECT_THROW(read_state_set(path), InputError);
  EXPECT_THROW(read_state_set(scratch("does_not_exist.json")), InputError);
}
