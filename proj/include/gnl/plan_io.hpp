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

#pragma once

// Plan files:
//   {"dims":[...], "label":"...",
//    "blocks":[{"parties":[...],                      1-based, seed order
//               "seed": "<path>" | {state set},
//               "padding":[{"party":k, "factor":[[re,im],...]} | {"party":k, "basis":j}, ...],
//               "seed_plan": "<path>" | {plan},       optional
//               "external": "<reference>"}]}          optional
// Relative paths resolve against the directory of the file that names them.

#include <filesystem>
#include <memory>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gnl/plan.hpp"
#include "gnl/state_io.hpp"

namespace gnl {

inline void write_plan_json(std::ostream& os, const CompositionPlan& plan, const std::string& indent = "") {
  const std::string in1 = indent + "  ";
  const std::string in2 = indent + "    ";
  const std::string in3 = indent + "      ";
  os << "{\n" << in1 << "\"dims\": [";
  for (std::size_t p = 0; p < plan.dims.size(); ++p) os << (p ? ", " : "") << plan.dims[p];
  os << "],\n" << in1 << "\"label\": " << io::quote(plan.label) << ",\n";
  os << in1 << "\"blocks\": [";
  for (std::size_t b = 0; b < plan.blocks.size(); ++b) {
    const PlanBlock& block = plan.blocks[b];
    os << (b ? "," : "") << "\n" << in2 << "{\n";
    os << in3 << "\"parties\": [";
    for (std::size_t t = 0; t < block.parties.size(); ++t) os << (t ? ", " : "") << block.parties[t] + 1;
    os << "],\n" << in3 << "\"padding\": [";
    bool first = true;
    for (const auto& [party, factor] : block.padding) {
      os << (first ? "" : ", ") << "{\"party\": " << party + 1 << ", \"factor\": ";
      io::write_vector(os, factor);
      os << "}";
      first = false;
    }
    os << "],\n";
    if (block.external_attestation) {
      os << in3 << "\"external\": " << io::quote(*block.external_attestation) << ",\n";
    }
    if (block.seed_plan) {
      os << in3 << "\"seed_plan\": ";
      write_plan_json(os, *block.seed_plan, in3);
      os << ",\n";
    }
    os << in3 << "\"seed\": ";
    write_state_set_json(os, block.seed, in3);
    os << "\n" << in2 << "}";
  }
  os << (plan.blocks.empty() ? "]\n" : "\n" + in1 + "]\n") << indent << "}";
}

inline std::string to_json_text(const CompositionPlan& plan) {
  std::ostringstream os;
  write_plan_json(os, plan);
  os << '\n';
  return os.str();
}

inline void write_plan(const CompositionPlan& plan, const std::filesystem::path& path) {
  io::write_file_atomic(path, to_json_text(plan));
}

namespace detail {

inline std::size_t parse_party(const nlohmann::json& j, std::size_t L, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1 || j.get<std::size_t>() > L) {
    throw InputError(where + ": party index must be an integer in 1.." + std::to_string(L));
  }
  return j.get<std::size_t>() - 1;
}

}  // namespace detail

inline CompositionPlan parse_plan(const nlohmann::json& j, const std::filesystem::path& base_dir,
                                  const std::string& where = "plan") {
  if (!j.is_object()) throw InputError(where + ": expected a JSON object");
  if (!j.contains("dims")) throw InputError(where + ": missing \"dims\"");
  PartyDims dims(io::parse_dims(j["dims"], where));
  const std::size_t L = dims.size();
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw InputError(where + ": \"label\" must be a string");
    label = j["label"].get<std::string>();
  }
  if (!j.contains("blocks") || !j["blocks"].is_array()) throw InputError(where + ": missing \"blocks\" array");

  CompositionPlan plan{dims, {}, label};
  for (std::size_t b = 0; b < j["blocks"].size(); ++b) {
    const auto& jb = j["blocks"][b];
    const std::string at = where + ": block " + std::to_string(b + 1);
    if (!jb.is_object()) throw InputError(at + ": expected an object");
    if (!jb.contains("parties") || !jb["parties"].is_array()) throw InputError(at + ": missing \"parties\"");
    std::vector<std::size_t> parties;
    for (const auto& p : jb["parties"]) parties.push_back(detail::parse_party(p, L, at));

    if (!jb.contains("seed")) throw InputError(at + ": missing \"seed\"");
    const auto& js = jb["seed"];
    StateSet seed = js.is_string()
                        ? read_state_set(base_dir / js.get<std::string>())
                        : parse_state_set(js, at + " seed");

    std::map<std::size_t, ComplexVector> padding;
    if (jb.contains("padding")) {
      if (!jb["padding"].is_array()) throw InputError(at + ": \"padding\" must be an array");
      for (const auto& jp : jb["padding"]) {
        if (!jp.is_object() || !jp.contains("party")) throw InputError(at + ": padding entries need \"party\"");
        const std::size_t party = detail::parse_party(jp["party"], L, at + " padding");
        ComplexVector factor;
        if (jp.contains("factor")) {
          factor = io::parse_vector(jp["factor"], at + " padding");
        } else if (jp.contains("basis")) {
          const auto& k = jp["basis"];
          if (!k.is_number_integer() || k.get<long long>() < 1 || k.get<std::size_t>() > dims[party]) {
            throw InputError(at + ": padding basis index out of range for party " + std::to_string(party + 1));
          }
          factor = basis_vector(dims[party], k.get<std::size_t>() - 1);
        } else {
          throw InputError(at + ": padding entry needs \"factor\" or \"basis\"");
        }
        if (!padding.emplace(party, std::move(factor)).second) {
          throw InputError(at + ": duplicate padding for party " + std::to_string(party + 1));
        }
      }
    }

    std::shared_ptr<const CompositionPlan> seed_plan;
    if (jb.contains("seed_plan")) {
      const auto& jsp = jb["seed_plan"];
      if (jsp.is_string()) {
        const std::filesystem::path p = base_dir / jsp.get<std::string>();
        seed_plan = std::make_shared<CompositionPlan>(
            parse_plan(io::read_json_file(p), p.parent_path(), p.string()));
      } else {
        seed_plan = std::make_shared<CompositionPlan>(parse_plan(jsp, base_dir, at + " seed_plan"));
      }
    }
    std::optional<std::string> external;
    if (jb.contains("external")) {
      if (!jb["external"].is_string()) throw InputError(at + ": \"external\" must be a string");
      external = jb["external"].get<std::string>();
    }
    plan.blocks.push_back({std::move(parties), std::move(seed), std::move(padding), std::move(seed_plan),
                           std::move(external)});
  }
  validate_plan(plan);
  return plan;
}

inline CompositionPlan read_plan(const std::filesystem::path& path) {
  return parse_plan(io::read_json_file(path), path.parent_path(), path.string());
}

}  // namespace gnl
