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

// JSON interchange for state sets:
//   {"dims":[d1,...,dL], "label":"...", "states":[{"factors":[[[re,im],...],...]}]}
// Amplitudes are written with 17 significant digits so a write/read cycle is
// lossless.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gnl/errors.hpp"
#include "gnl/states.hpp"

namespace gnl {

namespace io {

using nlohmann::json;

inline std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string quote(const std::string& s) { return json(s).dump(); }

inline void write_vector(std::ostream& os, std::span<const Complex> v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << '[' << format_real(v[i].real()) << ", " << format_real(v[i].imag()) << ']';
  }
  os << ']';
}

/// Writes `text` to `path` through a temporary file and a rename.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot open " + tmp.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw InputError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InputError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": malformed JSON: " + e.what());
  }
}

inline double as_real(const json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(where + ": expected a number");
  return j.get<double>();
}

inline ComplexVector parse_vector(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of [re, im] pairs");
  ComplexVector v;
  v.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    const json& z = j[k];
    if (!z.is_array() || z.size() != 2) {
      throw InputError(where + " entry " + std::to_string(k) + ": expected [re, im]");
    }
    v.emplace_back(as_real(z[0], where), as_real(z[1], where));
  }
  return v;
}

inline std::vector<std::size_t> parse_dims(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": \"dims\" must be an array");
  std::vector<std::size_t> dims;
  for (const json& d : j) {
    if (!d.is_number_integer() || d.get<long long>() < 1) {
      throw InputError(where + ": dims entries must be positive integers");
    }
    dims.push_back(d.get<std::size_t>());
  }
  if (dims.size() < 2) throw InputError(where + ": need at least 2 parties");
  return dims;
}

}  // namespace io

inline void write_state_set_json(std::ostream& os, const StateSet& set, const std::string& indent = "") {
  os << "{\n";
  os << indent << "  \"dims\": [";
  for (std::size_t p = 0; p < set.parties(); ++p) os << (p ? ", " : "") << set.dims()[p];
  os << "],\n";
  os << indent << "  \"label\": " << io::quote(set.label()) << ",\n";
  os << indent << "  \"states\": [";
  for (std::size_t i = 0; i < set.size(); ++i) {
    os << (i ? ",\n" : "\n") << indent << "    {\"factors\": [";
    const auto& factors = set[i].factors;
    for (std::size_t p = 0; p < factors.size(); ++p) {
      if (p) os << ", ";
      io::write_vector(os, factors[p]);
    }
    os << "]}";
  }
  os << (set.empty() ? "]\n" : "\n" + indent + "  ]\n") << indent << "}";
}

inline std::string to_json_text(const StateSet& set) {
  std::ostringstream os;
  write_state_set_json(os, set);
  os << '\n';
  return os.str();
}

/// Parses an already-decoded JSON document; errors name the offending state.
inline StateSet parse_state_set(const nlohmann::json& j, const std::string& where = "state set") {
  if (!j.is_object()) throw InputError(where + ": expected a JSON object");
  if (!j.contains("dims")) throw InputError(where + ": missing \"dims\"");
  if (!j.contains("states") || !j["states"].is_array()) {
    throw InputError(where + ": missing \"states\" array");
  }
  PartyDims dims(io::parse_dims(j["dims"], where));
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw InputError(where + ": \"label\" must be a string");
    label = j["label"].get<std::string>();
  }
  std::vector<ProductState> states;
  const auto& arr = j["states"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = where + ": state " + std::to_string(i);
    const auto& s = arr[i];
    if (!s.is_object() || !s.contains("factors") || !s["factors"].is_array()) {
      throw InputError(at + ": expected {\"factors\": [...]}");
    }
    ProductState ps;
    for (std::size_t p = 0; p < s["factors"].size(); ++p) {
      ps.factors.push_back(io::parse_vector(s["factors"][p], at + " factor " + std::to_string(p)));
    }
    states.push_back(std::move(ps));
  }
  try {
    return StateSet(std::move(dims), std::move(states), std::move(label));
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

inline StateSet read_state_set(const std::filesystem::path& path) {
  return parse_state_set(io::read_json_file(path), path.string());
}

inline void write_state_set(const StateSet& set, const std::filesystem::path& path) {
  io::write_file_atomic(path, to_json_text(set));
}

}  // namespace gnl
