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

// Certificate rendering: JSON (machine-readable) and markdown. Party indices
// are 1-based in both renderings; state indices are 0-based.

#include <filesystem>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gnl/state_io.hpp"
#include "gnl/verifier/certificate.hpp"

namespace gnl {

namespace detail {

using nlohmann::json;

inline json parties_json(const std::vector<std::size_t>& parties) {
  json arr = json::array();
  for (std::size_t p : parties) arr.push_back(p + 1);
  return arr;
}

inline json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json side_json(const SideOutcome& s) {
  json j;
  j["side"] = parties_json(s.side);
  j["side_dim"] = s.side_dim;
  if (s.report) {
    j["constraint_count"] = s.report->constraint_count;
    j["solution_dim"] = s.report->solution_dim;
    j["trivial"] = s.report->trivial;
    if (s.report->witness) j["witness"] = matrix_json(*s.report->witness);
  } else {
    j["skipped"] = s.note;
  }
  return j;
}

inline json audit_json(const OrthogonalityAudit& a) {
  json j;
  j["pairs_checked"] = a.pairs_checked;
  j["max_overlap"] = a.max_overlap;
  j["pass"] = a.pass();
  json bad = json::array();
  for (std::size_t k = 0; k < a.offending.size() && k < 20; ++k) {
    bad.push_back({{"states", {a.offending[k].first, a.offending[k].second}}, {"overlap", a.offending[k].overlap}});
  }
  j["offending"] = std::move(bad);
  j["offending_count"] = a.offending.size();
  return j;
}

}  // namespace detail

inline nlohmann::json to_json(const Certificate& cert) {
  using detail::json;
  json j;
  j["subject"] = cert.subject;
  j["dims"] = cert.dims;
  j["state_count"] = cert.state_count;
  j["verdict"] = to_string(cert.verdict);
  j["reason"] = cert.reason;
  j["trust_assumed"] = cert.trust_assumed;
  std::visit(
      [&](const auto& ev) {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, DirectSweep>) {
          j["method"] = "direct_sweep";
          j["orthogonality"] = detail::audit_json(ev.audit);
          json table = json::array();
          for (const CutOutcome& c : ev.cuts) {
            table.push_back({{"cut", {detail::parties_json(c.cut.left), detail::parties_json(c.cut.right)}},
                             {"left", detail::side_json(c.left)},
                             {"right", detail::side_json(c.right)}});
          }
          j["bipartitions"] = std::move(table);
        } else if constexpr (std::is_same_v<T, CompositionEvidence>) {
          j["method"] = "composition";
          j["plan_label"] = ev.plan_label;
          json blocks = json::array();
          for (const auto& b : ev.blocks) blocks.push_back(detail::parties_json(b));
          j["blocks"] = std::move(blocks);
          j["graph_connected"] = ev.connected;
          j["orthogonality"] = detail::audit_json(ev.audit);
          json crossings = json::array();
          for (const CrossingEntry& c : ev.crossings) {
            json row = {{"cut", {detail::parties_json(c.cut.left), detail::parties_json(c.cut.right)}}};
            row["block"] = c.block ? json(*c.block + 1) : json(nullptr);
            crossings.push_back(std::move(row));
          }
          j["bipartitions"] = std::move(crossings);
          json children = json::array();
          for (const Certificate& child : ev.children) children.push_back(to_json(child));
          j["children"] = std::move(children);
        } else {
          j["method"] = "external";
          j["reference"] = ev.reference;
        }
      },
      cert.evidence);
  return j;
}

namespace detail {

inline std::string braces(const std::vector<std::size_t>& parties) {
  std::string s;
  for (std::size_t p : parties) s += std::to_string(p + 1);
  return "{" + s + "}";
}

inline std::string cut_name(const Bipartition& b) {
  if (b.left.size() + b.right.size() <= 9) return braces(b.left) + "|" + braces(b.right);
  return party_list(b.left) + "|" + party_list(b.right);
}

inline std::string side_cell(const SideOutcome& s) {
  if (!s.report) return "skipped (" + s.note + ")";
  return std::to_string(s.report->solution_dim) + (s.report->trivial ? " (trivial)" : "");
}

inline void render(std::ostream& os, const Certificate& cert, int depth) {
  const std::string hashes(static_cast<std::size_t>(std::min(depth + 1, 6)), '#');
  os << hashes << ' ' << (cert.subject.empty() ? "certificate" : cert.subject) << "\n\n";
  os << "- verdict: **" << to_string(cert.verdict) << "**" << (cert.trust_assumed ? " (trust assumed)" : "")
     << "\n";
  os << "- dims: [";
  for (std::size_t i = 0; i < cert.dims.size(); ++i) os << (i ? ", " : "") << cert.dims[i];
  os << "], states: " << cert.state_count << "\n";
  os << "- reason: " << cert.reason << "\n";
  std::visit(
      [&](const auto& ev) {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, DirectSweep>) {
          os << "- method: direct sweep; orthogonality max overlap " << ev.audit.max_overlap << " over "
             << ev.audit.pairs_checked << " pairs\n\n";
          os << "| bipartition | side | side_dim | constraints | solution_dim | trivial |\n";
          os << "|---|---|---|---|---|---|\n";
          for (const CutOutcome& c : ev.cuts) {
            for (const SideOutcome* s : {&c.left, &c.right}) {
              os << "| " << cut_name(c.cut) << " | " << braces(s->side) << " | " << s->side_dim << " | ";
              if (s->report) {
                os << s->report->constraint_count << " | " << s->report->solution_dim << " | "
                   << (s->report->trivial ? "yes" : "no") << " |\n";
              } else {
                os << "- | - | skipped: " << s->note << " |\n";
              }
            }
          }
          os << "\n";
        } else if constexpr (std::is_same_v<T, CompositionEvidence>) {
          os << "- method: composition (" << ev.plan_label << ")\n";
          os << "- blocks:";
          for (const auto& b : ev.blocks) os << ' ' << braces(b);
          os << "\n- graph connected: " << (ev.connected ? "yes" : "no") << "\n";
          os << "- union orthogonality: " << (ev.audit.pass() ? "pass" : "FAIL") << ", max overlap "
             << ev.audit.max_overlap << "\n\n";
          if (!ev.crossings.empty()) {
            os << "| bipartition | crossing block |\n|---|---|\n";
            for (const CrossingEntry& c : ev.crossings) {
              os << "| " << cut_name(c.cut) << " | " << (c.block ? std::to_string(*c.block + 1) : "none") << " |\n";
            }
            os << "\n";
          }
          for (const Certificate& child : ev.children) render(os, child, depth + 1);
        } else {
          os << "- method: external attestation: " << ev.reference << "\n\n";
        }
      },
      cert.evidence);
}

}  // namespace detail

inline std::string render_markdown(const Certificate& cert) {
  std::ostringstream os;
  detail::render(os, cert, 0);
  return os.str();
}

inline void write_certificate(const Certificate& cert, const std::filesystem::path& path) {
  io::write_file_atomic(path, to_json(cert).dump(2) + "\n");
}

}  // namespace gnl
