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

// Certificates of genuine nonlocality.
//
// A direct sweep runs the OPM solver on both sides of every bipartition; if
// every side only admits measurements proportional to the identity, no party
// group can start a discriminating protocol and the set is certified. A
// composition certificate instead checks a plan: connected composition graph,
// orthogonal union, and a certified seed per block. Connectivity makes every
// bipartition cut some block, and a block whose seed is nonlocal across that
// cut stays nonlocal after padding.

#include <algorithm>
#include <future>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gnl/constructors/bipartite.hpp"
#include "gnl/errors.hpp"
#include "gnl/partition_graph.hpp"
#include "gnl/plan.hpp"
#include "gnl/verifier/opm.hpp"
#include "gnl/verifier/orthogonality.hpp"

namespace gnl {

enum class Verdict { Certified, Inconclusive, Refuted };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "Certified";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::Refuted: return "Refuted";
  }
  return "?";
}

struct VerifyOptions {
  double tol = kDefaultTol;
  std::size_t side_cap = kDefaultSideCap;
  /// Worker threads for independent sides; output does not depend on it.
  std::size_t threads = 1;
  /// Composition plans above this many parties skip the explicit crossing table.
  std::size_t crossing_table_max_parties = 20;
};

struct SideOutcome {
  std::vector<std::size_t> side;
  std::size_t side_dim = 0;
  std::optional<OpmReport> report;  // absent when over budget
  std::string note;
};

struct CutOutcome {
  Bipartition cut;
  SideOutcome left;
  SideOutcome right;
};

struct DirectSweep {
  OrthogonalityAudit audit;
  std::vector<CutOutcome> cuts;
};

struct CrossingEntry {
  Bipartition cut;
  std::optional<std::size_t> block;  // first block meeting both sides
};

struct Certificate;

struct CompositionEvidence {
  std::string plan_label;
  std::vector<std::vector<std::size_t>> blocks;
  bool connected = false;
  std::vector<std::vector<std::size_t>> components;
  OrthogonalityAudit audit;
  std::vector<CrossingEntry> crossings;
  std::vector<Certificate> children;
};

struct ExternalEvidence {
  std::string reference;
};

struct Certificate {
  std::string subject;
  std::vector<std::size_t> dims;
  std::size_t state_count = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
  /// Some subtree rests on a user attestation rather than a check.
  bool trust_assumed = false;
  std::variant<DirectSweep, CompositionEvidence, ExternalEvidence> evidence;
};

namespace detail {

inline SideOutcome run_side(const StateSet& set, const std::vector<std::size_t>& side, const VerifyOptions& opt) {
  SideOutcome out;
  out.side = side;
  out.side_dim = side_dimension(set, side);
  try {
    out.report = opm_space(set, side, OpmOptions{opt.tol, opt.side_cap});
  } catch (const BudgetError& e) {
    out.note = e.what();
  }
  return out;
}

inline std::vector<SideOutcome> run_sides(const StateSet& set, const std::vector<std::vector<std::size_t>>& sides,
                                          const VerifyOptions& opt) {
  std::vector<SideOutcome> results(sides.size());
  if (opt.threads <= 1 || sides.size() < 2) {
    for (std::size_t k = 0; k < sides.size(); ++k) results[k] = run_side(set, sides[k], opt);
    return results;
  }
  // Fixed batches; results land in their own slots so the merge order is
  // independent of scheduling.
  for (std::size_t start = 0; start < sides.size(); start += opt.threads) {
    const std::size_t stop = std::min(sides.size(), start + opt.threads);
    std::vector<std::future<SideOutcome>> jobs;
    for (std::size_t k = start; k < stop; ++k) {
      jobs.push_back(std::async(std::launch::async, [&, k] { return run_side(set, sides[k], opt); }));
    }
    for (std::size_t k = start; k < stop; ++k) results[k] = jobs[k - start].get();
  }
  return results;
}

inline std::string describe_pair(const OverlapPair& p) {
  return "states " + std::to_string(p.first) + " and " + std::to_string(p.second) + " overlap " +
         std::to_string(p.overlap);
}

}  // namespace detail

/// Both sides of every canonical bipartition. Certified iff every side is
/// trivial, the set is orthogonal and every party has dim >= 3. Never emits
/// Refuted: a non-trivial solution space does not show distinguishability.
inline Certificate direct_sweep(const StateSet& set, const VerifyOptions& opt = {}) {
  const std::size_t L = set.parties();
  DirectSweep sweep;
  sweep.audit = check_orthogonality(set, opt.tol);
  const std::vector<Bipartition> cuts = bipartitions(L);
  std::vector<std::vector<std::size_t>> sides;
  for (const Bipartition& b : cuts) {
    sides.push_back(b.left);
    sides.push_back(b.right);
  }
  std::vector<SideOutcome> outcomes = detail::run_sides(set, sides, opt);
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    sweep.cuts.push_back({cuts[c], std::move(outcomes[2 * c]), std::move(outcomes[2 * c + 1])});
  }

  Certificate cert{set.label(), set.dims().values(), set.size(), Verdict::Inconclusive, {}, false, {}};
  std::string problem;
  if (set.dims().min_dim() < 3) {
    problem = std::string("party of dimension < 3 present; ") + kQubitNecessityNote;
  } else if (!sweep.audit.pass()) {
    problem = "set is not pairwise orthogonal: " + detail::describe_pair(sweep.audit.offending.front());
  } else {
    for (const CutOutcome& co : sweep.cuts) {
      for (const SideOutcome* so : {&co.left, &co.right}) {
        if (!problem.empty()) break;
        if (!so->report) {
          problem = "side " + party_list(so->side) + " not checked: " + so->note;
        } else if (!so->report->trivial) {
          problem = "side " + party_list(so->side) + " admits a non-trivial orthogonality-preserving measurement"
                    " (solution_dim " + std::to_string(so->report->solution_dim) + ")";
        }
      }
    }
  }
  if (problem.empty()) {
    cert.verdict = Verdict::Certified;
    cert.reason = "every side of every bipartition admits only trivial orthogonality-preserving measurements";
  } else {
    cert.reason = problem;
  }
  cert.evidence = std::move(sweep);
  return cert;
}

namespace detail {

inline bool same_states(const StateSet& a, const StateSet& b, double tol) {
  if (!(a.dims() == b.dims()) || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t p = 0; p < a.parties(); ++p) {
      const auto& fa = a[i].factors[p];
      const auto& fb = b[i].factors[p];
      for (std::size_t k = 0; k < fa.size(); ++k) {
        if (std::abs(fa[k] - fb[k]) > tol) return false;
      }
    }
  }
  return true;
}

}  // namespace detail

/// Certifies `built` through `plan`. Throws PlanError for an invalid or
/// disconnected plan and InputError if `built` is not the plan's union.
inline Certificate certify(const CompositionPlan& plan, const StateSet& built, const VerifyOptions& opt = {}) {
  validate_plan(plan);
  const StateSet expected = place_blocks(plan);
  if (!detail::same_states(expected, built, 1e-12)) {
    throw InputError("certify: state set does not match the union of the plan's blocks");
  }

  CompositionEvidence ev;
  ev.plan_label = plan.label;
  ev.blocks = block_subsets(plan);
  ev.components = components(build_graph(plan));
  ev.connected = ev.components.size() <= 1;
  if (!ev.connected) {
    throw PlanError("composition graph is disconnected: components " + party_list(ev.components[0]) + " and " +
                    party_list(ev.components[1]));
  }
  ev.audit = check_orthogonality(built, opt.tol);

  bool every_cut_crossed = true;
  if (plan.dims.size() <= opt.crossing_table_max_parties) {
    for (const Bipartition& cut : bipartitions(plan.dims.size())) {
      auto block = crossing_block(ev.blocks, cut);
      every_cut_crossed = every_cut_crossed && block.has_value();
      ev.crossings.push_back({cut, block});
    }
  }

  for (std::size_t b = 0; b < plan.blocks.size(); ++b) {
    const PlanBlock& block = plan.blocks[b];
    Certificate child = [&] {
      if (block.seed_plan) return certify(*block.seed_plan, block.seed, opt);
      if (block.external_attestation) {
        return Certificate{block.seed.label(), block.seed.dims().values(), block.seed.size(), Verdict::Certified,
                           "externally attested, not checked", true,
                           ExternalEvidence{*block.external_attestation}};
      }
      return direct_sweep(block.seed, opt);
    }();
    child.subject = "block " + std::to_string(b + 1) + " seed on parties " + party_list(block.parties) +
                    (child.subject.empty() ? "" : " (" + child.subject + ")");
    ev.children.push_back(std::move(child));
  }

  Certificate cert{plan.label, plan.dims.values(), built.size(), Verdict::Inconclusive, {}, false, {}};
  for (const Certificate& c : ev.children) cert.trust_assumed = cert.trust_assumed || c.trust_assumed;

  if (!ev.audit.pass()) {
    cert.verdict = Verdict::Refuted;
    cert.reason = "union is not pairwise orthogonal: " + detail::describe_pair(ev.audit.offending.front());
  } else if (!every_cut_crossed) {
    cert.reason = "some bipartition cuts no block";
  } else {
    const auto failed = std::find_if(ev.children.begin(), ev.children.end(),
                                     [](const Certificate& c) { return c.verdict != Verdict::Certified; });
    if (failed != ev.children.end()) {
      cert.reason = failed->subject + " is " + to_string(failed->verdict) + ": " + failed->reason;
    } else {
      cert.verdict = Verdict::Certified;
      cert.reason = "composition graph connected, union orthogonal, every block seed certified";
    }
  }
  cert.evidence = std::move(ev);
  return cert;
}

}  // namespace gnl
