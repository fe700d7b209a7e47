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

// Command-line front end. Exit codes: 0 success / Certified, 1 Inconclusive or
// NeedsExternalSeed, 2 invalid input or plan error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gnl/gnl.hpp"

namespace gnl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotCertified = 1;
inline constexpr int kExitInvalid = 2;

struct RunConfig {
  double tol = kDefaultTol;
  double ufl_floor = kUflFloor;
  std::size_t side_cap = kDefaultSideCap;
  std::size_t threads = 1;
  std::uint64_t seed = 0;
  std::string unitary = "fourier";
  std::string format = "none";

  VerifyOptions verify_options() const {
    VerifyOptions v;
    v.tol = tol;
    v.side_cap = side_cap;
    v.threads = threads;
    return v;
  }
  UnitarySource source() const { return UnitarySource::parse(unitary, seed); }
};

namespace detail {

inline OrderedBasis parse_basis(const std::vector<std::size_t>& one_based, std::size_t dim, const char* flag) {
  if (one_based.empty()) return OrderedBasis::identity(dim);
  if (one_based.size() != dim) {
    throw InputError(std::string(flag) + ": expected a permutation of 1.." + std::to_string(dim));
  }
  std::vector<std::size_t> perm;
  for (std::size_t k : one_based) {
    if (k < 1) throw InputError(std::string(flag) + ": indices are 1-based");
    perm.push_back(k - 1);
  }
  return OrderedBasis(std::move(perm));
}

inline int emit_certificate(const Certificate& cert, const RunConfig& cfg, const std::string& cert_path,
                            const std::string& markdown_path, std::ostream& out) {
  if (!cert_path.empty()) write_certificate(cert, cert_path);
  if (!markdown_path.empty()) io::write_file_atomic(markdown_path, render_markdown(cert));
  if (cfg.format == "json") out << to_json(cert).dump(2) << "\n";
  if (cfg.format == "markdown") out << render_markdown(cert);
  out << "verdict=" << to_string(cert.verdict) << " cert=" << (cert_path.empty() ? "-" : cert_path) << "\n";
  switch (cert.verdict) {
    case Verdict::Certified: return kExitOk;
    case Verdict::Inconclusive: return kExitNotCertified;
    case Verdict::Refuted: return kExitInvalid;
  }
  return kExitInvalid;
}

inline void emit_set(const StateSet& set, const std::string& path, std::ostream& out) {
  write_state_set(set, path);
  out << "wrote=" << path << " states=" << set.size() << " dims=" << to_string(set.dims()) << "\n";
}

inline void emit_plan(const CompositionPlan& plan, const std::string& path, std::ostream& out) {
  if (path.empty()) return;
  write_plan(plan, path);
  out << "plan=" << path << " blocks=" << plan.blocks.size() << "\n";
}

/// Bipartite seeds for the star (hub = party 1) or chain pattern.
inline std::vector<StateSet> auto_seeds(const PartyDims& dims, bool star, const UnitarySource& src, double floor) {
  std::vector<StateSet> seeds;
  std::uint64_t draws = 0;
  for (std::size_t i = 1; i < dims.size(); ++i) {
    const std::size_t a = star ? dims[0] : dims[i - 1];
    const std::size_t b = dims[i];
    const UflUnitary X = src.draw(a - 1, draws++, floor);
    const UflUnitary Y = src.draw(b - 1, draws++, floor);
    seeds.push_back(build_theorem1(a, b, X, Y));
  }
  return seeds;
}

}  // namespace detail

/// Runs the CLI on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build, compose and certify genuinely nonlocal sets of product states", "gnl"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "Orthogonality / rank tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--ufl-floor", cfg.ufl_floor, "Minimum modulus of first/last-row unitary entries")
        ->check(CLI::PositiveNumber);
    sub->add_option("--side-cap", cfg.side_cap, "Largest side dimension the OPM solver accepts")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", cfg.threads, "Worker threads for the direct sweep")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Also print the certificate: none, json or markdown")
        ->check(CLI::IsMember({"none", "json", "markdown"}));
  };
  auto add_unitary = [&cfg](CLI::App* sub) {
    sub->add_option("--unitary", cfg.unitary, "hadamard | fourier | random | random:<seed>");
    sub->add_option("--seed", cfg.seed, "Seed for every random choice");
  };
  auto positive_dims = CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          if (std::stoll(s) < 2) return "party dimensions must be >= 2";
        } catch (const std::exception&) {
          return "not an integer: " + s;
        }
        return {};
      },
      "DIM>=2");

  std::string out_path, plan_out, cert_path, md_path, set_path, plan_path, seed_plan_path, external;
  std::vector<std::size_t> dims_arg, seed_dims{3, 4, 3}, basis_a, basis_b;
  std::vector<std::string> seed_sets;
  std::size_t x = 0, y = 0, z = 0, blocks = 3;

  CLI::App* build = app.add_subcommand("build", "Build a bipartite or tripartite family");
  build->require_subcommand(1);
  CLI::App* t1 = build->add_subcommand("theorem1", "2(x+y)-4 states in C^x (x) C^y");
  t1->add_option("--x", x)->required();
  t1->add_option("--y", y)->required();
  t1->add_option("--basis-a", basis_a, "Ordered basis of A as a 1-based permutation")->delimiter(',');
  t1->add_option("--basis-b", basis_b, "Ordered basis of B as a 1-based permutation")->delimiter(',');
  t1->add_option("--out", out_path)->required();
  add_unitary(t1);
  add_common(t1);
  CLI::App* t3 = build->add_subcommand("theorem3", "2x+4y+2z-8 states in C^x (x) C^y (x) C^z");
  t3->add_option("--x", x)->required();
  t3->add_option("--y", y)->required();
  t3->add_option("--z", z)->required();
  t3->add_option("--out", out_path)->required();
  t3->add_option("--plan-out", plan_out, "Write the two-block decomposition used for certification");
  add_unitary(t3);
  add_common(t3);

  CLI::App* compose = app.add_subcommand("compose", "Compose seeds into a set on more parties");
  compose->require_subcommand(1);
  CLI::App* star = compose->add_subcommand("star", "Hub-and-spoke pattern, L >= 4");
  CLI::App* chain = compose->add_subcommand("chain", "Nearest-neighbour pattern, L >= 5");
  for (CLI::App* sub : {star, chain}) {
    sub->add_option("--dims", dims_arg)->required()->delimiter(',')->check(positive_dims);
    sub->add_option("--seed-set", seed_sets, "Seed state-set files (L-1); default: built from --unitary");
    sub->add_option("--out", out_path)->required();
    sub->add_option("--plan-out", plan_out);
    add_unitary(sub);
    add_common(sub);
  }
  CLI::App* tristar = compose->add_subcommand("tristar", "Tripartite seed on 2L+1 parties, L >= 3");
  tristar->add_option("--blocks", blocks, "Number of blocks L")->check(CLI::PositiveNumber);
  tristar->add_option("--dims", dims_arg, "Party dims (default derived from the seed)")
      ->delimiter(',')
      ->check(positive_dims);
  tristar->add_option("--seed-set", seed_sets, "Tripartite seed file; default: a tripartite family")
      ->expected(0, 1);
  tristar->add_option("--seed-plan", seed_plan_path, "Plan certifying the seed");
  tristar->add_option("--external", external, "Attest the seed externally (trust-assumed)");
  tristar->add_option("--seed-dims", seed_dims, "x,y,z of the default tripartite seed")->delimiter(',');
  tristar->add_option("--out", out_path)->required();
  tristar->add_option("--plan-out", plan_out);
  add_unitary(tristar);
  add_common(tristar);
  CLI::App* general = compose->add_subcommand("general", "Compose from a plan file");
  general->add_option("--plan", plan_path)->required();
  general->add_option("--out", out_path)->required();
  add_common(general);

  CLI::App* verify = app.add_subcommand("verify", "Direct OPM sweep over every bipartition");
  verify->add_option("--set", set_path)->required();
  verify->add_option("--cert", cert_path);
  verify->add_option("--markdown", md_path);
  add_common(verify);

  CLI::App* certify_cmd = app.add_subcommand("certify", "Certify a composition plan");
  certify_cmd->add_option("--plan", plan_path)->required();
  certify_cmd->add_option("--set", set_path, "Set to certify (default: the plan's union)");
  certify_cmd->add_option("--cert", cert_path);
  certify_cmd->add_option("--markdown", md_path);
  add_common(certify_cmd);

  CLI::App* synth = app.add_subcommand("synthesize", "Construct and certify a set for given dims");
  synth->add_option("--dims", dims_arg)->required()->delimiter(',')->check(positive_dims);
  synth->add_option("--out", out_path);
  synth->add_option("--plan-out", plan_out);
  synth->add_option("--cert", cert_path);
  synth->add_option("--markdown", md_path);
  add_unitary(synth);
  add_common(synth);

  std::vector<const char*> argv{"gnl"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (t1->parsed()) {
      const UnitarySource src = cfg.source();
      if (x < 3 || y < 3) {
        throw DomainError("theorem1: dims (" + std::to_string(x) + ", " + std::to_string(y) + ") rejected; " +
                          kQubitNecessityNote);
      }
      const UflUnitary X = src.draw(x - 1, 0, cfg.ufl_floor);
      const UflUnitary Y = src.draw(y - 1, 1, cfg.ufl_floor);
      detail::emit_set(build_theorem1(x, y, X, Y, detail::parse_basis(basis_a, x, "--basis-a"),
                                      detail::parse_basis(basis_b, y, "--basis-b")),
                       out_path, out);
      return kExitOk;
    }
    if (t3->parsed()) {
      const UnitarySource src = cfg.source();
      if (x < 3 || y < 4 || z < 3) {
        throw DomainError("theorem3: needs x, z >= 3 and y >= 4 (got " + std::to_string(x) + ", " +
                          std::to_string(y) + ", " + std::to_string(z) + ")");
      }
      const UflUnitary X = src.draw(x - 1, 0, cfg.ufl_floor);
      const UflUnitary Y = src.draw(y - 1, 1, cfg.ufl_floor);
      const UflUnitary Z = src.draw(z - 1, 2, cfg.ufl_floor);
      const CompositionPlan plan = theorem3_plan(x, y, z, X, Y, Z);
      detail::emit_set(place_blocks(plan), out_path, out);
      detail::emit_plan(plan, plan_out, out);
      return kExitOk;
    }
    if (star->parsed() || chain->parsed()) {
      const PartyDims dims(dims_arg);
      std::vector<StateSet> seeds;
      if (seed_sets.empty()) {
        seeds = detail::auto_seeds(dims, star->parsed(), cfg.source(), cfg.ufl_floor);
      } else {
        for (const std::string& p : seed_sets) seeds.push_back(read_state_set(p));
      }
      const CompositionPlan plan = star->parsed() ? star_plan(dims, seeds) : chain_plan(dims, seeds);
      detail::emit_set(place_blocks(plan), out_path, out);
      detail::emit_plan(plan, plan_out, out);
      return kExitOk;
    }
    if (tristar->parsed()) {
      std::optional<StateSet> seed;
      std::shared_ptr<const CompositionPlan> seed_plan;
      if (!seed_sets.empty()) {
        seed = read_state_set(seed_sets.front());
        if (!seed_plan_path.empty()) seed_plan = std::make_shared<CompositionPlan>(read_plan(seed_plan_path));
      } else {
        if (seed_dims.size() != 3) throw InputError("--seed-dims: expected x,y,z");
        const UnitarySource src = cfg.source();
        const UflUnitary X = src.draw(seed_dims[0] - 1, 0, cfg.ufl_floor);
        const UflUnitary Y = src.draw(seed_dims[1] - 1, 1, cfg.ufl_floor);
        const UflUnitary Z = src.draw(seed_dims[2] - 1, 2, cfg.ufl_floor);
        auto p = std::make_shared<CompositionPlan>(theorem3_plan(seed_dims[0], seed_dims[1], seed_dims[2], X, Y, Z));
        seed = place_blocks(*p);
        seed_plan = std::move(p);
      }
      std::vector<std::size_t> dv = dims_arg;
      if (dv.empty()) {
        dv.push_back(seed->dims()[0]);
        for (std::size_t i = 0; i < blocks; ++i) {
          dv.push_back(seed->dims()[1]);
          dv.push_back(seed->dims()[2]);
        }
      }
      CompositionPlan plan = tristar_plan(blocks, *seed, PartyDims(dv), seed_plan);
      if (!external.empty()) {
        for (PlanBlock& b : plan.blocks) b.external_attestation = external;
      }
      detail::emit_set(place_blocks(plan), out_path, out);
      detail::emit_plan(plan, plan_out, out);
      return kExitOk;
    }
    if (general->parsed()) {
      detail::emit_set(compose_general(read_plan(plan_path), cfg.tol), out_path, out);
      return kExitOk;
    }
    if (verify->parsed()) {
      const StateSet set = read_state_set(set_path);
      return detail::emit_certificate(direct_sweep(set, cfg.verify_options()), cfg, cert_path, md_path, out);
    }
    if (certify_cmd->parsed()) {
      const CompositionPlan plan = read_plan(plan_path);
      const StateSet set = set_path.empty() ? compose_general(plan, cfg.tol) : read_state_set(set_path);
      return detail::emit_certificate(certify(plan, set, cfg.verify_options()), cfg, cert_path, md_path, out);
    }
    if (synth->parsed()) {
      SynthesisOptions opts{cfg.source(), cfg.ufl_floor};
      const SynthesisResult result = synthesize(PartyDims(dims_arg), opts);
      if (const auto* need = std::get_if<NeedsExternalSeed>(&result)) {
        out << "result=NeedsExternalSeed reason=\"" << need->reason << "\"\n";
        err << "NeedsExternalSeed: " << need->reason << "\n";
        return kExitNotCertified;
      }
      const auto& s = std::get<Synthesized>(result);
      if (!out_path.empty()) detail::emit_set(s.set, out_path, out);
      if (s.plan) detail::emit_plan(*s.plan, plan_out, out);
      out << "construction=" << s.construction << "\n";
      const Certificate cert =
          s.plan ? certify(*s.plan, s.set, cfg.verify_options()) : direct_sweep(s.set, cfg.verify_options());
      return detail::emit_certificate(cert, cfg, cert_path, md_path, out);
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  err << "error: no command\n";
  return kExitInvalid;
}

}  // namespace gnl::cli
