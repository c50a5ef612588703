// Copyright 2026 The groupctl Authors
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

// Command-line front end. Exit codes:
//   0  feasible / accepted / recognized / generated
//   1  infeasible / rejected / not recognized
//   2  usage, parse, input or capacity error
//   3  internal error

#ifndef GROUPCTL_TOOLS_CLI_APP_HPP_
#define GROUPCTL_TOOLS_CLI_APP_HPP_

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "groupctl/groupctl.hpp"

namespace groupctl::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kInputError = 2,
  kInternalError = 3,
};

namespace detail {

inline std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

template <class Range>
std::string join(const Range& items) {
  std::string s;
  for (Individual a : items) {
    if (!s.empty()) s += ' ';
    s += std::to_string(a);
  }
  return s;
}

inline Rule pick_rule(const std::string& flag, const InstanceFile& file) {
  if (!flag.empty()) {
    if (auto r = parse_rule(flag)) return *r;
    throw CLI::ValidationError("--rule", "expected csr or lsr");
  }
  if (file.rule) return *file.rule;
  throw CLI::RequiredError("--rule (the instance carries no rule tag)");
}

// "1,2 5" -> {1, 2, 5}; empty text or "none" is the empty set.
inline IndividualSet parse_certificate(const std::string& text) {
  std::vector<Individual> out;
  if (text == "none") return {};
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token[0] == '-')
      throw CLI::ValidationError("--certificate", "bad index '" + token + "'");
    out.push_back(static_cast<Individual>(v));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t')
      flush();
    else
      token += c;
  }
  flush();
  return IndividualSet(std::move(out));
}

inline nlohmann::json to_json(const IndividualSet& set) {
  return nlohmann::json(set.members());
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err, std::istream& in = std::cin) {
  CLI::App app{"groupctl: group identification and control by adding individuals"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print machine-readable JSON");

  std::string rule_flag, path = "-";

  auto* qualify = app.add_subcommand(
      "qualify", "Socially qualified members of T; accepted iff S is covered");
  qualify->add_option("--rule", rule_flag, "csr or lsr");
  qualify->add_option("file", path, "Instance file ('-' for stdin)");

  std::string algo = "auto";
  std::size_t max_brute = SolveOptions{}.brute_cap;
  unsigned threads = 1;
  auto* solve = app.add_subcommand("solve", "Solve the GCAI instance");
  solve->add_option("--rule", rule_flag, "csr or lsr");
  solve->add_option("--algo", algo, "auto|fpt|brute|qc|dqc")
      ->check(CLI::IsMember({"auto", "fpt", "brute", "qc", "dqc"}));
  solve->add_option("--max-brute", max_brute, "Largest |N \\ T| for brute force");
  solve->add_option("--threads", threads, "Worker threads for independent branches")
      ->check(CLI::Range(1u, 256u));
  solve->add_option("file", path, "Instance file ('-' for stdin)");

  std::string domain;
  auto* recognize = app.add_subcommand("recognize", "Find a QC or DQC witness order");
  recognize->add_option("--domain", domain, "qc or dqc")
      ->required()
      ->check(CLI::IsMember({"qc", "dqc"}));
  recognize->add_option("file", path, "Instance file ('-' for stdin)");

  std::string certificate;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate U");
  verify_cmd->add_option("--rule", rule_flag, "csr or lsr");
  verify_cmd->add_option("--certificate", certificate, "Indices, comma or space separated; 'none' for the empty set")
      ->required();
  verify_cmd->add_option("file", path, "Instance file ('-' for stdin)");

  std::string kind;
  std::uint64_t seed = 0;
  std::size_t n = 8, s_size = 2, t_size = 4, k = 2, reds = 4, blues = 4, kappa = 2;
  double density = 0.3, edge_prob = 0.4;
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("kind", kind, "random|qc|dqc|rbds-csr|rbds-lsr")
      ->required()
      ->check(CLI::IsMember({"random", "qc", "dqc", "rbds-csr", "rbds-lsr"}));
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_option("--n", n, "Individuals");
  gen->add_option("--density", density, "Probability of a qualification (random)");
  gen->add_option("--s", s_size, "|S|");
  gen->add_option("--t", t_size, "|T|");
  gen->add_option("--k", k, "Budget");
  gen->add_option("--reds", reds, "Red vertices (rbds-*)");
  gen->add_option("--blues", blues, "Blue vertices (rbds-*)");
  gen->add_option("--edge-prob", edge_prob, "Edge probability (rbds-*)");
  gen->add_option("--kappa", kappa, "Dominating set budget (rbds-*)");
  gen->add_option("--rule-tag", rule_flag, "Rule tag to embed in the file");

  std::vector<std::string> argv_store = args;
  std::vector<const char*> argv;
  argv.push_back("groupctl");
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "groupctl: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*gen) {
      std::optional<Rule> tag;
      if (!rule_flag.empty()) {
        tag = parse_rule(rule_flag);
        if (!tag) throw CLI::ValidationError("--rule-tag", "expected csr or lsr");
      }
      std::vector<std::string> comments;
      std::optional<GcaiInstance> inst;
      std::string origin = " gen " + kind + " --seed " + std::to_string(seed);
      if (kind == "random") {
        inst = gen_instance(gen_random(n, density, seed), s_size, t_size, k, seed + 1);
      } else if (kind == "qc" || kind == "dqc") {
        const OrderedProfile op = kind == "qc" ? gen_qc(n, seed) : gen_dqc(n, seed);
        comments.push_back(" order: " + detail::join(op.order.order()));
        inst = gen_instance(op.profile, s_size, t_size, k, seed + 1);
      } else {
        const RbdsInstance rb = gen_rbds(reds, blues, edge_prob, kappa, seed);
        if (kind == "rbds-csr") {
          inst = rbds_to_gcai_csr(rb);
          if (!tag) tag = Rule::csr;
        } else {
          LsrReduction red = rbds_to_gcai_lsr_qc(rb);
          comments.push_back(" order: " + detail::join(red.order.order()));
          inst = std::move(red.instance);
          if (!tag) tag = Rule::lsr;
        }
      }
      comments.insert(comments.begin(), origin);
      out << serialize_instance(InstanceFile{*inst, tag, comments});
      return kOk;
    }

    const InstanceFile file = parse_instance(detail::read_source(path, in));
    const GcaiInstance& inst = file.instance;

    if (*qualify) {
      const Rule rule = detail::pick_rule(rule_flag, file);
      const IndividualSet q = socially_qualified(rule, inst.profile(), inst.group());
      const bool accepted = inst.distinguished().is_subset_of(q);
      if (json) {
        out << nlohmann::json{{"rule", to_string(rule)},
                              {"qualified", detail::to_json(q)},
                              {"accepted", accepted}}
                   .dump()
            << "\n";
      } else {
        out << "qualified: " << detail::join(q) << "\n"
            << "accepted: " << (accepted ? "yes" : "no") << "\n";
      }
      return accepted ? kOk : kNegative;
    }

    if (*recognize) {
      const auto order = domain == "qc" ? recognize_qc(inst.profile())
                                        : recognize_dqc(inst.profile());
      if (json) {
        nlohmann::json j{{"domain", domain}, {"recognized", order.has_value()}};
        if (order) j["order"] = order->order();
        out << j.dump() << "\n";
      } else {
        out << "order: " << (order ? detail::join(order->order()) : "none") << "\n";
      }
      return order ? kOk : kNegative;
    }

    if (*verify_cmd) {
      const Rule rule = detail::pick_rule(rule_flag, file);
      const IndividualSet u = detail::parse_certificate(certificate);
      const bool ok = verify(inst, rule, u);
      if (json)
        out << nlohmann::json{{"rule", to_string(rule)}, {"accepted", ok}}.dump() << "\n";
      else
        out << (ok ? "accepted" : "rejected") << "\n";
      return ok ? kOk : kNegative;
    }

    // solve
    const Rule rule = detail::pick_rule(rule_flag, file);
    SolveOptions options;
    options.brute_cap = max_brute;
    options.threads = threads;
    SolveResult result;
    if (algo == "auto") {
      result = solve_auto(inst, rule, options);
    } else if (algo == "fpt") {
      result = solve_fpt(inst, rule, options);
    } else if (algo == "brute") {
      result = solve_bruteforce(inst, rule, options);
    } else if (algo == "qc") {
      if (rule != Rule::csr)
        throw CLI::ValidationError("--algo qc", "only available for --rule csr");
      const auto order = recognize_qc(inst.profile());
      if (!order) throw InputError("profile is not QC");
      result = solve_csr_qc(inst, *order, options);
    } else {
      const auto order = recognize_dqc(inst.profile());
      if (!order) throw InputError("profile is not DQC");
      result = solve_dqc(inst, rule, *order, options);
    }
    if (json) {
      nlohmann::json j{{"rule", to_string(rule)},
                       {"strategy", result.strategy},
                       {"feasible", result.feasible()}};
      j["certificate"] = result.certificate ? detail::to_json(*result.certificate)
                                            : nlohmann::json(nullptr);
      j["optimal_cost"] = result.optimal_cost ? nlohmann::json(*result.optimal_cost)
                                              : nlohmann::json(nullptr);
      out << j.dump() << "\n";
    } else {
      out << "feasible: " << (result.feasible() ? "yes" : "no") << "\n"
          << "strategy: " << result.strategy << "\n";
      if (result.certificate)
        out << "certificate: " << detail::join(*result.certificate) << "\n";
      if (result.optimal_cost) out << "cost: " << *result.optimal_cost << "\n";
    }
    return result.feasible() ? kOk : kNegative;
  } catch (const CLI::Error& e) {
    err << "groupctl: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "groupctl: " << e.what() << "\n";
    return kInputError;
  } catch (const CapacityError& e) {
    err << "groupctl: capacity: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "groupctl: internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace groupctl::cli

#endif  // GROUPCTL_TOOLS_CLI_APP_HPP_
