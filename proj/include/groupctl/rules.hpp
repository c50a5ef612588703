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

#ifndef GROUPCTL_RULES_HPP_
#define GROUPCTL_RULES_HPP_

#include <optional>
#include <string_view>

#include "groupctl/core.hpp"

namespace groupctl {

// Procedural aggregation rules. Both close an initial set under one-step
// qualification inside the group; they differ only in the initial set.
//   csr: members qualified by every member of the group.
//   lsr: members who qualify themselves.
enum class Rule { csr, lsr };

inline std::string_view to_string(Rule rule) {
  return rule == Rule::csr ? "csr" : "lsr";
}

inline std::optional<Rule> parse_rule(std::string_view text) {
  if (text == "csr" || text == "CSR") return Rule::csr;
  if (text == "lsr" || text == "LSR") return Rule::lsr;
  return std::nullopt;
}

inline Bits initial_bits(Rule rule, const Profile& profile, const Bits& group) {
  Bits seed = group;
  if (rule == Rule::csr) {
    for (auto a = group.find_first(); a != Bits::npos; a = group.find_next(a))
      seed &= profile.row(a);
  } else {
    for (auto a = group.find_first(); a != Bits::npos; a = group.find_next(a))
      if (!profile.qualifies(a, a)) seed.reset(a);
  }
  return seed;
}

// Least fixed point containing the initial set and closed under
// qualification within `group`. Each member enters the frontier once, so the
// cost is one row-OR per qualified individual.
inline Bits socially_qualified_bits(Rule rule, const Profile& profile,
                                    const Bits& group) {
  Bits result = initial_bits(rule, profile, group);
  Bits frontier = result;
  Bits next(profile.size());
  while (frontier.any()) {
    next.reset();
    for (auto a = frontier.find_first(); a != Bits::npos;
         a = frontier.find_next(a))
      next |= profile.row(a);
    next &= group;
    next -= result;
    result |= next;
    frontier.swap(next);
  }
  return result;
}

inline IndividualSet initial_set(Rule rule, const Profile& profile,
                                 const IndividualSet& group) {
  group.require_range(profile.size(), "initial_set");
  return IndividualSet::from_bits(
      initial_bits(rule, profile, group.to_bits(profile.size())));
}

inline IndividualSet socially_qualified(Rule rule, const Profile& profile,
                                        const IndividualSet& group) {
  group.require_range(profile.size(), "socially_qualified");
  return IndividualSet::from_bits(
      socially_qualified_bits(rule, profile, group.to_bits(profile.size())));
}

}  // namespace groupctl

#endif  // GROUPCTL_RULES_HPP_
