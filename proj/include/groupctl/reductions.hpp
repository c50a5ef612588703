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

// Red-Blue Dominating Set and its reductions to GCAI. The reductions double as
// generators of instances whose answer is known from an RBDS solver.

#ifndef GROUPCTL_REDUCTIONS_HPP_
#define GROUPCTL_REDUCTIONS_HPP_

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groupctl/core.hpp"
#include "groupctl/domains.hpp"
#include "groupctl/gcai.hpp"

namespace groupctl {

// Bipartite graph with reds 0..reds-1 and blues 0..blues-1 (separate index
// spaces). Edges are (red, blue).
struct RbdsInstance {
  std::size_t reds = 0;
  std::size_t blues = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t kappa = 0;

  void validate() const {
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("rbds: duplicate edge");
    for (const auto& [r, b] : edges)
      if (r >= reds || b >= blues)
        throw InputError("rbds: edge (" + std::to_string(r) + "," +
                         std::to_string(b) + ") out of range");
  }

  // Blues adjacent to red r, ascending.
  std::vector<std::size_t> neighbours(std::size_t r) const {
    std::vector<std::size_t> nb;
    for (const auto& [rr, b] : edges)
      if (rr == r) nb.push_back(b);
    std::sort(nb.begin(), nb.end());
    return nb;
  }
};

// Minimum dominating set of reds if its size is at most kappa.
inline std::optional<IndividualSet> solve_rbds_bruteforce(
    const RbdsInstance& inst, std::size_t cap = 20) {
  inst.validate();
  if (inst.reds > cap)
    throw CapacityError("rbds: " + std::to_string(inst.reds) +
                        " reds exceed the cap of " + std::to_string(cap));
  std::vector<Bits> dominated(inst.reds, Bits(inst.blues));
  for (const auto& [r, b] : inst.edges) dominated[r].set(b);
  Bits all(inst.blues);
  all.set();
  const std::size_t limit = std::min(inst.kappa, inst.reds);
  std::optional<IndividualSet> best;
  for (std::size_t mask = 0; mask < (std::size_t{1} << inst.reds); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size > limit || (best && size >= best->size())) continue;
    Bits cover(inst.blues);
    std::vector<Individual> chosen;
    for (std::size_t r = 0; r < inst.reds; ++r)
      if (mask >> r & 1) {
        cover |= dominated[r];
        chosen.push_back(r);
      }
    if (cover == all) best = IndividualSet(std::move(chosen));
  }
  return best;
}

// Individuals: reds 0..|R|-1, then blues |R|..|R|+|B|-1. Every individual
// qualifies all reds; a red additionally qualifies its adjacent blues.
// S = T = B, k = kappa.
inline GcaiInstance rbds_to_gcai_csr(const RbdsInstance& inst) {
  inst.validate();
  if (inst.blues == 0)
    throw InputError("rbds_to_gcai_csr: needs at least one blue vertex");
  const std::size_t nr = inst.reds;
  const std::size_t n = nr + inst.blues;
  std::vector<Bits> adj(nr, Bits(inst.blues));
  for (const auto& [r, b] : inst.edges) adj[r].set(b);
  Profile phi = Profile::generate(n, [&](std::size_t a, std::size_t b) {
    if (b < nr) return true;
    return a < nr && adj[a][b - nr];
  });
  std::vector<Individual> blues;
  for (std::size_t b = 0; b < inst.blues; ++b) blues.push_back(nr + b);
  IndividualSet s(std::move(blues));
  return GcaiInstance(std::move(phi), s, s, inst.kappa);
}

struct LsrReduction {
  GcaiInstance instance;
  LinearOrder order;               // witness under which the profile is QC
  std::vector<Individual> seed;    // red r -> individual r(0)
};

// For each red r with degree d: individuals r(0..d) in one block, in red
// order, followed by the blues. r(0) qualifies r(0..d); r(i), i >= 1,
// qualifies the i-th neighbour of r in ascending order. S = B,
// T = B + {r(i) : i >= 1}, k = kappa. The identity order is a QC witness.
inline LsrReduction rbds_to_gcai_lsr_qc(const RbdsInstance& inst) {
  inst.validate();
  if (inst.blues == 0)
    throw InputError("rbds_to_gcai_lsr_qc: needs at least one blue vertex");
  std::vector<std::vector<std::size_t>> nb(inst.reds);
  std::size_t n = inst.blues;
  for (std::size_t r = 0; r < inst.reds; ++r) {
    nb[r] = inst.neighbours(r);
    n += nb[r].size() + 1;
  }
  const std::size_t blue_base = n - inst.blues;

  std::vector<Bits> rows(n, Bits(n));
  std::vector<Individual> seed(inst.reds);
  std::vector<Individual> group;
  Individual next = 0;
  for (std::size_t r = 0; r < inst.reds; ++r) {
    const std::size_t d = nb[r].size();
    seed[r] = next;
    for (std::size_t i = 0; i <= d; ++i) rows[next].set(next + i);
    for (std::size_t i = 1; i <= d; ++i) {
      rows[next + i].set(blue_base + nb[r][i - 1]);
      group.push_back(next + i);
    }
    next += d + 1;
  }
  std::vector<Individual> blues;
  for (std::size_t b = 0; b < inst.blues; ++b) {
    blues.push_back(blue_base + b);
    group.push_back(blue_base + b);
  }
  GcaiInstance gi(Profile(std::move(rows)), IndividualSet(std::move(blues)),
                  IndividualSet(std::move(group)), inst.kappa);
  return LsrReduction{std::move(gi), LinearOrder::identity(n), std::move(seed)};
}

}  // namespace groupctl

#endif  // GROUPCTL_REDUCTIONS_HPP_
