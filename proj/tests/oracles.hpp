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

// Test-only reference implementations. These use nothing from the library
// beyond the data accessors, so they can check the solvers independently.

#ifndef GROUPCTL_TESTS_ORACLES_HPP_
#define GROUPCTL_TESTS_ORACLES_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "groupctl/groupctl.hpp"

namespace groupctl::oracle {

// Literal K_l recurrence, each round recomputed from scratch over std::set.
inline std::set<Individual> rule_recurrence(Rule rule, const Profile& p,
                                            const std::set<Individual>& group) {
  std::set<Individual> k;
  for (Individual a : group) {
    bool in = true;
    if (rule == Rule::csr) {
      for (Individual b : group)
        if (!p.qualifies(b, a)) in = false;
    } else {
      in = p.qualifies(a, a);
    }
    if (in) k.insert(a);
  }
  while (true) {
    std::set<Individual> next = k;
    for (Individual a : group)
      for (Individual b : k)
        if (p.qualifies(b, a)) next.insert(a);
    if (next == k) return k;
    k = std::move(next);
  }
}

inline std::set<Individual> as_set(const IndividualSet& s) {
  return std::set<Individual>(s.begin(), s.end());
}

// Vertices reachable from `from` following phi, BFS over the matrix.
inline std::vector<bool> matrix_reach(const Profile& p, Individual from) {
  std::vector<bool> seen(p.size(), false);
  std::queue<Individual> q;
  q.push(from);
  seen[from] = true;
  while (!q.empty()) {
    const Individual a = q.front();
    q.pop();
    for (Individual b = 0; b < p.size(); ++b)
      if (p.qualifies(a, b) && !seen[b]) {
        seen[b] = true;
        q.push(b);
      }
  }
  return seen;
}

// BFS over an explicit adjacency list restricted to `allowed` vertices.
inline std::vector<bool> list_reach(const std::vector<std::vector<std::size_t>>& adj,
                                    std::size_t from,
                                    const std::vector<bool>& allowed) {
  std::vector<bool> seen(adj.size(), false);
  if (!allowed[from]) return seen;
  std::queue<std::size_t> q;
  q.push(from);
  seen[from] = true;
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (std::size_t w : adj[v])
      if (allowed[w] && !seen[w]) {
        seen[w] = true;
        q.push(w);
      }
  }
  return seen;
}

inline bool row_contiguous(const Profile& p, Individual a,
                           const std::vector<Individual>& order, bool value) {
  std::size_t first = order.size(), last = 0, count = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (p.qualifies(a, order[i]) == value) {
      first = std::min(first, i);
      last = i;
      ++count;
    }
  return count == 0 || last - first + 1 == count;
}

// Tries all n! orders.
inline std::optional<std::vector<Individual>> consecutive_by_permutation(
    const Profile& p, bool value) {
  std::vector<Individual> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  do {
    bool ok = true;
    for (Individual a = 0; a < p.size() && ok; ++a)
      ok = row_contiguous(p, a, order, value);
    if (ok) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

// min sum w(J) over J subset-of V \ (X + root) with every terminal reachable
// inside J + X + root. Exhaustive over vertex subsets.
inline std::optional<Weight> dvwst_exhaustive(const DvwstInstance& inst) {
  const std::size_t n = inst.graph.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = inst.graph.out(v);
  std::vector<Vertex> free;
  for (Vertex v = 0; v < n; ++v)
    if (v != inst.root && !inst.terminals.contains(v)) free.push_back(v);
  std::optional<Weight> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    std::vector<bool> allowed(n, false);
    allowed[inst.root] = true;
    for (Vertex x : inst.terminals) allowed[x] = true;
    Weight w = 0;
    for (std::size_t i = 0; i < free.size(); ++i)
      if (mask >> i & 1) {
        allowed[free[i]] = true;
        w += inst.weight[free[i]];
      }
    if (best && w >= *best) continue;
    const auto seen = list_reach(adj, inst.root, allowed);
    bool ok = true;
    for (Vertex x : inst.terminals) ok = ok && seen[x];
    if (ok) best = w;
  }
  return best;
}

// min sum w(J) over arc subsets J with every terminal reachable from the
// root using arcs of J. Exhaustive; keep the arc count small.
inline std::optional<Weight> dst_exhaustive(const DstInstance& inst) {
  const auto arcs = inst.graph.arcs();
  const std::size_t n = inst.graph.vertex_count();
  std::optional<Weight> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << arcs.size()); ++mask) {
    Weight w = 0;
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < arcs.size(); ++i)
      if (mask >> i & 1) {
        w += inst.weight_of(arcs[i].from, arcs[i].to);
        adj[arcs[i].from].push_back(arcs[i].to);
      }
    if (best && w >= *best) continue;
    const auto seen = list_reach(adj, inst.root, std::vector<bool>(n, true));
    bool ok = true;
    for (Vertex x : inst.terminals) ok = ok && seen[x];
    if (ok) best = w;
  }
  return best;
}

// Minimum |U| by trying every subset of N \ T, checked with the literal
// recurrence. Independent of solve_bruteforce.
inline std::optional<std::size_t> gcai_min_cost(const GcaiInstance& inst, Rule rule) {
  const auto outs = inst.outsiders().members();
  std::optional<std::size_t> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << outs.size()); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size > inst.budget() || (best && size >= *best)) continue;
    std::set<Individual> members(inst.group().begin(), inst.group().end());
    for (std::size_t i = 0; i < outs.size(); ++i)
      if (mask >> i & 1) members.insert(outs[i]);
    const auto q = rule_recurrence(rule, inst.profile(), members);
    bool ok = true;
    for (Individual s : inst.distinguished()) ok = ok && q.count(s);
    if (ok) best = size;
  }
  return best;
}

inline Profile random_profile(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  return Profile::generate(n, [&](std::size_t, std::size_t) { return coin(rng); });
}

inline IndividualSet random_subset(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Individual> v;
  for (Individual a = 0; a < n; ++a)
    if (coin(rng)) v.push_back(a);
  return IndividualSet(std::move(v));
}

// Random GCAI instance; S and T nonempty.
inline GcaiInstance random_instance(std::mt19937_64& rng, const Profile& p) {
  const std::size_t n = p.size();
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  IndividualSet t = random_subset(rng, n, 0.5);
  if (t.empty()) t = IndividualSet{pick(rng)};
  IndividualSet s = intersect(t, random_subset(rng, n, 0.5));
  if (s.empty()) s = IndividualSet{t.front()};
  std::uniform_int_distribution<std::size_t> kd(0, n - t.size());
  return GcaiInstance(p, s, t, kd(rng));
}

}  // namespace groupctl::oracle

#endif  // GROUPCTL_TESTS_ORACLES_HPP_
