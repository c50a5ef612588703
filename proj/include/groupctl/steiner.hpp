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

// Directed Steiner problems.
//
// DVWST (vertex weights) is solved by splitting every non-terminal,
// non-root vertex v into v_in -> v_out carrying w(v), which yields an
// arc-weighted DST instance with the same optimum. DST is solved exactly by
// the Dreyfus-Wagner subset recurrence, run in the directed form:
//
//   cost[D][v] = min( min_{D1 | D2 = D} cost[D1][v] + cost[D2][v],
//                     min_{v -> w}     w(v, w) + cost[D][w] )
//
// where cost[D][v] is the cheapest arc set through which v reaches every
// terminal in D. The second term is a shortest-path pass per subset, so the
// total work is O(3^l * n + 2^l * m log n) for l terminals.

#ifndef GROUPCTL_STEINER_HPP_
#define GROUPCTL_STEINER_HPP_

#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "groupctl/core.hpp"

namespace groupctl {

using Weight = std::int64_t;

inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max() / 2;

// Sum of two nonnegative weights; kInfinity absorbs.
inline Weight checked_add(Weight a, Weight b) {
  if (a >= kInfinity || b >= kInfinity) return kInfinity;
  if (a > kInfinity - 1 - b) throw CapacityError("weight overflow");
  return a + b;
}

struct SteinerOptions {
  std::size_t max_terminals = 20;
};

struct DvwstInstance {
  Digraph graph;
  IndividualSet terminals;
  Vertex root = 0;
  std::vector<Weight> weight;  // per vertex
  Weight budget = 0;

  void validate() const {
    const std::size_t n = graph.vertex_count();
    if (root >= n) throw InputError("dvwst: root out of range");
    terminals.require_range(n, "dvwst terminals");
    if (terminals.contains(root))
      throw InputError("dvwst: root must not be a terminal");
    if (weight.size() != n)
      throw InputError("dvwst: weight vector has wrong length");
    for (Weight w : weight)
      if (w < 0) throw InputError("dvwst: negative vertex weight");
    if (budget < 0) throw InputError("dvwst: negative budget");
  }
};

struct DstInstance {
  Digraph graph;
  IndividualSet terminals;
  Vertex root = 0;
  // arc_weight[v][i] is the weight of the arc v -> graph.out(v)[i].
  std::vector<std::vector<Weight>> arc_weight;
  Weight budget = 0;

  Weight weight_of(Vertex from, Vertex to) const {
    const auto& nb = graph.out(from);
    const auto it = std::lower_bound(nb.begin(), nb.end(), to);
    if (it == nb.end() || *it != to)
      throw InputError("dst: no arc " + std::to_string(from) + "->" +
                       std::to_string(to));
    return arc_weight[from][static_cast<std::size_t>(it - nb.begin())];
  }

  void validate() const {
    const std::size_t n = graph.vertex_count();
    if (root >= n) throw InputError("dst: root out of range");
    terminals.require_range(n, "dst terminals");
    if (terminals.contains(root))
      throw InputError("dst: root must not be a terminal");
    if (arc_weight.size() != n)
      throw InputError("dst: weight table has wrong length");
    for (Vertex v = 0; v < n; ++v) {
      if (arc_weight[v].size() != graph.out(v).size())
        throw InputError("dst: weight row " + std::to_string(v) +
                         " has wrong length");
      for (Weight w : arc_weight[v])
        if (w < 0) throw InputError("dst: negative arc weight");
    }
    if (budget < 0) throw InputError("dst: negative budget");
  }
};

// Correspondence between a DVWST graph and its split DST graph.
struct SplitMap {
  std::vector<Vertex> origin;    // DST vertex -> DVWST vertex
  std::vector<Vertex> in_copy;   // DVWST vertex -> v_in (or its only copy)
  std::vector<Vertex> out_copy;  // DVWST vertex -> v_out (or its only copy)

  bool is_split(Vertex v) const { return in_copy[v] != out_copy[v]; }

  // The DVWST vertex whose split arc is `arc`, if it is one.
  std::optional<Vertex> split_vertex(const Digraph::Arc& arc) const {
    const Vertex v = origin[arc.from];
    if (is_split(v) && arc.from == in_copy[v] && arc.to == out_copy[v])
      return v;
    return std::nullopt;
  }
};

struct DstTransform {
  DstInstance instance;
  SplitMap back_map;
};

// Replaces each vertex outside terminals and root by v_in -> v_out with
// weight w(v); original arcs leave from v_out, enter at v_in, and weigh 0.
// Loops are dropped: they never help reachability.
inline DstTransform dvwst_to_dst(const DvwstInstance& inst) {
  inst.validate();
  const std::size_t n = inst.graph.vertex_count();
  SplitMap map;
  map.in_copy.assign(n, kNone);
  map.out_copy.assign(n, kNone);
  for (Vertex v = 0; v < n; ++v) {
    const bool keep_whole = v == inst.root || inst.terminals.contains(v);
    map.in_copy[v] = map.origin.size();
    map.origin.push_back(v);
    if (keep_whole) {
      map.out_copy[v] = map.in_copy[v];
    } else {
      map.out_copy[v] = map.origin.size();
      map.origin.push_back(v);
    }
  }

  std::vector<Digraph::Arc> arcs;
  std::vector<Weight> split_weight(map.origin.size(), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (map.is_split(v)) {
      arcs.push_back({map.in_copy[v], map.out_copy[v]});
      split_weight[map.in_copy[v]] = inst.weight[v];
    }
    for (Vertex w : inst.graph.out(v))
      if (w != v) arcs.push_back({map.out_copy[v], map.in_copy[w]});
  }

  DstTransform out;
  out.instance.graph = Digraph(map.origin.size(), arcs);
  out.instance.root = map.in_copy[inst.root];
  std::vector<Individual> terms;
  for (Vertex x : inst.terminals) terms.push_back(map.in_copy[x]);
  out.instance.terminals = IndividualSet(std::move(terms));
  out.instance.budget = inst.budget;
  out.instance.arc_weight.resize(map.origin.size());
  for (Vertex a = 0; a < map.origin.size(); ++a) {
    for (Vertex b : out.instance.graph.out(a)) {
      const Vertex v = map.origin[a];
      const bool split_arc =
          map.is_split(v) && a == map.in_copy[v] && b == map.out_copy[v];
      out.instance.arc_weight[a].push_back(split_arc ? split_weight[a] : 0);
    }
  }
  out.back_map = std::move(map);
  return out;
}

struct DstSolution {
  Weight cost = 0;
  std::vector<Digraph::Arc> arcs;  // sorted
};

// Minimum-weight arc set through which the root reaches every terminal,
// or nullopt when none exists within the budget.
inline std::optional<DstSolution> solve_dst_min(
    const DstInstance& inst, const SteinerOptions& options = {}) {
  inst.validate();
  const std::size_t l = inst.terminals.size();
  if (l > options.max_terminals || l >= 31)
    throw CapacityError("dst: " + std::to_string(l) +
                        " terminals exceed the cap of " +
                        std::to_string(options.max_terminals));
  if (l == 0) return DstSolution{};

  const Digraph& g = inst.graph;
  const std::size_t n = g.vertex_count();

  // Only vertices on some root -> terminal walk matter.
  const std::vector<bool> fwd = reachable_from(g, inst.root);
  for (Vertex x : inst.terminals)
    if (!fwd[x]) return std::nullopt;
  std::vector<std::vector<std::pair<Vertex, Weight>>> rev_all(n);
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t i = 0; i < g.out(v).size(); ++i) {
      const Vertex w = g.out(v)[i];
      if (w != v) rev_all[w].emplace_back(v, inst.arc_weight[v][i]);
    }
  std::vector<bool> bwd(n, false);
  {
    std::vector<Vertex> stack(inst.terminals.begin(), inst.terminals.end());
    for (Vertex x : stack) bwd[x] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const auto& [p, w] : rev_all[v])
        if (!bwd[p]) {
          bwd[p] = true;
          stack.push_back(p);
        }
    }
  }
  std::vector<Vertex> local(n, kNone), global;
  for (Vertex v = 0; v < n; ++v)
    if (fwd[v] && bwd[v]) {
      local[v] = global.size();
      global.push_back(v);
    }
  const std::size_t m = global.size();
  std::vector<std::vector<std::pair<std::uint32_t, Weight>>> rev(m);
  for (std::size_t lv = 0; lv < m; ++lv)
    for (const auto& [p, w] : rev_all[global[lv]])
      if (local[p] != kNone)
        rev[lv].emplace_back(static_cast<std::uint32_t>(local[p]), w);

  std::vector<std::size_t> term;
  for (Vertex x : inst.terminals) term.push_back(local[x]);

  constexpr std::int32_t kLeaf = -2;
  constexpr std::int32_t kSplit = -1;
  const std::size_t subsets = std::size_t{1} << l;
  std::vector<Weight> cost(subsets * m, kInfinity);
  std::vector<std::int32_t> via(subsets * m, kLeaf);
  std::vector<std::uint32_t> split_at(subsets * m, 0);

  using Entry = std::pair<Weight, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (std::size_t d = 1; d < subsets; ++d) {
    Weight* row = &cost[d * m];
    std::int32_t* row_via = &via[d * m];
    std::uint32_t* row_split = &split_at[d * m];
    if (std::has_single_bit(d)) {
      const std::size_t x = term[static_cast<std::size_t>(std::countr_zero(d))];
      row[x] = 0;
      row_via[x] = kLeaf;
    } else {
      const std::size_t low = d & (~d + 1);
      const std::size_t rest = d ^ low;
      for (std::size_t s = rest;; s = (s - 1) & rest) {
        const std::size_t sub = s | low;
        if (sub != d) {
          const Weight* a = &cost[sub * m];
          const Weight* b = &cost[(d ^ sub) * m];
          for (std::size_t v = 0; v < m; ++v) {
            const Weight c = checked_add(a[v], b[v]);
            if (c < row[v]) {
              row[v] = c;
              row_via[v] = kSplit;
              row_split[v] = static_cast<std::uint32_t>(sub);
            }
          }
        }
        if (s == 0) break;
      }
    }
    for (std::size_t v = 0; v < m; ++v)
      if (row[v] < kInfinity) heap.emplace(row[v], static_cast<std::uint32_t>(v));
    while (!heap.empty()) {
      const auto [dist, v] = heap.top();
      heap.pop();
      if (dist > row[v]) continue;
      for (const auto& [p, w] : rev[v]) {
        const Weight nd = checked_add(dist, w);
        if (nd < row[p]) {
          row[p] = nd;
          row_via[p] = static_cast<std::int32_t>(v);
          heap.emplace(nd, p);
        }
      }
    }
  }

  const std::size_t full = subsets - 1;
  const std::size_t root = local[inst.root];
  const Weight best = cost[full * m + root];
  if (best >= kInfinity || best > inst.budget) return std::nullopt;

  std::vector<Digraph::Arc> arcs;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{root, full}};
  while (!stack.empty()) {
    const auto [v, d] = stack.back();
    stack.pop_back();
    const std::int32_t how = via[d * m + v];
    if (how == kLeaf) continue;
    if (how == kSplit) {
      const std::size_t sub = split_at[d * m + v];
      stack.emplace_back(v, d ^ sub);
      stack.emplace_back(v, sub);
    } else {
      const auto w = static_cast<std::size_t>(how);
      arcs.push_back({global[v], global[w]});
      stack.emplace_back(w, d);
    }
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  Weight total = 0;
  for (const auto& e : arcs) total = checked_add(total, inst.weight_of(e.from, e.to));
  if (total != best)
    throw std::logic_error("dst: witness weight differs from optimum");
  return DstSolution{best, std::move(arcs)};
}

struct DvwstSolution {
  Weight cost = 0;
  IndividualSet chosen;  // non-root, non-terminal vertices used
};

// Minimum total vertex weight of J such that the root reaches every terminal
// inside the subgraph induced by J, the root and the terminals.
inline std::optional<DvwstSolution> solve_dvwst(
    const DvwstInstance& inst, const SteinerOptions& options = {}) {
  const DstTransform t = dvwst_to_dst(inst);
  const auto sol = solve_dst_min(t.instance, options);
  if (!sol) return std::nullopt;
  std::vector<Vertex> chosen;
  Weight total = 0;
  for (const auto& arc : sol->arcs)
    if (const auto v = t.back_map.split_vertex(arc)) {
      chosen.push_back(*v);
      total = checked_add(total, inst.weight[*v]);
    }
  return DvwstSolution{total, IndividualSet(std::move(chosen))};
}

}  // namespace groupctl

#endif  // GROUPCTL_STEINER_HPP_
