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

#include <random>
#include <tuple>

#include <gtest/gtest.h>

#include "groupctl/steiner.hpp"
#include "oracles.hpp"

namespace groupctl {
namespace {

using WeightedArc = std::tuple<Vertex, Vertex, Weight>;

DstInstance make_dst(std::size_t n, const std::vector<WeightedArc>& arcs,
                     IndividualSet terminals, Vertex root, Weight budget) {
  std::vector<Digraph::Arc> plain;
  for (const auto& [a, b, w] : arcs) plain.push_back({a, b});
  DstInstance inst{Digraph(n, plain), std::move(terminals), root, {}, budget};
  inst.arc_weight.resize(n);
  for (Vertex v = 0; v < n; ++v)
    inst.arc_weight[v].assign(inst.graph.out(v).size(), 0);
  for (const auto& [a, b, w] : arcs) {
    const auto& nb = inst.graph.out(a);
    const auto i = std::lower_bound(nb.begin(), nb.end(), b) - nb.begin();
    inst.arc_weight[a][static_cast<std::size_t>(i)] = w;
  }
  return inst;
}

// Every terminal reachable from the root using only `arcs`.
bool arcs_connect(const DstInstance& inst, const std::vector<Digraph::Arc>& arcs) {
  std::vector<std::vector<std::size_t>> adj(inst.graph.vertex_count());
  for (const auto& a : arcs) adj[a.from].push_back(a.to);
  const auto seen = oracle::list_reach(
      adj, inst.root, std::vector<bool>(inst.graph.vertex_count(), true));
  for (Vertex x : inst.terminals)
    if (!seen[x]) return false;
  return true;
}

bool vertices_connect(const DvwstInstance& inst, const IndividualSet& chosen) {
  std::vector<bool> allowed(inst.graph.vertex_count(), false);
  allowed[inst.root] = true;
  for (Vertex v : inst.terminals) allowed[v] = true;
  for (Vertex v : chosen) allowed[v] = true;
  std::vector<std::vector<std::size_t>> adj(inst.graph.vertex_count());
  for (Vertex v = 0; v < inst.graph.vertex_count(); ++v) adj[v] = inst.graph.out(v);
  const auto seen = oracle::list_reach(adj, inst.root, allowed);
  for (Vertex x : inst.terminals)
    if (!seen[x]) return false;
  return true;
}

TEST(DvwstToDst, NothingToSplit) {
  const DvwstInstance inst{Digraph(3, {{0, 1}, {0, 2}, {1, 2}}), {1, 2}, 0, {0, 0, 0}, 0};
  const DstTransform t = dvwst_to_dst(inst);
  EXPECT_EQ(t.instance.graph, inst.graph);
  for (const auto& row : t.instance.arc_weight)
    for (Weight w : row) EXPECT_EQ(w, 0);
}

TEST(DvwstToDst, PathSplitsMiddleVertex) {
  const DvwstInstance inst{Digraph(3, {{0, 1}, {1, 2}}), {2}, 0, {0, 3, 0}, 3};
  const DstTransform t = dvwst_to_dst(inst);
  const SplitMap& m = t.back_map;
  ASSERT_EQ(t.instance.graph.vertex_count(), 4u);
  const Vertex vin = m.in_copy[1], vout = m.out_copy[1];
  EXPECT_TRUE(m.is_split(1));
  EXPECT_FALSE(m.is_split(0));
  EXPECT_EQ(t.instance.graph.arcs(),
            (std::vector<Digraph::Arc>{{m.in_copy[0], vin}, {vin, vout}, {vout, m.in_copy[2]}}));
  EXPECT_EQ(t.instance.weight_of(m.in_copy[0], vin), 0);
  EXPECT_EQ(t.instance.weight_of(vin, vout), 3);
  EXPECT_EQ(t.instance.weight_of(vout, m.in_copy[2]), 0);
  EXPECT_EQ(m.split_vertex({vin, vout}), std::optional<Vertex>(1));
  EXPECT_EQ(t.instance.terminals, IndividualSet{m.in_copy[2]});
}

TEST(DvwstToDst, IsolatedVertex) {
  const DvwstInstance inst{Digraph(3, {{0, 1}}), {1}, 0, {0, 0, 5}, 0};
  const DstTransform t = dvwst_to_dst(inst);
  const Vertex vin = t.back_map.in_copy[2], vout = t.back_map.out_copy[2];
  EXPECT_EQ(t.instance.weight_of(vin, vout), 5);
  EXPECT_EQ(t.instance.graph.out(vout).size(), 0u);
  std::size_t into_vin = 0;
  for (const auto& a : t.instance.graph.arcs()) into_vin += a.to == vin;
  EXPECT_EQ(into_vin, 0u);
}

TEST(DvwstToDst, DropsLoops) {
  const DvwstInstance inst{Digraph(2, {{0, 0}, {0, 1}}), {1}, 0, {0, 0}, 0};
  EXPECT_EQ(dvwst_to_dst(inst).instance.graph.arc_count(), 1u);
}

TEST(SolveDst, Examples) {
  const auto single = solve_dst_min(make_dst(2, {{0, 1, 0}}, {1}, 0, 0));
  ASSERT_TRUE(single);
  EXPECT_EQ(single->cost, 0);
  EXPECT_EQ(single->arcs, (std::vector<Digraph::Arc>{{0, 1}}));

  // u=0, a=1, x1=2, x2=3.
  const DstInstance shared =
      make_dst(4, {{0, 1, 1}, {1, 2, 0}, {1, 3, 0}, {0, 2, 5}, {0, 3, 5}}, {2, 3}, 0, 10);
  const auto s = solve_dst_min(shared);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->cost, 1);
  EXPECT_EQ(oracle::dst_exhaustive(shared), std::optional<Weight>(1));
  EXPECT_TRUE(arcs_connect(shared, s->arcs));

  const DstInstance unreachable = make_dst(3, {{0, 1, 0}}, {2}, 0, 1000);
  EXPECT_FALSE(solve_dst_min(unreachable));
}

TEST(SolveDst, BudgetBoundsCost) {
  DstInstance shared =
      make_dst(4, {{0, 1, 1}, {1, 2, 0}, {1, 3, 0}, {0, 2, 5}, {0, 3, 5}}, {2, 3}, 0, 0);
  EXPECT_FALSE(solve_dst_min(shared));
  shared.budget = 1;
  EXPECT_TRUE(solve_dst_min(shared));
}

TEST(SolveDst, TerminalCap) {
  std::vector<WeightedArc> arcs;
  std::vector<Vertex> terms;
  for (Vertex v = 1; v <= 4; ++v) {
    arcs.emplace_back(0, v, 1);
    terms.push_back(v);
  }
  const DstInstance inst = make_dst(5, arcs, IndividualSet(terms), 0, 100);
  EXPECT_THROW(solve_dst_min(inst, SteinerOptions{3}), CapacityError);
  EXPECT_EQ(solve_dst_min(inst, SteinerOptions{4})->cost, 4);
}

TEST(SolveDst, RejectsMalformed) {
  EXPECT_THROW(solve_dst_min(make_dst(2, {{0, 1, 0}}, {0}, 0, 0)), InputError);
  EXPECT_THROW(solve_dst_min(make_dst(2, {{0, 1, -1}}, {1}, 0, 0)), InputError);
  EXPECT_THROW(solve_dst_min(make_dst(2, {{0, 1, 0}}, {1}, 0, -1)), InputError);
}

TEST(SolveDvwst, Examples) {
  const DvwstInstance star{Digraph(3, {{0, 1}, {0, 2}}), {1, 2}, 0, {0, 0, 0}, 0};
  const auto s = solve_dvwst(star);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->cost, 0);
  EXPECT_TRUE(s->chosen.empty());

  DvwstInstance path{Digraph(3, {{0, 1}, {1, 2}}), {2}, 0, {0, 3, 0}, 3};
  const auto p = solve_dvwst(path);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->cost, 3);
  EXPECT_EQ(p->chosen, IndividualSet{1});
  path.budget = 2;
  EXPECT_FALSE(solve_dvwst(path));

  // u=0, v1=1, v2=2, x=3.
  const DvwstInstance diamond{
      Digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}), {3}, 0, {0, 1, 2, 0}, 10};
  const auto d = solve_dvwst(diamond);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->cost, 1);
  EXPECT_EQ(d->chosen, IndividualSet{1});
}

TEST(SolveDvwst, NoTerminals) {
  const DvwstInstance inst{Digraph(2), {}, 0, {0, 4}, 0};
  const auto s = solve_dvwst(inst);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->cost, 0);
}

DvwstInstance random_dvwst(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> nd(2, 10);
  const std::size_t n = nd(rng);
  std::bernoulli_distribution arc(0.25);
  std::vector<Digraph::Arc> arcs;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      if (arc(rng)) arcs.push_back({a, b});
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const Vertex root = pick(rng);
  std::uniform_int_distribution<std::size_t> ld(0, std::min<std::size_t>(4, n - 1));
  const std::size_t l = ld(rng);
  std::vector<Vertex> others;
  for (Vertex v = 0; v < n; ++v)
    if (v != root) others.push_back(v);
  std::shuffle(others.begin(), others.end(), rng);
  others.resize(l);
  std::uniform_int_distribution<Weight> wd(0, 4);
  std::vector<Weight> w(n);
  for (auto& x : w) x = wd(rng);
  std::uniform_int_distribution<Weight> bd(0, 12);
  return DvwstInstance{Digraph(n, arcs), IndividualSet(others), root, w, bd(rng)};
}

TEST(SolveDvwst, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(41);
  int feasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const DvwstInstance inst = random_dvwst(rng);
    const auto best = oracle::dvwst_exhaustive(inst);
    const auto got = solve_dvwst(inst);
    const bool expect = best && *best <= inst.budget;
    ASSERT_EQ(static_cast<bool>(got), expect) << "trial " << trial;
    if (!got) continue;
    ++feasible;
    ASSERT_EQ(got->cost, *best);
    Weight w = 0;
    for (Vertex v : got->chosen) w += inst.weight[v];
    ASSERT_EQ(w, got->cost);
    ASSERT_TRUE(vertices_connect(inst, got->chosen));
    for (Vertex v : got->chosen)
      ASSERT_TRUE(v != inst.root && !inst.terminals.contains(v));

    // Same optimum through the transformed instance.
    const DstTransform t = dvwst_to_dst(inst);
    const auto dst = solve_dst_min(t.instance);
    ASSERT_TRUE(dst);
    ASSERT_EQ(dst->cost, got->cost);
  }
  EXPECT_GT(feasible, 100);
}

TEST(SolveDst, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<std::size_t> nd(2, 6);
    const std::size_t n = nd(rng);
    std::bernoulli_distribution arc(0.3);
    std::uniform_int_distribution<Weight> wd(0, 5);
    std::vector<WeightedArc> arcs;
    for (Vertex a = 0; a < n && arcs.size() < 14; ++a)
      for (Vertex b = 0; b < n && arcs.size() < 14; ++b)
        if (a != b && arc(rng)) arcs.emplace_back(a, b, wd(rng));
    std::vector<Vertex> terms;
    for (Vertex v = 1; v < n && terms.size() < 4; ++v)
      if (arc(rng)) terms.push_back(v);
    const DstInstance inst = make_dst(n, arcs, IndividualSet(terms), 0, 1000);
    const auto best = oracle::dst_exhaustive(inst);
    const auto got = solve_dst_min(inst);
    ASSERT_EQ(static_cast<bool>(got), static_cast<bool>(best)) << "trial " << trial;
    if (!got) continue;
    ASSERT_EQ(got->cost, *best);
    ASSERT_TRUE(arcs_connect(inst, got->arcs));
    Weight w = 0;
    for (const auto& a : got->arcs) w += inst.weight_of(a.from, a.to);
    ASSERT_EQ(w, got->cost);
  }
}

TEST(SolveDvwst, BudgetMonotone) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    DvwstInstance inst = random_dvwst(rng);
    bool was = false;
    for (Weight p = 0; p <= 14; ++p) {
      inst.budget = p;
      const bool now = static_cast<bool>(solve_dvwst(inst));
      ASSERT_TRUE(!was || now);
      was = now;
    }
  }
}

TEST(CheckedAdd, DetectsOverflow) {
  EXPECT_EQ(checked_add(2, 3), 5);
  EXPECT_THROW(checked_add(kInfinity - 1, 5), CapacityError);
}

}  // namespace
}  // namespace groupctl
