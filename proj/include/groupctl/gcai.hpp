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

// Group Control by Adding Individuals (GCAI).
//
// Given a profile over N, distinguished individuals S, a group T with
// S subset-of T, and a budget k: find U subset-of N \ T with |U| <= k such
// that every member of S is socially qualified in T + U.
//
// Solvers:
//   solve_bruteforce  subsets of N \ T by size, then lexicographically.
//   solve_csr_fpt     guess an initially qualified individual, reduce to
//                     vertex-weighted directed Steiner tree. 3^|S| * poly.
//   solve_lsr_fpt     fresh root pointing at self-qualifiers, same reduction.
//   solve_csr_qc      QC profiles: only the two order-extreme members of S
//                     matter.
//   solve_dqc         DQC profiles: at most two qualified individuals cover S.
//   solve_auto        picks one of the above.
//
// Every solver except solve_dqc returns a minimum-size certificate; solve_dqc
// is exact as a decision procedure. Every returned certificate is re-checked
// with verify() before it leaves the solver.

#ifndef GROUPCTL_GCAI_HPP_
#define GROUPCTL_GCAI_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "groupctl/core.hpp"
#include "groupctl/domains.hpp"
#include "groupctl/rules.hpp"
#include "groupctl/steiner.hpp"

namespace groupctl {

class GcaiInstance {
 public:
  // Requires nonempty S subset-of T subset-of [0, n). The budget is clamped
  // to |N \ T|.
  GcaiInstance(Profile profile, IndividualSet distinguished,
               IndividualSet group, std::size_t budget)
      : profile_(std::move(profile)),
        distinguished_(std::move(distinguished)),
        group_(std::move(group)),
        budget_(budget) {
    if (distinguished_.empty())
      throw InputError("distinguished set must be nonempty");
    validate();
  }

  const Profile& profile() const { return profile_; }
  std::size_t size() const { return profile_.size(); }
  // S
  const IndividualSet& distinguished() const { return distinguished_; }
  // T
  const IndividualSet& group() const { return group_; }
  // k
  std::size_t budget() const { return budget_; }
  // N \ T
  IndividualSet outsiders() const {
    return minus(IndividualSet::all(size()), group_);
  }

  // Same instance with a different distinguished set. Unlike the
  // constructor this accepts an empty set, which the reduction rules can
  // produce.
  GcaiInstance with_distinguished(IndividualSet distinguished) const {
    GcaiInstance copy = *this;
    copy.distinguished_ = std::move(distinguished);
    copy.validate();
    return copy;
  }

  friend bool operator==(const GcaiInstance&, const GcaiInstance&) = default;

 private:
  void validate() {
    const std::size_t n = profile_.size();
    distinguished_.require_range(n, "S");
    group_.require_range(n, "T");
    if (group_.empty()) throw InputError("group T must be nonempty");
    if (!distinguished_.is_subset_of(group_))
      throw InputError("S is not a subset of T");
    budget_ = std::min(budget_, n - group_.size());
  }

  Profile profile_;
  IndividualSet distinguished_;
  IndividualSet group_;
  std::size_t budget_;
};

struct SolveOptions {
  std::size_t brute_cap = 25;     // max |N \ T| for brute force
  std::size_t terminal_cap = 20;  // max |S| after reduction for the FPT path
  unsigned threads = 1;
};

namespace strategy {
inline constexpr const char* kBruteforce = "bruteforce";
inline constexpr const char* kFptCsr = "fpt-csr";
inline constexpr const char* kFptLsr = "fpt-lsr";
inline constexpr const char* kQcCsr = "qc-csr";
inline constexpr const char* kDqc = "dqc";
}  // namespace strategy

struct SolveResult {
  std::optional<IndividualSet> certificate;  // U, when feasible
  std::optional<std::size_t> optimal_cost;   // min |U|, when the solver proves it
  std::string strategy;

  bool feasible() const { return certificate.has_value(); }
};

inline bool verify(const GcaiInstance& inst, Rule rule,
                   const IndividualSet& added) {
  const std::size_t n = inst.size();
  if (!added.in_range(n)) return false;
  if (added.size() > inst.budget()) return false;
  Bits members = inst.group().to_bits(n);
  for (Individual a : added) {
    if (members[a]) return false;
    members.set(a);
  }
  const Bits q = socially_qualified_bits(rule, inst.profile(), members);
  for (Individual s : inst.distinguished())
    if (!q[s]) return false;
  return true;
}

namespace detail {

inline SolveResult finish(const GcaiInstance& inst, Rule rule,
                          std::optional<IndividualSet> certificate,
                          const char* strategy, bool optimal) {
  SolveResult r;
  r.strategy = strategy;
  if (certificate) {
    if (!verify(inst, rule, *certificate))
      throw std::logic_error(std::string(strategy) +
                             ": produced an invalid certificate " +
                             certificate->to_string());
    if (optimal) r.optimal_cost = certificate->size();
    r.certificate = std::move(certificate);
  }
  return r;
}

// Smallest feasible U with |U| <= max_size, enumerating by size and then
// lexicographically.
inline std::optional<IndividualSet> bruteforce_upto(const GcaiInstance& inst,
                                                    Rule rule,
                                                    std::size_t max_size) {
  const std::size_t n = inst.size();
  const std::vector<Individual> outs = inst.outsiders().members();
  const Bits group = inst.group().to_bits(n);
  const Bits target = inst.distinguished().to_bits(n);
  const std::size_t t = outs.size();
  max_size = std::min(max_size, t);
  Bits members(n);
  std::vector<std::size_t> idx;
  for (std::size_t size = 0; size <= max_size; ++size) {
    idx.resize(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      members = group;
      for (std::size_t i : idx) members.set(outs[i]);
      if (target.is_subset_of(socially_qualified_bits(rule, inst.profile(), members))) {
        std::vector<Individual> u;
        for (std::size_t i : idx) u.push_back(outs[i]);
        return IndividualSet(std::move(u));
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == t - size + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

struct Candidate {
  std::size_t cost;
  IndividualSet certificate;
};

inline bool better(const Candidate& a, const std::optional<Candidate>& best) {
  if (!best) return true;
  if (a.cost != best->cost) return a.cost < best->cost;
  return a.certificate < best->certificate;
}

// Runs job(i) for i in [0, count), on `threads` workers when > 1. Results
// land in per-index slots so the caller can reduce them in index order.
template <class Job>
auto run_indexed(std::size_t count, unsigned threads, Job job)
    -> std::vector<decltype(job(std::size_t{}))> {
  std::vector<decltype(job(std::size_t{}))> out(count);
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = job(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(threads, count));
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        if (failed) return;
        try {
          out[i] = job(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

// Descending pass: a' leaves S when another current member (or itself, if
// `self_counts`) qualifies it. One pass is exhaustive because S only shrinks.
inline GcaiInstance prune_distinguished(const GcaiInstance& inst,
                                        bool self_counts) {
  std::vector<Individual> s = inst.distinguished().members();
  const Profile& p = inst.profile();
  for (std::size_t i = s.size(); i-- > 0;) {
    const Individual target = s[i];
    bool covered = false;
    for (Individual a : s)
      if ((a != target || self_counts) && p.qualifies(a, target)) {
        covered = true;
        break;
      }
    if (covered) s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return inst.with_distinguished(IndividualSet(std::move(s)));
}

}  // namespace detail

inline SolveResult solve_bruteforce(const GcaiInstance& inst, Rule rule,
                                    const SolveOptions& options = {}) {
  const std::size_t t = inst.size() - inst.group().size();
  if (t > options.brute_cap)
    throw CapacityError("brute force: |N \\ T| = " + std::to_string(t) +
                        " exceeds the cap of " +
                        std::to_string(options.brute_cap));
  return detail::finish(inst, rule,
                        detail::bruteforce_upto(inst, rule, inst.budget()),
                        strategy::kBruteforce, true);
}

// If a != a' in S and a qualifies a', a' moves to T \ S. Among mutually
// qualifying members the smallest index stays.
inline GcaiInstance apply_reduction_rule_csr(const GcaiInstance& inst) {
  return detail::prune_distinguished(inst, false);
}

// As the CSR rule, but a self-qualifying member of S also leaves S.
inline GcaiInstance apply_reduction_rule_lsr(const GcaiInstance& inst) {
  return detail::prune_distinguished(inst, true);
}

inline SolveResult solve_csr_fpt(const GcaiInstance& inst,
                                 const SolveOptions& options = {}) {
  const GcaiInstance reduced = apply_reduction_rule_csr(inst);
  if (reduced.distinguished().empty())
    return detail::finish(inst, Rule::csr, IndividualSet{}, strategy::kFptCsr,
                          true);
  if (reduced.distinguished().size() > options.terminal_cap)
    throw CapacityError("fpt: |S| = " +
                        std::to_string(reduced.distinguished().size()) +
                        " exceeds the cap of " +
                        std::to_string(options.terminal_cap));

  const Profile& phi = reduced.profile();
  const std::size_t n = reduced.size();
  const IndividualSet& group = reduced.group();
  const std::size_t k = reduced.budget();
  const Bits group_bits = group.to_bits(n);

  // A guess a* is the member of the initial qualified set in the final
  // group. Viable guesses are qualified by all of T (and by themselves when
  // they have to be added). Guesses inside T that keep the same individuals
  // produce identical subinstances, so only the first is solved.
  struct Guess {
    Individual pivot;
    bool charged;
    Bits keep;
  };
  std::vector<Guess> guesses;
  std::vector<Bits> seen_keep;
  for (Individual pivot = 0; pivot < n; ++pivot) {
    const bool charged = !group_bits[pivot];
    if (charged && k == 0) continue;
    Bits extended = group_bits;
    extended.set(pivot);
    bool viable = true;
    for (auto b = extended.find_first(); b != Bits::npos;
         b = extended.find_next(b))
      if (!phi.qualifies(b, pivot)) {
        viable = false;
        break;
      }
    if (!viable) continue;
    Bits keep = extended;
    for (Individual c = 0; c < n; ++c)
      if (phi.qualifies(c, pivot)) keep.set(c);
    if (!charged) {
      if (std::find(seen_keep.begin(), seen_keep.end(), keep) != seen_keep.end())
        continue;
      seen_keep.push_back(keep);
    }
    guesses.push_back({pivot, charged, std::move(keep)});
  }

  const SteinerOptions steiner{options.terminal_cap};
  auto solve_guess = [&](std::size_t gi) -> std::optional<detail::Candidate> {
    const Guess& guess = guesses[gi];
    const std::size_t charge = guess.charged ? 1 : 0;
    const Restriction sub = restrict_to(phi, IndividualSet::from_bits(guess.keep));
    const std::vector<Individual> to_new = sub.to_new(n);
    const std::size_t m = sub.original.size();

    Bits sub_group(m);
    for (Individual a : group) sub_group.set(to_new[a]);
    sub_group.set(to_new[guess.pivot]);
    const Bits qualified =
        socially_qualified_bits(Rule::csr, sub.profile, sub_group);

    std::vector<Individual> pending;
    for (Individual s : reduced.distinguished())
      if (!qualified[to_new[s]]) pending.push_back(to_new[s]);

    std::vector<Individual> cert;
    if (guess.charged) cert.push_back(guess.pivot);
    if (!pending.empty()) {
      const MergeResult merged = merge(incidence_graph(sub.profile),
                                       IndividualSet::from_bits(qualified));
      const std::size_t mv = merged.graph.vertex_count();
      std::vector<Individual> back(mv, kNone);
      for (Individual r = 0; r < m; ++r)
        if (!qualified[r]) back[merged.index_map[r]] = r;

      DvwstInstance dv;
      dv.graph = merged.graph;
      dv.root = merged.merged;
      std::vector<Vertex> terms;
      for (Individual r : pending) terms.push_back(merged.index_map[r]);
      dv.terminals = IndividualSet(std::move(terms));
      dv.weight.assign(mv, 0);
      for (Vertex v = 0; v < mv; ++v)
        if (back[v] != kNone && !sub_group[back[v]]) dv.weight[v] = 1;
      dv.budget = static_cast<Weight>(k - charge);

      const auto sol = solve_dvwst(dv, steiner);
      if (!sol) return std::nullopt;
      for (Vertex v : sol->chosen)
        if (dv.weight[v] == 1) cert.push_back(sub.original[back[v]]);
    }
    IndividualSet u(std::move(cert));
    const std::size_t cost = u.size();
    return detail::Candidate{cost, std::move(u)};
  };

  std::optional<detail::Candidate> best;
  if (options.threads <= 1) {
    for (std::size_t gi = 0; gi < guesses.size(); ++gi) {
      if (best && (guesses[gi].charged ? 1u : 0u) > best->cost) continue;
      auto c = solve_guess(gi);
      if (c && detail::better(*c, best)) best = std::move(c);
    }
  } else {
    auto all = detail::run_indexed(guesses.size(), options.threads, solve_guess);
    for (auto& c : all)
      if (c && detail::better(*c, best)) best = std::move(c);
  }
  std::optional<IndividualSet> cert;
  if (best) cert = std::move(best->certificate);
  return detail::finish(inst, Rule::csr, std::move(cert), strategy::kFptCsr,
                        true);
}

inline SolveResult solve_lsr_fpt(const GcaiInstance& inst,
                                 const SolveOptions& options = {}) {
  const GcaiInstance reduced = apply_reduction_rule_lsr(inst);
  if (reduced.distinguished().empty())
    return detail::finish(inst, Rule::lsr, IndividualSet{}, strategy::kFptLsr,
                          true);
  if (reduced.distinguished().size() > options.terminal_cap)
    throw CapacityError("fpt: |S| = " +
                        std::to_string(reduced.distinguished().size()) +
                        " exceeds the cap of " +
                        std::to_string(options.terminal_cap));

  const Profile& phi = reduced.profile();
  const std::size_t n = reduced.size();
  std::vector<Digraph::Arc> arcs = incidence_graph(phi).arcs();
  const Vertex root = n;
  for (Individual a = 0; a < n; ++a)
    if (phi.qualifies(a, a)) arcs.push_back({root, a});

  DvwstInstance dv;
  dv.graph = Digraph(n + 1, arcs);
  dv.root = root;
  dv.terminals = reduced.distinguished();
  dv.weight.assign(n + 1, 0);
  for (Individual a : reduced.outsiders()) dv.weight[a] = 1;
  dv.budget = static_cast<Weight>(reduced.budget());

  std::optional<IndividualSet> cert;
  if (const auto sol = solve_dvwst(dv, SteinerOptions{options.terminal_cap})) {
    std::vector<Individual> u;
    for (Vertex v : sol->chosen)
      if (dv.weight[v] == 1) u.push_back(v);
    cert = IndividualSet(std::move(u));
  }
  return detail::finish(inst, Rule::lsr, std::move(cert), strategy::kFptLsr,
                        true);
}

inline SolveResult solve_fpt(const GcaiInstance& inst, Rule rule,
                             const SolveOptions& options = {}) {
  return rule == Rule::csr ? solve_csr_fpt(inst, options)
                           : solve_lsr_fpt(inst, options);
}

// CSR on a QC profile: the socially qualified set is an interval of the
// order, so reaching the leftmost and rightmost members of S suffices.
inline SolveResult solve_csr_qc(const GcaiInstance& inst,
                                const LinearOrder& order,
                                const SolveOptions& options = {}) {
  if (order.size() != inst.size() || !is_qc_under(inst.profile(), order))
    throw InputError("solve_csr_qc: profile is not QC under the given order");
  Individual left = inst.distinguished().front();
  Individual right = left;
  for (Individual s : inst.distinguished()) {
    if (order.position(s) < order.position(left)) left = s;
    if (order.position(s) > order.position(right)) right = s;
  }
  const SolveResult inner =
      solve_csr_fpt(inst.with_distinguished(IndividualSet{left, right}), options);
  return detail::finish(inst, Rule::csr, inner.certificate, strategy::kQcCsr,
                        true);
}

// DQC profiles: the union of several DQC rows is covered by the two rows
// with the longest 1-prefix and 1-suffix, so some set S' of at most two
// socially qualified individuals qualifies all of S. Each candidate S' is
// solved as its own instance (S', T + S', k - |S' \ T|).
inline SolveResult solve_dqc(const GcaiInstance& inst, Rule rule,
                             const LinearOrder& order,
                             const SolveOptions& options = {}) {
  if (order.size() != inst.size() || !is_dqc_under(inst.profile(), order))
    throw InputError("solve_dqc: profile is not DQC under the given order");
  const std::size_t k = inst.budget();
  if (k < 2)
    return detail::finish(inst, rule, detail::bruteforce_upto(inst, rule, k),
                          strategy::kDqc, false);

  const std::size_t n = inst.size();
  const Profile& phi = inst.profile();
  const Bits target = inst.distinguished().to_bits(n);
  std::vector<IndividualSet> covers;
  for (Individual i = 0; i < n; ++i)
    for (Individual j = i; j < n; ++j) {
      Bits q = phi.row(i) | phi.row(j);
      if (target.is_subset_of(q)) covers.push_back(IndividualSet{i, j});
    }

  SolveOptions inner_options = options;
  inner_options.threads = 1;
  auto solve_cover = [&](std::size_t ci) -> std::optional<detail::Candidate> {
    const IndividualSet& cover = covers[ci];
    const IndividualSet extra = minus(cover, inst.group());
    const GcaiInstance sub(phi, cover, unite(inst.group(), cover),
                           k - extra.size());
    const SolveResult r = solve_fpt(sub, rule, inner_options);
    if (!r.feasible()) return std::nullopt;
    IndividualSet u = unite(*r.certificate, extra);
    const std::size_t cost = u.size();
    return detail::Candidate{cost, std::move(u)};
  };

  std::optional<detail::Candidate> best;
  for (auto& c : detail::run_indexed(covers.size(), options.threads, solve_cover))
    if (c && detail::better(*c, best)) best = std::move(c);
  std::optional<IndividualSet> cert;
  if (best) cert = std::move(best->certificate);
  return detail::finish(inst, rule, std::move(cert), strategy::kDqc, false);
}

// Dispatch: DQC first, then QC for CSR, otherwise whichever of FPT (3^|S|
// after the reduction rule) and brute force (2^|N \ T|) is cheaper.
inline SolveResult solve_auto(const GcaiInstance& inst, Rule rule,
                              const SolveOptions& options = {}) {
  if (const auto order = recognize_dqc(inst.profile()))
    return solve_dqc(inst, rule, *order, options);
  if (rule == Rule::csr)
    if (const auto order = recognize_qc(inst.profile()))
      return solve_csr_qc(inst, *order, options);

  const GcaiInstance reduced = rule == Rule::csr
                                   ? apply_reduction_rule_csr(inst)
                                   : apply_reduction_rule_lsr(inst);
  const auto s = static_cast<double>(reduced.distinguished().size());
  const std::size_t t = inst.size() - inst.group().size();
  const bool fpt_fits = reduced.distinguished().size() <= options.terminal_cap;
  const bool brute_fits = t <= options.brute_cap;
  const bool brute_cheaper =
      static_cast<double>(t) * std::log(2.0) <= s * std::log(3.0);
  if (brute_fits && (brute_cheaper || !fpt_fits))
    return solve_bruteforce(inst, rule, options);
  return solve_fpt(inst, rule, options);
}

}  // namespace groupctl

#endif  // GROUPCTL_GCAI_HPP_
