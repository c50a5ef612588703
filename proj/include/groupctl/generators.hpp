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

// Seeded instance generators. Output depends only on the arguments: the bit
// stream is std::mt19937_64 and all range reductions are done here rather than
// through the implementation-defined standard distributions.

#ifndef GROUPCTL_GENERATORS_HPP_
#define GROUPCTL_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "groupctl/core.hpp"
#include "groupctl/domains.hpp"
#include "groupctl/gcai.hpp"
#include "groupctl/reductions.hpp"

namespace groupctl {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound).
  std::size_t below(std::size_t bound) {
    if (bound == 0) throw InputError("Rng::below: empty range");
    const std::uint64_t b = bound;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return static_cast<std::size_t>(x % b);
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  std::vector<Individual> permutation(std::size_t n) {
    std::vector<Individual> p = IndividualSet::all(n).members();
    shuffle(p);
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

inline Profile gen_random(std::size_t n, double density, std::uint64_t seed) {
  if (n == 0) throw InputError("gen_random: n must be positive");
  if (!(density >= 0.0 && density <= 1.0))
    throw InputError("gen_random: density must lie in [0, 1]");
  Rng rng(seed);
  return Profile::generate(n, [&](std::size_t, std::size_t) {
    return rng.chance(density);
  });
}

struct OrderedProfile {
  Profile profile;
  LinearOrder order;
};

namespace detail {

// Each row gets one random block [i, j] of positions in a hidden random
// order, filled with `inside`; the rest of the row is !inside.
inline OrderedProfile gen_blocks(std::size_t n, std::uint64_t seed,
                                 bool inside) {
  if (n == 0) throw InputError("generator: n must be positive");
  Rng rng(seed);
  LinearOrder hidden(rng.permutation(n));
  std::vector<Bits> rows(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t i = rng.below(n), j = rng.below(n);
    if (i > j) std::swap(i, j);
    if (!inside) rows[a].set();
    for (std::size_t pos = i; pos <= j; ++pos) rows[a][hidden.at(pos)] = inside;
  }
  return OrderedProfile{Profile(std::move(rows)), std::move(hidden)};
}

}  // namespace detail

// QC profile together with an order under which it is QC.
inline OrderedProfile gen_qc(std::size_t n, std::uint64_t seed) {
  return detail::gen_blocks(n, seed, true);
}

// DQC profile together with an order under which it is DQC.
inline OrderedProfile gen_dqc(std::size_t n, std::uint64_t seed) {
  return detail::gen_blocks(n, seed, false);
}

// Random T of size t, S a random s-subset of T.
inline GcaiInstance gen_instance(const Profile& profile, std::size_t s,
                                 std::size_t t, std::size_t k,
                                 std::uint64_t seed) {
  const std::size_t n = profile.size();
  if (s == 0 || s > t || t > n)
    throw InputError("gen_instance: need 1 <= |S| <= |T| <= n, got |S| = " +
                     std::to_string(s) + ", |T| = " + std::to_string(t) +
                     ", n = " + std::to_string(n));
  Rng rng(seed);
  std::vector<Individual> perm = rng.permutation(n);
  std::vector<Individual> group(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(t));
  std::vector<Individual> dist(group.begin(), group.begin() + static_cast<std::ptrdiff_t>(s));
  return GcaiInstance(profile, IndividualSet(std::move(dist)),
                      IndividualSet(std::move(group)), k);
}

inline RbdsInstance gen_rbds(std::size_t reds, std::size_t blues,
                             double edge_probability, std::size_t kappa,
                             std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
    throw InputError("gen_rbds: edge probability must lie in [0, 1]");
  Rng rng(seed);
  RbdsInstance inst;
  inst.reds = reds;
  inst.blues = blues;
  inst.kappa = kappa;
  for (std::size_t r = 0; r < reds; ++r)
    for (std::size_t b = 0; b < blues; ++b)
      if (rng.chance(edge_probability)) inst.edges.emplace_back(r, b);
  return inst;
}

}  // namespace groupctl

#endif  // GROUPCTL_GENERATORS_HPP_
