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

// Individuals, qualification profiles and the incidence digraph.
//
// Individuals are dense 0-based indices. A Profile stores phi as one bit-row
// per individual: row(a) has bit b set iff a qualifies b.

#ifndef GROUPCTL_CORE_HPP_
#define GROUPCTL_CORE_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "groupctl/error.hpp"

namespace groupctl {

using Individual = std::size_t;
using Vertex = std::size_t;
using Bits = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Sorted, duplicate-free list of individuals.
class IndividualSet {
 public:
  using const_iterator = std::vector<Individual>::const_iterator;

  IndividualSet() = default;
  IndividualSet(std::initializer_list<Individual> members)
      : IndividualSet(std::vector<Individual>(members)) {}
  explicit IndividualSet(std::vector<Individual> members)
      : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
  }

  // {0, 1, ..., n-1}
  static IndividualSet all(std::size_t n) {
    std::vector<Individual> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return IndividualSet(std::move(v));
  }

  static IndividualSet from_bits(const Bits& bits) {
    std::vector<Individual> v;
    v.reserve(bits.count());
    for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i))
      v.push_back(i);
    IndividualSet out;
    out.members_ = std::move(v);
    return out;
  }

  Bits to_bits(std::size_t n) const {
    Bits bits(n);
    for (Individual a : members_) bits.set(a);
    return bits;
  }

  const std::vector<Individual>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  Individual front() const { return members_.front(); }
  Individual back() const { return members_.back(); }

  bool contains(Individual a) const {
    return std::binary_search(members_.begin(), members_.end(), a);
  }

  bool is_subset_of(const IndividualSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
  }

  bool in_range(std::size_t n) const {
    return members_.empty() || members_.back() < n;
  }

  // Throws InputError naming `what` when some member is >= n.
  void require_range(std::size_t n, std::string_view what) const {
    if (!in_range(n)) {
      throw InputError(std::string(what) + ": index " +
                       std::to_string(members_.back()) +
                       " out of range for " + std::to_string(n) +
                       " individuals");
    }
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(members_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const IndividualSet&, const IndividualSet&) = default;
  friend auto operator<=>(const IndividualSet& a, const IndividualSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Individual> members_;
};

inline IndividualSet unite(const IndividualSet& a, const IndividualSet& b) {
  std::vector<Individual> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return IndividualSet(std::move(out));
}

inline IndividualSet minus(const IndividualSet& a, const IndividualSet& b) {
  std::vector<Individual> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return IndividualSet(std::move(out));
}

inline IndividualSet intersect(const IndividualSet& a, const IndividualSet& b) {
  std::vector<Individual> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return IndividualSet(std::move(out));
}

// n x n qualification matrix. Immutable once built.
class Profile {
 public:
  // Builds the profile with phi(a, b) = qualifies(a, b).
  template <class Fn>
  static Profile generate(std::size_t n, Fn&& qualifies) {
    std::vector<Bits> rows(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (qualifies(a, b)) rows[a].set(b);
    return Profile(std::move(rows));
  }

  // One string of '0'/'1' per row.
  static Profile from_strings(const std::vector<std::string>& rows) {
    const std::size_t n = rows.size();
    std::vector<Bits> bits(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a) {
      if (rows[a].size() != n)
        throw InputError("row " + std::to_string(a) + " has length " +
                         std::to_string(rows[a].size()) + ", expected " +
                         std::to_string(n));
      for (std::size_t b = 0; b < n; ++b) {
        const char c = rows[a][b];
        if (c != '0' && c != '1')
          throw InputError("row " + std::to_string(a) + " has non-binary cell");
        if (c == '1') bits[a].set(b);
      }
    }
    return Profile(std::move(bits));
  }

  explicit Profile(std::vector<Bits> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw InputError("profile needs at least one individual");
    for (std::size_t a = 0; a < rows_.size(); ++a)
      if (rows_[a].size() != rows_.size())
        throw InputError("row " + std::to_string(a) + " has length " +
                         std::to_string(rows_[a].size()) + ", expected " +
                         std::to_string(rows_.size()));
  }

  std::size_t size() const { return rows_.size(); }
  bool qualifies(Individual a, Individual b) const { return rows_[a][b]; }
  // phi(a, .)
  const Bits& row(Individual a) const { return rows_[a]; }

  std::string row_string(Individual a) const {
    std::string s(size(), '0');
    for (std::size_t b = 0; b < size(); ++b)
      if (rows_[a][b]) s[b] = '1';
    return s;
  }

  Profile complement() const {
    std::vector<Bits> rows = rows_;
    for (auto& r : rows) r.flip();
    return Profile(std::move(rows));
  }

  // Relabels individual i as perm[i].
  Profile relabeled(const std::vector<Individual>& perm) const {
    const std::size_t n = size();
    if (perm.size() != n) throw InputError("relabeling has wrong length");
    std::vector<Bits> rows(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (qualifies(a, b)) rows[perm[a]].set(perm[b]);
    return Profile(std::move(rows));
  }

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<Bits> rows_;
};

// Directed graph with sorted, duplicate-free out-neighbour lists. Loops are
// permitted.
class Digraph {
 public:
  struct Arc {
    Vertex from;
    Vertex to;
    friend auto operator<=>(const Arc&, const Arc&) = default;
  };

  Digraph() = default;
  explicit Digraph(std::size_t vertex_count) : out_(vertex_count) {}
  Digraph(std::size_t vertex_count, const std::vector<Arc>& arcs)
      : out_(vertex_count) {
    for (const Arc& e : arcs) {
      if (e.from >= vertex_count || e.to >= vertex_count)
        throw InputError("arc (" + std::to_string(e.from) + "," +
                         std::to_string(e.to) + ") out of range");
      out_[e.from].push_back(e.to);
    }
    for (auto& nb : out_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
  }

  std::size_t vertex_count() const { return out_.size(); }
  const std::vector<Vertex>& out(Vertex v) const { return out_[v]; }

  bool has_arc(Vertex from, Vertex to) const {
    return std::binary_search(out_[from].begin(), out_[from].end(), to);
  }

  std::size_t arc_count() const {
    std::size_t m = 0;
    for (const auto& nb : out_) m += nb.size();
    return m;
  }

  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    for (Vertex v = 0; v < out_.size(); ++v)
      for (Vertex w : out_[v]) out.push_back({v, w});
    return out;
  }

  Digraph reversed() const {
    std::vector<Arc> rev;
    for (const Arc& e : arcs()) rev.push_back({e.to, e.from});
    return Digraph(vertex_count(), rev);
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<std::vector<Vertex>> out_;
};

// Vertices reachable from `source` (including itself).
inline std::vector<bool> reachable_from(const Digraph& g, Vertex source) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.out(v))
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return seen;
}

// Arc a -> b iff a qualifies b.
inline Digraph incidence_graph(const Profile& profile) {
  std::vector<Digraph::Arc> arcs;
  for (Individual a = 0; a < profile.size(); ++a) {
    const Bits& r = profile.row(a);
    for (auto b = r.find_first(); b != Bits::npos; b = r.find_next(b))
      arcs.push_back({a, b});
  }
  return Digraph(profile.size(), arcs);
}

// Individuals qualified by at least one member of `z`.
inline IndividualSet qualified_by(const Profile& profile,
                                  const IndividualSet& z) {
  z.require_range(profile.size(), "qualified_by");
  Bits acc(profile.size());
  for (Individual a : z) acc |= profile.row(a);
  return IndividualSet::from_bits(acc);
}

struct MergeResult {
  Digraph graph;
  Vertex merged = kNone;
  // Old vertex -> new vertex; every member of the merged set maps to `merged`.
  std::vector<Vertex> index_map;
};

// Contracts `y` into one vertex that inherits the external in- and
// out-neighbourhood of `y`. Arcs inside `y` disappear. Surviving vertices keep
// their relative order and the merged vertex takes the slot of min(y).
inline MergeResult merge(const Digraph& g, const IndividualSet& y) {
  if (y.empty()) throw InputError("merge: empty vertex set");
  y.require_range(g.vertex_count(), "merge");
  const std::size_t n = g.vertex_count();
  MergeResult result;
  result.index_map.assign(n, kNone);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (y.contains(v)) {
      if (v == y.front()) result.merged = next++;
      result.index_map[v] = kNone;
    } else {
      result.index_map[v] = next++;
    }
  }
  for (Vertex v : y) result.index_map[v] = result.merged;

  std::vector<Digraph::Arc> arcs;
  for (const Digraph::Arc& e : g.arcs()) {
    const bool from_in = y.contains(e.from);
    const bool to_in = y.contains(e.to);
    if (from_in && to_in) continue;
    arcs.push_back({result.index_map[e.from], result.index_map[e.to]});
  }
  result.graph = Digraph(next, arcs);
  return result;
}

struct Restriction {
  Profile profile;
  // New index -> original index.
  std::vector<Individual> original;

  // Original index -> new index, or kNone when the individual was dropped.
  std::vector<Individual> to_new(std::size_t original_size) const {
    std::vector<Individual> m(original_size, kNone);
    for (Individual i = 0; i < original.size(); ++i) m[original[i]] = i;
    return m;
  }
};

// Induced subprofile over `keep`, renumbered in ascending order.
inline Restriction restrict_to(const Profile& profile,
                               const IndividualSet& keep) {
  if (keep.empty()) throw InputError("restrict: empty individual set");
  keep.require_range(profile.size(), "restrict");
  const auto& idx = keep.members();
  Profile sub = Profile::generate(idx.size(), [&](std::size_t a, std::size_t b) {
    return profile.qualifies(idx[a], idx[b]);
  });
  return Restriction{std::move(sub), idx};
}

}  // namespace groupctl

#endif  // GROUPCTL_CORE_HPP_
