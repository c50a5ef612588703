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

// Qualifying-consecutive (QC) and disqualifying-consecutive (DQC) profiles.
//
// A profile is QC under a linear order when every row, read in that order,
// has its 1s in one contiguous block; DQC is the same for 0s. Recognition is a
// consecutive-ones test on the rows, done by partition refinement inside
// overlap components and then nesting the components.

#ifndef GROUPCTL_DOMAINS_HPP_
#define GROUPCTL_DOMAINS_HPP_

#include <algorithm>
#include <list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "groupctl/core.hpp"

namespace groupctl {

// Permutation of the individuals, listed left to right.
class LinearOrder {
 public:
  explicit LinearOrder(std::vector<Individual> order)
      : order_(std::move(order)), position_(order_.size(), kNone) {
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (order_[i] >= order_.size() || position_[order_[i]] != kNone)
        throw InputError("linear order is not a permutation");
      position_[order_[i]] = i;
    }
  }

  static LinearOrder identity(std::size_t n) {
    return LinearOrder(IndividualSet::all(n).members());
  }

  std::size_t size() const { return order_.size(); }
  Individual at(std::size_t pos) const { return order_[pos]; }
  std::size_t position(Individual a) const { return position_[a]; }
  const std::vector<Individual>& order() const { return order_; }

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<Individual> order_;
  std::vector<std::size_t> position_;
};

namespace detail {

// True iff the positions holding `value` in `row` (read along `order`) form a
// single contiguous run. An empty run counts as contiguous.
inline bool run_is_contiguous(const Bits& row, const LinearOrder& order,
                              bool value) {
  int state = 0;  // 0: before the run, 1: inside, 2: after
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const bool hit = row[order.at(pos)] == value;
    if (hit) {
      if (state == 2) return false;
      state = 1;
    } else if (state == 1) {
      state = 2;
    }
  }
  return true;
}

inline bool all_rows_contiguous(const Profile& profile,
                                const LinearOrder& order, bool value) {
  if (order.size() != profile.size())
    throw InputError("linear order size does not match profile");
  for (Individual a = 0; a < profile.size(); ++a)
    if (!run_is_contiguous(profile.row(a), order, value)) return false;
  return true;
}

inline bool overlaps(const Bits& a, const Bits& b) {
  return a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a);
}

// Ordered partition of the columns covered by one overlap component.
struct Component {
  std::vector<std::size_t> rows;  // indices into the distinct-row list
  std::list<Bits> classes;
  Bits cover;
};

// Adds `row` to the ordered partition. The row must overlap a row that was
// already added. Returns false when the row cannot be made consecutive.
inline bool refine(Component& comp, const Bits& row) {
  using It = std::list<Bits>::iterator;
  const Bits fresh = row - comp.cover;
  It first = comp.classes.end();
  It last = comp.classes.end();
  std::size_t touched = 0;
  for (It it = comp.classes.begin(); it != comp.classes.end(); ++it) {
    if (!it->intersects(row)) continue;
    if (first == comp.classes.end()) first = it;
    last = it;
    ++touched;
  }
  if (first == comp.classes.end())
    throw std::logic_error("refine: row does not meet the component");
  // The touched classes must be adjacent, and the inner ones fully covered.
  if (static_cast<std::size_t>(std::distance(first, std::next(last))) != touched)
    return false;
  for (It it = first; it != last; ++it)
    if (it != first && !it->is_subset_of(row)) return false;

  const bool is_front = first == comp.classes.begin();
  const bool is_back = std::next(last) == comp.classes.end();

  // Splits *it into (outside, inside) or (inside, outside).
  auto split = [&](It it, bool inside_right) {
    Bits inside = *it & row;
    Bits outside = *it - row;
    if (outside.none()) return;
    if (inside_right) {
      *it = inside;
      comp.classes.insert(it, outside);
    } else {
      *it = inside;
      comp.classes.insert(std::next(it), outside);
    }
  };

  if (first == last) {
    if (fresh.none())
      throw std::logic_error("refine: row nested inside a single class");
    if (is_back) {
      split(first, true);
      comp.classes.push_back(fresh);
    } else if (is_front) {
      split(first, false);
      comp.classes.push_front(fresh);
    } else {
      return false;
    }
  } else if (fresh.none()) {
    split(first, true);
    split(last, false);
  } else if (is_back && last->is_subset_of(row)) {
    split(first, true);
    comp.classes.push_back(fresh);
  } else if (is_front && first->is_subset_of(row)) {
    split(last, false);
    comp.classes.push_front(fresh);
  } else {
    return false;
  }
  comp.cover |= row;
  return true;
}

struct Layout {
  std::vector<Component> comps;
  // children[c][k]: components nested inside class k of component c.
  std::vector<std::vector<std::vector<std::size_t>>> children;
  std::vector<std::size_t> roots;
};

inline void emit_block(const Layout& layout, const Bits& block,
                       const std::vector<std::size_t>& nested,
                       std::vector<Individual>& out);

inline void emit_component(const Layout& layout, std::size_t c,
                           std::vector<Individual>& out) {
  std::size_t k = 0;
  for (const Bits& cls : layout.comps[c].classes)
    emit_block(layout, cls, layout.children[c][k++], out);
}

// Lays out one class: nested components stay contiguous, and everything is
// placed by smallest member.
inline void emit_block(const Layout& layout, const Bits& block,
                       const std::vector<std::size_t>& nested,
                       std::vector<Individual>& out) {
  Bits loose = block;
  std::vector<std::pair<Individual, std::size_t>> items;  // (key, comp|kNone)
  for (std::size_t c : nested) {
    loose -= layout.comps[c].cover;
    items.emplace_back(layout.comps[c].cover.find_first(), c);
  }
  for (auto a = loose.find_first(); a != Bits::npos; a = loose.find_next(a))
    items.emplace_back(a, kNone);
  std::sort(items.begin(), items.end());
  for (const auto& [key, c] : items) {
    if (c == kNone)
      out.push_back(key);
    else
      emit_component(layout, c, out);
  }
}

}  // namespace detail

inline bool is_qc_under(const Profile& profile, const LinearOrder& order) {
  return detail::all_rows_contiguous(profile, order, true);
}

inline bool is_dqc_under(const Profile& profile, const LinearOrder& order) {
  return detail::all_rows_contiguous(profile, order, false);
}

// Consecutive-ones recognition over the rows of `profile`. Returns an order
// under which the profile is QC, or nullopt when none exists.
inline std::optional<LinearOrder> recognize_qc(const Profile& profile) {
  using detail::Component;
  const std::size_t n = profile.size();

  // Distinct rows that constrain anything: between 2 and n-1 ones.
  std::vector<Bits> rows;
  for (Individual a = 0; a < n; ++a) {
    const Bits& r = profile.row(a);
    const std::size_t c = r.count();
    if (c < 2 || c == n) continue;
    if (std::find(rows.begin(), rows.end(), r) == rows.end()) rows.push_back(r);
  }

  // Overlap components, each refined in BFS order so that every new row
  // overlaps one already placed.
  detail::Layout layout;
  std::vector<bool> done(rows.size(), false);
  for (std::size_t start = 0; start < rows.size(); ++start) {
    if (done[start]) continue;
    Component comp;
    comp.cover = rows[start];
    comp.classes.push_back(rows[start]);
    comp.rows.push_back(start);
    done[start] = true;
    for (std::size_t head = 0; head < comp.rows.size(); ++head) {
      const Bits& cur = rows[comp.rows[head]];
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (done[j] || !detail::overlaps(cur, rows[j])) continue;
        if (!detail::refine(comp, rows[j])) return std::nullopt;
        done[j] = true;
        comp.rows.push_back(j);
      }
    }
    layout.comps.push_back(std::move(comp));
  }

  // Component covers are laminar. Process by decreasing cover size, with a
  // single-row component ahead of a multi-row one of equal cover, and nest
  // each component inside the smallest earlier cover containing it.
  auto& comps = layout.comps;
  std::vector<std::size_t> by_size(comps.size());
  for (std::size_t i = 0; i < by_size.size(); ++i) by_size[i] = i;
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](std::size_t x, std::size_t y) {
                     const auto cx = comps[x].cover.count();
                     const auto cy = comps[y].cover.count();
                     if (cx != cy) return cx > cy;
                     return comps[x].rows.size() < comps[y].rows.size();
                   });
  layout.children.resize(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c)
    layout.children[c].resize(comps[c].classes.size());
  for (std::size_t i = 0; i < by_size.size(); ++i) {
    const std::size_t c = by_size[i];
    std::size_t parent = kNone;
    for (std::size_t j = i; j-- > 0;) {
      if (comps[c].cover.is_subset_of(comps[by_size[j]].cover)) {
        parent = by_size[j];
        break;
      }
    }
    if (parent == kNone) {
      layout.roots.push_back(c);
      continue;
    }
    std::size_t k = 0;
    bool placed = false;
    for (const Bits& cls : comps[parent].classes) {
      if (comps[c].cover.is_subset_of(cls)) {
        layout.children[parent][k].push_back(c);
        placed = true;
        break;
      }
      ++k;
    }
    if (!placed) return std::nullopt;
  }

  std::vector<Individual> order;
  order.reserve(n);
  Bits everything(n);
  everything.set();
  detail::emit_block(layout, everything, layout.roots, order);
  LinearOrder witness(std::move(order));
  if (!is_qc_under(profile, witness))
    throw std::logic_error("recognize_qc produced an invalid witness");
  return witness;
}

// DQC recognition: consecutive-ones on the complemented matrix.
inline std::optional<LinearOrder> recognize_dqc(const Profile& profile) {
  return recognize_qc(profile.complement());
}

}  // namespace groupctl

#endif  // GROUPCTL_DOMAINS_HPP_
