// Copyright 2026 The Authors.
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

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rtt/errors.hpp"

namespace rtt {

// Dense index into a matroid's ground set. Ground sets are laid out
// robot-major, so ordering by id is ordering by (robot, trajectory index).
using TrajectoryId = std::size_t;

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

// Sorted, duplicate-free set of trajectory ids.
class TrajectorySet {
 public:
  using const_iterator = std::vector<TrajectoryId>::const_iterator;

  TrajectorySet() = default;
  TrajectorySet(std::initializer_list<TrajectoryId> ids) : ids_(ids) {
    normalize();
  }
  explicit TrajectorySet(std::vector<TrajectoryId> ids) : ids_(std::move(ids)) {
    normalize();
  }

  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }
  const_iterator begin() const { return ids_.begin(); }
  const_iterator end() const { return ids_.end(); }
  TrajectoryId operator[](std::size_t i) const { return ids_[i]; }
  std::span<const TrajectoryId> ids() const { return ids_; }

  bool contains(TrajectoryId id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }
  // Returns false if already present.
  bool insert(TrajectoryId id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it != ids_.end() && *it == id) return false;
    ids_.insert(it, id);
    return true;
  }
  bool erase(TrajectoryId id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return false;
    ids_.erase(it);
    return true;
  }
  TrajectorySet with(TrajectoryId id) const {
    TrajectorySet s = *this;
    s.insert(id);
    return s;
  }
  TrajectorySet without(TrajectoryId id) const {
    TrajectorySet s = *this;
    s.erase(id);
    return s;
  }
  TrajectorySet set_union(const TrajectorySet& other) const {
    std::vector<TrajectoryId> out;
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                   other.ids_.end(), std::back_inserter(out));
    return TrajectorySet(std::move(out));
  }
  TrajectorySet difference(const TrajectorySet& other) const {
    std::vector<TrajectoryId> out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out));
    return TrajectorySet(std::move(out));
  }
  TrajectorySet intersection(const TrajectorySet& other) const {
    std::vector<TrajectoryId> out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                          other.ids_.end(), std::back_inserter(out));
    return TrajectorySet(std::move(out));
  }
  bool is_subset_of(const TrajectorySet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                         ids_.end());
  }

  friend bool operator==(const TrajectorySet&, const TrajectorySet&) = default;
  // Lexicographic on the sorted id sequence.
  friend auto operator<=>(const TrajectorySet& a, const TrajectorySet& b) {
    return a.ids_ <=> b.ids_;
  }

  // "{0;5;9}" -- semicolon-separated so it embeds in CSV cells.
  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      if (i) out += ';';
      out += std::to_string(ids_[i]);
    }
    out += '}';
    return out;
  }

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<TrajectoryId> ids_;
};

inline std::ostream& operator<<(std::ostream& os, const TrajectorySet& s) {
  return os << s.to_string();
}

// Partition matroid over trajectories: robot r owns the block T_r and a set
// is independent iff it holds at most one trajectory per robot.
class PartitionMatroid {
 public:
  // block_sizes[r] = |T_r|. Robot r's trajectories receive consecutive ids.
  explicit PartitionMatroid(std::vector<std::size_t> block_sizes) {
    if (block_sizes.empty()) {
      throw ArgumentError("PartitionMatroid: needs at least one robot");
    }
    for (std::size_t r = 0; r < block_sizes.size(); ++r) {
      if (block_sizes[r] == 0) {
        throw ArgumentError("PartitionMatroid: robot " + std::to_string(r) +
                            " has an empty trajectory block");
      }
      block_begin_.push_back(robot_of_.size());
      for (std::size_t j = 0; j < block_sizes[r]; ++j) robot_of_.push_back(r);
    }
    block_begin_.push_back(robot_of_.size());
  }

  std::size_t num_robots() const { return block_begin_.size() - 1; }
  std::size_t ground_size() const { return robot_of_.size(); }
  std::size_t block_size(std::size_t robot) const {
    return block_begin_[robot + 1] - block_begin_[robot];
  }
  std::size_t robot_of(TrajectoryId id) const { return robot_of_.at(id); }
  // Position of `id` within its robot's block.
  std::size_t index_in_block(TrajectoryId id) const {
    return id - block_begin_[robot_of(id)];
  }
  TrajectoryId trajectory(std::size_t robot, std::size_t index) const {
    return block_begin_[robot] + index;
  }
  TrajectorySet block(std::size_t robot) const {
    std::vector<TrajectoryId> ids;
    for (auto id = block_begin_[robot]; id < block_begin_[robot + 1]; ++id) {
      ids.push_back(id);
    }
    return TrajectorySet(std::move(ids));
  }
  TrajectorySet ground_set() const {
    std::vector<TrajectoryId> ids(ground_size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    return TrajectorySet(std::move(ids));
  }

  bool in_ground_set(const TrajectorySet& s) const {
    return s.empty() || s.ids().back() < ground_size();
  }

  // |s ∩ T_r| <= 1 for every robot.
  bool is_independent(const TrajectorySet& s) const {
    check_members(s);
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (robot_of_[s[i]] == robot_of_[s[i - 1]]) return false;
    }
    return true;
  }

  // |s ∩ T_r| == 1 for every robot.
  bool is_basis(const TrajectorySet& s) const {
    return s.size() == num_robots() && is_independent(s);
  }

  // Whether s ∪ {id} stays independent, given s independent.
  bool can_add(const TrajectorySet& s, TrajectoryId id) const {
    const std::size_t r = robot_of(id);
    return std::none_of(s.begin(), s.end(),
                        [&](TrajectoryId t) { return robot_of_[t] == r; });
  }

  // Π_r |T_r|, saturating at SIZE_MAX.
  std::size_t basis_count() const {
    std::size_t count = 1;
    for (std::size_t r = 0; r < num_robots(); ++r) {
      if (count > std::numeric_limits<std::size_t>::max() / block_size(r)) {
        return std::numeric_limits<std::size_t>::max();
      }
      count *= block_size(r);
    }
    return count;
  }

 private:
  void check_members(const TrajectorySet& s) const {
    if (!in_ground_set(s)) {
      throw ArgumentError("trajectory set " + s.to_string() +
                          " is not a subset of the ground set");
    }
  }

  std::vector<std::size_t> robot_of_;
  std::vector<std::size_t> block_begin_;
};

// Yields every basis once, lexicographically by (robot, trajectory index)
// with the last robot varying fastest. Restart by constructing a new one.
class BasisEnumerator {
 public:
  explicit BasisEnumerator(const PartitionMatroid& m,
                           std::size_t cap = kDefaultEnumerationCap)
      : matroid_(&m), choice_(m.num_robots(), 0) {
    const std::size_t total = m.basis_count();
    if (total > cap) {
      throw EnumerationTooLarge("basis enumeration of " +
                                std::to_string(total) +
                                " sets exceeds cap " + std::to_string(cap));
    }
  }

  std::optional<TrajectorySet> next() {
    if (done_) return std::nullopt;
    std::vector<TrajectoryId> ids(choice_.size());
    for (std::size_t r = 0; r < choice_.size(); ++r) {
      ids[r] = matroid_->trajectory(r, choice_[r]);
    }
    advance();
    return TrajectorySet(std::move(ids));
  }

 private:
  void advance() {
    for (std::size_t r = choice_.size(); r-- > 0;) {
      if (++choice_[r] < matroid_->block_size(r)) return;
      choice_[r] = 0;
    }
    done_ = true;
  }

  const PartitionMatroid* matroid_;
  std::vector<std::size_t> choice_;
  bool done_ = false;
};

template <typename Fn>
void for_each_basis(const PartitionMatroid& m, Fn&& fn,
                    std::size_t cap = kDefaultEnumerationCap) {
  BasisEnumerator it(m, cap);
  while (auto s = it.next()) fn(*s);
}

inline std::vector<TrajectorySet> enumerate_bases(
    const PartitionMatroid& m, std::size_t cap = kDefaultEnumerationCap) {
  std::vector<TrajectorySet> out;
  for_each_basis(m, [&](const TrajectorySet& s) { out.push_back(s); }, cap);
  return out;
}

}  // namespace rtt
