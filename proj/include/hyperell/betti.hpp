// Copyright 2026 The hyperell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERELL_BETTI_HPP_
#define HYPERELL_BETTI_HPP_

#include <map>
#include <utility>

#include "hyperell/integer.hpp"

namespace hyperell {

/// One graded Betti number: an exact value, a value known only to be
/// nonzero, or a value not determined by the available closed forms.
class BettiEntry {
 public:
  enum class Kind { Known, Positive, Unknown };

  static BettiEntry known(Count n) {
    require(n >= 0, "Betti numbers are nonnegative");
    return BettiEntry(Kind::Known, std::move(n));
  }
  static BettiEntry positive() { return BettiEntry(Kind::Positive, 0); }
  static BettiEntry unknown() { return BettiEntry(Kind::Unknown, 0); }

  Kind kind() const { return kind_; }
  bool is_known() const { return kind_ == Kind::Known; }
  bool is_zero() const { return kind_ == Kind::Known && value_ == 0; }
  /// Meaningful only for Known entries.
  const Count& value() const { return value_; }

  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;

 private:
  BettiEntry(Kind kind, Count value) : kind_(kind), value_(std::move(value)) {}

  Kind kind_;
  Count value_;
};

/// Position (i, j) of beta_{i,j}, i.e. a summand R(-i-j) of F_i.
/// Ordered by row j first, then column i.
struct BettiIndex {
  Int i;
  Int j;

  friend bool operator==(const BettiIndex&, const BettiIndex&) = default;
  friend auto operator<=>(const BettiIndex& x, const BettiIndex& y) {
    if (auto c = x.j <=> y.j; c != 0) return c;
    return x.i <=> y.i;
  }
};

/// Sparse Betti diagram of the ideal of a curve in P^r. Absent positions
/// are Known(0); Known(0) is never stored.
class BettiDiagram {
 public:
  explicit BettiDiagram(Int r) : r_(r) { require(r >= 1, "Betti diagram: r must be positive"); }

  Int r() const { return r_; }

  BettiEntry at(Int i, Int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? BettiEntry::known(0) : it->second;
  }

  void set(Int i, Int j, BettiEntry entry) {
    require(i >= 1 && i <= r_, "Betti diagram: column index out of range");
    require(j >= 1, "Betti diagram: row index must be positive");
    if (entry.is_zero()) {
      entries_.erase({i, j});
    } else {
      entries_.insert_or_assign(BettiIndex{i, j}, std::move(entry));
    }
  }

  /// Stored (nonzero or non-Known) entries, sorted by (j, i).
  const std::map<BettiIndex, BettiEntry>& entries() const { return entries_; }

  bool fully_known() const {
    for (const auto& [idx, e] : entries_)
      if (!e.is_known()) return false;
    return true;
  }

  /// Largest row index holding a stored entry, 0 for the zero diagram.
  Int max_row() const { return entries_.empty() ? 0 : entries_.rbegin()->first.j; }

  friend bool operator==(const BettiDiagram&, const BettiDiagram&) = default;

 private:
  Int r_;
  std::map<BettiIndex, BettiEntry> entries_;
};

}  // namespace hyperell

#endif  // HYPERELL_BETTI_HPP_
