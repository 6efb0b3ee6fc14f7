// Copyright 2026 The genlyndon Authors
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

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "genlyndon/alphabet.hpp"

namespace genlyndon {

/// One total order on the alphabet. rank(a) < rank(b) means a is smaller.
class PositionOrder {
 public:
  /// Letter i has rank i.
  static PositionOrder natural(std::size_t k);
  /// Builds the order whose letters listed smallest first are `sequence`.
  static PositionOrder from_sequence(const std::vector<Letter>& sequence);
  /// rank_of must be a permutation of 0..k-1.
  explicit PositionOrder(std::vector<Letter> rank_of);

  std::size_t size() const noexcept { return rank_of_.size(); }
  Letter rank(Letter letter) const { return rank_of_[letter]; }
  bool less(Letter a, Letter b) const { return rank_of_[a] < rank_of_[b]; }
  PositionOrder reversed() const;
  /// Letters listed smallest first.
  std::vector<Letter> sequence() const;
  const std::vector<Letter>& ranks() const noexcept { return rank_of_; }

  friend bool operator==(const PositionOrder&, const PositionOrder&) = default;

 private:
  std::vector<Letter> rank_of_;
};

/// Predicate on 1-based positions. Must be deterministic and reentrant.
using PositionPredicate = std::function<bool(std::size_t)>;

bool is_prime_position(std::size_t n);

/// A position-indexed family of total orders (<_n)_{n>=1}.
///
/// Immutable; copies share the underlying realization.
class OrderSchedule {
 public:
  enum class Kind { Constant, Alternating, EventuallyPeriodic, PredicateFlip };

  static OrderSchedule constant(AlphabetPtr alphabet, PositionOrder order);
  /// Odd positions use `base`, even positions its reverse.
  static OrderSchedule alternating(AlphabetPtr alphabet, PositionOrder base);
  static OrderSchedule eventually_periodic(AlphabetPtr alphabet,
                                           std::vector<PositionOrder> preperiod,
                                           std::vector<PositionOrder> period);
  /// Positions where `predicate` holds use the reversed base. `name` is
  /// used for serialization; only "prime" has an order-spec form.
  static OrderSchedule predicate_flip(AlphabetPtr alphabet, PositionOrder base,
                                      PositionPredicate predicate, std::string name);
  static OrderSchedule prime_flip(AlphabetPtr alphabet, PositionOrder base);

  /// Shorthands over the alphabet's natural order.
  static OrderSchedule lex(AlphabetPtr alphabet);
  static OrderSchedule alt(AlphabetPtr alphabet);

  Kind kind() const noexcept;
  const AlphabetPtr& alphabet() const noexcept;

  /// The order used at 1-based position n.
  const PositionOrder& order_at(std::size_t n) const;
  bool less_at(std::size_t n, Letter a, Letter b) const { return order_at(n).less(a, b); }

  /// Reverses the order at every position.
  OrderSchedule opposite() const;

  /// Base order of a Constant, Alternating or PredicateFlip schedule.
  const PositionOrder& base() const;

  /// Order-spec string; throws InvalidArgument for unnamed predicates.
  std::string spec(std::string_view sep = {}) const;
  bool has_spec() const noexcept;

  /// Same realization: identical specs, or the very same unnamed predicate
  /// schedule.
  friend bool operator==(const OrderSchedule& a, const OrderSchedule& b);

 private:
  struct Impl;
  explicit OrderSchedule(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// Parsed order spec together with the alphabet it is defined over.
struct ParsedOrder {
  AlphabetPtr alphabet;
  OrderSchedule schedule;
};

/// Parses the order-spec grammar:
///   lex:<labels> | anti:<labels> | alt:<labels> | primeflip:<labels>
///   periodic:<labels>;<perm>,<perm>,...|<perm>,<perm>,...
/// In the periodic form the list before '|' is the preperiod (may be empty)
/// and the list after it the period; without '|' the whole list is the
/// period. When `alphabet` is given, every label list must be a permutation
/// of its labels; otherwise the alphabet is taken from <labels>.
ParsedOrder parse_order_spec(std::string_view spec, AlphabetPtr alphabet = nullptr,
                             std::string_view sep = {});

}  // namespace genlyndon
