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

#include "genlyndon/order.hpp"

#include <algorithm>
#include <numeric>

#include "genlyndon/errors.hpp"

namespace genlyndon {

PositionOrder PositionOrder::natural(std::size_t k) {
  std::vector<Letter> ranks(k);
  std::iota(ranks.begin(), ranks.end(), Letter{0});
  return PositionOrder(std::move(ranks));
}

PositionOrder PositionOrder::from_sequence(const std::vector<Letter>& sequence) {
  std::vector<Letter> ranks(sequence.size(), static_cast<Letter>(sequence.size()));
  for (std::size_t r = 0; r < sequence.size(); ++r) {
    if (sequence[r] >= sequence.size() || ranks[sequence[r]] != sequence.size())
      throw InvalidArgument("order sequence is not a permutation of the alphabet");
    ranks[sequence[r]] = static_cast<Letter>(r);
  }
  return PositionOrder(std::move(ranks));
}

PositionOrder::PositionOrder(std::vector<Letter> rank_of) : rank_of_(std::move(rank_of)) {
  if (rank_of_.empty()) throw InvalidArgument("order over an empty alphabet");
  std::vector<bool> seen(rank_of_.size(), false);
  for (Letter r : rank_of_) {
    if (r >= rank_of_.size() || seen[r]) throw InvalidArgument("rank table is not a permutation");
    seen[r] = true;
  }
}

PositionOrder PositionOrder::reversed() const {
  std::vector<Letter> ranks(rank_of_.size());
  const auto top = static_cast<Letter>(rank_of_.size() - 1);
  for (std::size_t i = 0; i < rank_of_.size(); ++i) ranks[i] = top - rank_of_[i];
  return PositionOrder(std::move(ranks));
}

std::vector<Letter> PositionOrder::sequence() const {
  std::vector<Letter> seq(rank_of_.size());
  for (std::size_t i = 0; i < rank_of_.size(); ++i) seq[rank_of_[i]] = static_cast<Letter>(i);
  return seq;
}

bool is_prime_position(std::size_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::size_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

struct OrderSchedule::Impl {
  Kind kind;
  AlphabetPtr alphabet;
  // Constant: {base}. Alternating, PredicateFlip: {base, reversed base}.
  // EventuallyPeriodic: preperiod followed by period.
  std::vector<PositionOrder> orders;
  std::size_t preperiod = 0;
  PositionPredicate predicate;
  std::string name;
};

OrderSchedule::OrderSchedule(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

namespace {

void check_order(const AlphabetPtr& alphabet, const PositionOrder& order) {
  if (!alphabet) throw InvalidArgument("schedule requires an alphabet");
  if (order.size() != alphabet->size())
    throw InvalidArgument("order size does not match the alphabet");
}

}  // namespace

OrderSchedule OrderSchedule::constant(AlphabetPtr alphabet, PositionOrder order) {
  check_order(alphabet, order);
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Constant;
  impl->alphabet = std::move(alphabet);
  impl->orders = {std::move(order)};
  return OrderSchedule(std::move(impl));
}

OrderSchedule OrderSchedule::alternating(AlphabetPtr alphabet, PositionOrder base) {
  check_order(alphabet, base);
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Alternating;
  impl->alphabet = std::move(alphabet);
  impl->orders = {base, base.reversed()};
  return OrderSchedule(std::move(impl));
}

OrderSchedule OrderSchedule::eventually_periodic(AlphabetPtr alphabet,
                                                 std::vector<PositionOrder> preperiod,
                                                 std::vector<PositionOrder> period) {
  if (period.empty()) throw InvalidArgument("eventually periodic schedule needs a nonempty period");
  for (const auto& o : preperiod) check_order(alphabet, o);
  for (const auto& o : period) check_order(alphabet, o);
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::EventuallyPeriodic;
  impl->alphabet = std::move(alphabet);
  impl->preperiod = preperiod.size();
  impl->orders = std::move(preperiod);
  impl->orders.insert(impl->orders.end(), std::make_move_iterator(period.begin()),
                      std::make_move_iterator(period.end()));
  return OrderSchedule(std::move(impl));
}

OrderSchedule OrderSchedule::predicate_flip(AlphabetPtr alphabet, PositionOrder base,
                                            PositionPredicate predicate, std::string name) {
  check_order(alphabet, base);
  if (!predicate) throw InvalidArgument("predicate_flip requires a predicate");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::PredicateFlip;
  impl->alphabet = std::move(alphabet);
  impl->orders = {base, base.reversed()};
  impl->predicate = std::move(predicate);
  impl->name = std::move(name);
  return OrderSchedule(std::move(impl));
}

OrderSchedule OrderSchedule::prime_flip(AlphabetPtr alphabet, PositionOrder base) {
  return predicate_flip(std::move(alphabet), std::move(base), is_prime_position, "prime");
}

OrderSchedule OrderSchedule::lex(AlphabetPtr alphabet) {
  auto k = alphabet->size();
  return constant(std::move(alphabet), PositionOrder::natural(k));
}

OrderSchedule OrderSchedule::alt(AlphabetPtr alphabet) {
  auto k = alphabet->size();
  return alternating(std::move(alphabet), PositionOrder::natural(k));
}

OrderSchedule::Kind OrderSchedule::kind() const noexcept { return impl_->kind; }

const AlphabetPtr& OrderSchedule::alphabet() const noexcept { return impl_->alphabet; }

const PositionOrder& OrderSchedule::order_at(std::size_t n) const {
  const Impl& s = *impl_;
  switch (s.kind) {
    case Kind::Constant:
      return s.orders[0];
    case Kind::Alternating:
      return s.orders[(n - 1) & 1];
    case Kind::EventuallyPeriodic: {
      if (n <= s.preperiod) return s.orders[n - 1];
      const std::size_t period = s.orders.size() - s.preperiod;
      return s.orders[s.preperiod + (n - 1 - s.preperiod) % period];
    }
    case Kind::PredicateFlip:
      return s.orders[s.predicate(n) ? 1 : 0];
  }
  throw InternalError("unknown schedule kind");
}

OrderSchedule OrderSchedule::opposite() const {
  const Impl& s = *impl_;
  switch (s.kind) {
    case Kind::Constant:
      return constant(s.alphabet, s.orders[0].reversed());
    case Kind::Alternating:
      return alternating(s.alphabet, s.orders[1]);
    case Kind::EventuallyPeriodic: {
      std::vector<PositionOrder> pre, per;
      for (std::size_t i = 0; i < s.orders.size(); ++i)
        (i < s.preperiod ? pre : per).push_back(s.orders[i].reversed());
      return eventually_periodic(s.alphabet, std::move(pre), std::move(per));
    }
    case Kind::PredicateFlip:
      return predicate_flip(s.alphabet, s.orders[1], s.predicate, s.name);
  }
  throw InternalError("unknown schedule kind");
}

const PositionOrder& OrderSchedule::base() const {
  if (impl_->kind == Kind::EventuallyPeriodic)
    throw InvalidArgument("eventually periodic schedules have no single base order");
  return impl_->orders[0];
}

bool OrderSchedule::has_spec() const noexcept {
  return impl_->kind != Kind::PredicateFlip || impl_->name == "prime";
}

namespace {

std::string join_letters(const Alphabet& alphabet, const std::vector<Letter>& letters,
                         std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) out += sep;
    out += alphabet.label(letters[i]);
  }
  return out;
}

std::vector<Letter> identity_sequence(std::size_t k) {
  std::vector<Letter> seq(k);
  std::iota(seq.begin(), seq.end(), Letter{0});
  return seq;
}

}  // namespace

std::string OrderSchedule::spec(std::string_view sep) const {
  const Impl& s = *impl_;
  const Alphabet& a = *s.alphabet;
  switch (s.kind) {
    case Kind::Constant: {
      const auto k = a.size();
      if (s.orders[0] == PositionOrder::natural(k))
        return "lex:" + join_letters(a, identity_sequence(k), sep);
      if (s.orders[0] == PositionOrder::natural(k).reversed())
        return "anti:" + join_letters(a, identity_sequence(k), sep);
      return "lex:" + join_letters(a, s.orders[0].sequence(), sep);
    }
    case Kind::Alternating:
      return "alt:" + join_letters(a, s.orders[0].sequence(), sep);
    case Kind::PredicateFlip:
      if (s.name != "prime")
        throw InvalidArgument("predicate schedule '" + s.name + "' has no order-spec form");
      return "primeflip:" + join_letters(a, s.orders[0].sequence(), sep);
    case Kind::EventuallyPeriodic: {
      std::string out = "periodic:" + join_letters(a, identity_sequence(a.size()), sep) + ";";
      for (std::size_t i = 0; i < s.orders.size(); ++i) {
        if (i == s.preperiod) out += "|";
        else if (i > 0) out += ",";
        out += join_letters(a, s.orders[i].sequence(), sep);
      }
      return out;
    }
  }
  throw InternalError("unknown schedule kind");
}

bool operator==(const OrderSchedule& a, const OrderSchedule& b) {
  if (a.impl_ == b.impl_) return true;
  if (!a.has_spec() || !b.has_spec()) return false;
  return same_alphabet(a.alphabet(), b.alphabet()) && a.spec() == b.spec();
}

}  // namespace genlyndon
