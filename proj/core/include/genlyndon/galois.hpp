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
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "genlyndon/lyndon.hpp"

namespace genlyndon {

/// Alternating order: base at odd positions, reversed base at even ones.
class GaloisContext {
 public:
  GaloisContext(AlphabetPtr alphabet, PositionOrder base);
  static GaloisContext natural(AlphabetPtr alphabet);

  const PositionOrder& base() const noexcept { return base_; }
  const OrderSchedule& schedule() const noexcept { return schedule_; }
  const AlphabetPtr& alphabet() const noexcept { return schedule_.alphabet(); }

 private:
  PositionOrder base_;
  OrderSchedule schedule_;
};

enum class Parity { Even, Odd };

constexpr Parity parity_of(std::size_t n) noexcept { return n % 2 == 0 ? Parity::Even : Parity::Odd; }

bool is_galois(const Word& w, const GaloisContext& ctx);

/// For every nontrivial w = ps: p^w < w^w if |p| is even, p^w > w^w if odd.
bool parity_prefix_check(const Word& w, const GaloisContext& ctx);

/// Number of factors equal to the first one. Throws on an empty factorization.
std::size_t multiplicity(const Factorization& f);

struct StarReport {
  Word prefix;
  Parity parity;
  bool holds;
};

/// Condition (*) for a nontrivial prefix p of w:
///   p^w >= w^w when |p| is even, p^w <= w^w when |p| is odd.
/// Also evaluated as "s empty or p^w >= s^w" (w = ps); both must agree.
StarReport star_condition(const Word& p, const Word& w, const GaloisContext& ctx);

// The two formulations star_condition reconciles.
bool star_holds_parity_form(const Word& p, const Word& w, const GaloisContext& ctx);
bool star_holds_suffix_form(const Word& p, const Word& w, const GaloisContext& ctx);

/// Shortest nontrivial prefix satisfying (*), obtained from the
/// factorization g1...gn: g1^2 when |g1| is odd, the multiplicity m of g1 is
/// even and m < n; g1 otherwise.
Word galois_first_prefix(const Word& w, const GaloisContext& ctx);

/// (is_galois(w) and w bordered) implies |w| odd.
bool border_parity_witness(const Word& w, const GaloisContext& ctx);

/// is_galois(w) implies every border of w has odd length.
bool galois_borders_odd(const Word& w, const GaloisContext& ctx);

using Rational = boost::multiprecision::cpp_rational;

/// Closed interval known to contain a continued-fraction value.
struct CfInterval {
  Rational lo;
  Rational hi;
};

struct CfComparison {
  Ordering ordering = Ordering::Equal;
  /// Number of partial quotients consumed when the intervals separated;
  /// 0 when the values are equal.
  std::size_t depth = 0;
  CfInterval u_interval;
  CfInterval v_interval;
};

/// Maximum convergent depth cf_compare may use.
std::size_t cf_depth_cap(std::size_t u_len, std::size_t v_len) noexcept;

/// Compares [u1; u2, u3, ...] built from u^w against the same for v^w. Labels
/// must be positive integers; equality is decided on the words first.
CfComparison cf_compare_explained(const Word& u, const Word& v);
Ordering cf_compare(const Word& u, const Word& v);

/// Convergent interval after `depth` quotients of w^w (depth >= 1).
CfInterval cf_interval(const Word& w, std::size_t depth);

/// The alternating schedule whose base orders labels by numeric value.
OrderSchedule numeric_alternating(const AlphabetPtr& alphabet);

}  // namespace genlyndon
