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
#include <vector>

#include "genlyndon/compare.hpp"
#include "genlyndon/order.hpp"
#include "genlyndon/word.hpp"

namespace genlyndon {

/// Three equivalent membership tests for generalized Lyndon words.
enum class LyndonMethod {
  Rotations,     // w^w < (vu)^w for every nontrivial w = uv
  SplitCompare,  // u^w < v^w for every nontrivial w = uv
  SuffixCompare  // w^w < v^w for every nontrivial w = uv
};

std::string_view method_name(LyndonMethod m) noexcept;

bool is_generalized_lyndon(const Word& w, const OrderSchedule& schedule,
                           LyndonMethod method = LyndonMethod::SuffixCompare);

/// Nonincreasing factorization into generalized Lyndon words.
struct Factorization {
  Word source;
  std::vector<Word> factors;
  OrderSchedule schedule;

  /// Source is the concatenation of `factors`.
  static Factorization from_factors(std::vector<Word> factors, OrderSchedule schedule,
                                    AlphabetPtr alphabet);

  /// "(a)(aba)(aba)(abb)"; empty string for the empty word.
  std::string str(std::string_view sep = {}) const;
  std::size_t size() const noexcept { return factors.size(); }
};

bool operator==(const Factorization& a, const Factorization& b);

inline constexpr std::size_t kDefaultFactorizeGuard = 100'000;

/// Shortest nontrivial suffix s of w whose s^w is minimal.
Word last_factor(const Word& w, const OrderSchedule& schedule);

/// Longest suffix of w that is a generalized Lyndon word.
Word longest_lyndon_suffix(const Word& w, const OrderSchedule& schedule);

/// The unique nonincreasing factorization, obtained by repeatedly stripping
/// last_factor. O(|w|^2) omega-comparisons. Throws GuardExceeded when
/// |w| > max_length.
Factorization factorize(const Word& w, const OrderSchedule& schedule,
                        std::size_t max_length = kDefaultFactorizeGuard);

Word first_factor(const Word& w, const OrderSchedule& schedule);

/// Checks concatenation, nonemptiness, primitivity, membership of every
/// factor and the nonincreasing condition.
bool verify_factorization(const Factorization& f);

// Span forms: factor end offsets, used by callers that don't need Words.
std::size_t last_factor_length(LetterSpan w, const OrderSchedule& schedule);
std::vector<std::size_t> factor_ends(LetterSpan w, const OrderSchedule& schedule);

}  // namespace genlyndon
