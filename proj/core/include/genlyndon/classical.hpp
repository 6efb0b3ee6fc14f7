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

#include "genlyndon/lyndon.hpp"

namespace genlyndon {

/// A constant schedule: the same order at every position.
class ClassicalContext {
 public:
  ClassicalContext(AlphabetPtr alphabet, PositionOrder base);
  /// The alphabet's natural order a0 < a1 < ...
  static ClassicalContext natural(AlphabetPtr alphabet);

  const PositionOrder& base() const noexcept { return base_; }
  const OrderSchedule& schedule() const noexcept { return schedule_; }
  const AlphabetPtr& alphabet() const noexcept { return schedule_.alphabet(); }

 private:
  PositionOrder base_;
  OrderSchedule schedule_;
};

/// w is smaller than each of its nontrivial proper suffixes.
bool is_lyndon_classical(const Word& w, const ClassicalContext& ctx);

/// Duval's algorithm: factor end offsets in O(|w|) time, O(1) extra space
/// besides the output.
std::vector<std::size_t> duval_factor_ends(LetterSpan w, const PositionOrder& order);

Factorization duval_factorize(const Word& w, const ClassicalContext& ctx);

/// p^w < w^w for every nontrivial prefix p.
bool ufnarovskij_check(const Word& w, const ClassicalContext& ctx);

/// Shortest nontrivial prefix p (w = ps) with s empty or p^w >= s^w.
Word classical_first_prefix(const Word& w, const ClassicalContext& ctx);

/// u^w < (uv)^w < (vu)^w < v^w. Requires u^w < v^w, otherwise throws
/// PreconditionViolation.
bool bergman_chain_check(const Word& u, const Word& v, const ClassicalContext& ctx);

/// The rotation of a primitive w that is a Lyndon word.
Word lyndon_conjugate(const Word& w, const ClassicalContext& ctx);

}  // namespace genlyndon
