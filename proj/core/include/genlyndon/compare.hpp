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
#include <optional>
#include <string_view>

#include "genlyndon/order.hpp"
#include "genlyndon/word.hpp"

namespace genlyndon {

enum class Ordering { Less, Equal, Greater };

constexpr Ordering reverse(Ordering o) noexcept {
  return o == Ordering::Less ? Ordering::Greater
         : o == Ordering::Greater ? Ordering::Less
                                  : Ordering::Equal;
}

/// "<", "=" or ">".
std::string_view symbol(Ordering o) noexcept;

/// Generalized lexicographic comparison of finite words: a proper prefix is
/// smaller; otherwise the first mismatch at position n is decided by <_n.
Ordering compare_finite(const Word& u, const Word& v, const OrderSchedule& schedule);

/// Compares u^w and v^w. At most |u|+|v|-gcd(|u|,|v|) positions are read.
Ordering compare_omega(const Word& u, const Word& v, const OrderSchedule& schedule);

/// 1-based first position where u^w and v^w differ; nullopt when equal.
std::optional<std::size_t> comparison_position(const Word& u, const Word& v);
std::optional<std::size_t> comparison_position(const Word& u, const Word& v,
                                               const OrderSchedule& schedule);

/// Fine-Wilf bound |u|+|v|-gcd(|u|,|v|).
std::size_t fine_wilf_bound(std::size_t u_len, std::size_t v_len);

// Unchecked span forms used by the algorithms; both spans must be nonempty
// and share the schedule's alphabet.
Ordering compare_omega(LetterSpan u, LetterSpan v, const OrderSchedule& schedule);
std::optional<std::size_t> comparison_position(LetterSpan u, LetterSpan v);

}  // namespace genlyndon
