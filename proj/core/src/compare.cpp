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

#include "genlyndon/compare.hpp"

#include <algorithm>
#include <numeric>

#include "genlyndon/errors.hpp"

namespace genlyndon {

std::string_view symbol(Ordering o) noexcept {
  switch (o) {
    case Ordering::Less: return "<";
    case Ordering::Equal: return "=";
    case Ordering::Greater: return ">";
  }
  return "?";
}

namespace {

void require_schedule_alphabet(const Word& w, const OrderSchedule& schedule) {
  if (!same_alphabet(w.alphabet(), schedule.alphabet()))
    throw AlphabetMismatch("word and order schedule are over different alphabets");
}

void require_nonempty(const Word& u, const Word& v, const char* op) {
  if (u.empty() || v.empty()) throw InvalidArgument(std::string(op) + ": empty word");
}

Ordering decide(const OrderSchedule& schedule, std::size_t position, Letter a, Letter b) {
  return schedule.less_at(position, a, b) ? Ordering::Less : Ordering::Greater;
}

}  // namespace

std::size_t fine_wilf_bound(std::size_t u_len, std::size_t v_len) {
  return u_len + v_len - std::gcd(u_len, v_len);
}

Ordering compare_finite(const Word& u, const Word& v, const OrderSchedule& schedule) {
  require_same_alphabet(u, v);
  require_schedule_alphabet(u, schedule);
  const std::size_t common = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (u[i] != v[i]) return decide(schedule, i + 1, u[i], v[i]);
  }
  if (u.size() == v.size()) return Ordering::Equal;
  return u.size() < v.size() ? Ordering::Less : Ordering::Greater;
}

std::optional<std::size_t> comparison_position(LetterSpan u, LetterSpan v) {
  const std::size_t m = u.size(), n = v.size();
  const std::size_t bound = fine_wilf_bound(m, n);
  // i walks u^w, j walks v^w; avoids a modulo per letter.
  std::size_t i = 0, j = 0;
  for (std::size_t pos = 0; pos < bound; ++pos) {
    if (u[i] != v[j]) return pos + 1;
    if (++i == m) i = 0;
    if (++j == n) j = 0;
  }
  return std::nullopt;
}

Ordering compare_omega(LetterSpan u, LetterSpan v, const OrderSchedule& schedule) {
  auto pos = comparison_position(u, v);
  if (!pos) return Ordering::Equal;
  const std::size_t at = *pos - 1;
  return decide(schedule, *pos, u[at % u.size()], v[at % v.size()]);
}

Ordering compare_omega(const Word& u, const Word& v, const OrderSchedule& schedule) {
  require_nonempty(u, v, "compare_omega");
  require_same_alphabet(u, v);
  require_schedule_alphabet(u, schedule);
  return compare_omega(u.letters(), v.letters(), schedule);
}

std::optional<std::size_t> comparison_position(const Word& u, const Word& v) {
  require_nonempty(u, v, "comparison_position");
  require_same_alphabet(u, v);
  return comparison_position(u.letters(), v.letters());
}

std::optional<std::size_t> comparison_position(const Word& u, const Word& v,
                                               const OrderSchedule& schedule) {
  require_schedule_alphabet(u, schedule);
  return comparison_position(u, v);
}

}  // namespace genlyndon
