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

#include "genlyndon/lyndon.hpp"

#include <algorithm>

#include "genlyndon/errors.hpp"

namespace genlyndon {

std::string_view method_name(LyndonMethod m) noexcept {
  switch (m) {
    case LyndonMethod::Rotations: return "rotations";
    case LyndonMethod::SplitCompare: return "split";
    case LyndonMethod::SuffixCompare: return "suffix";
  }
  return "?";
}

namespace {

void require_word(const Word& w, const OrderSchedule& schedule, const char* op) {
  if (w.empty()) throw InvalidArgument(std::string(op) + ": empty word");
  if (!same_alphabet(w.alphabet(), schedule.alphabet()))
    throw AlphabetMismatch(std::string(op) + ": word and schedule alphabets differ");
}

bool lyndon_by_rotations(LetterSpan w, const OrderSchedule& schedule) {
  std::vector<Letter> rotated(w.size());
  for (std::size_t cut = 1; cut < w.size(); ++cut) {
    std::rotate_copy(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut), w.end(),
                     rotated.begin());
    if (compare_omega(w, rotated, schedule) != Ordering::Less) return false;
  }
  return true;
}

bool lyndon_by_split(LetterSpan w, const OrderSchedule& schedule) {
  for (std::size_t cut = 1; cut < w.size(); ++cut) {
    if (compare_omega(w.first(cut), w.subspan(cut), schedule) != Ordering::Less) return false;
  }
  return true;
}

bool lyndon_by_suffix(LetterSpan w, const OrderSchedule& schedule) {
  for (std::size_t cut = 1; cut < w.size(); ++cut) {
    if (compare_omega(w, w.subspan(cut), schedule) != Ordering::Less) return false;
  }
  return true;
}

}  // namespace

bool is_generalized_lyndon(const Word& w, const OrderSchedule& schedule, LyndonMethod method) {
  require_word(w, schedule, "is_generalized_lyndon");
  switch (method) {
    case LyndonMethod::Rotations: return lyndon_by_rotations(w.letters(), schedule);
    case LyndonMethod::SplitCompare: return lyndon_by_split(w.letters(), schedule);
    case LyndonMethod::SuffixCompare: return lyndon_by_suffix(w.letters(), schedule);
  }
  throw InternalError("unknown LyndonMethod");
}

Factorization Factorization::from_factors(std::vector<Word> factors, OrderSchedule schedule,
                                          AlphabetPtr alphabet) {
  std::vector<Letter> letters;
  for (const auto& f : factors) {
    if (!same_alphabet(f.alphabet(), alphabet))
      throw AlphabetMismatch("factor is over a different alphabet");
    letters.insert(letters.end(), f.letters().begin(), f.letters().end());
  }
  Word source(std::move(alphabet), std::move(letters));
  return Factorization{std::move(source), std::move(factors), std::move(schedule)};
}

std::string Factorization::str(std::string_view sep) const {
  std::string out;
  for (const auto& f : factors) out += "(" + f.str(sep) + ")";
  return out;
}

bool operator==(const Factorization& a, const Factorization& b) {
  return a.source == b.source && a.factors == b.factors && a.schedule == b.schedule;
}

std::size_t last_factor_length(LetterSpan w, const OrderSchedule& schedule) {
  const std::size_t n = w.size();
  std::size_t best = 1;
  // Shortest to longest; replace only on a strict improvement so ties keep
  // the shorter suffix.
  for (std::size_t len = 2; len <= n; ++len) {
    if (compare_omega(w.last(len), w.last(best), schedule) == Ordering::Less) best = len;
  }
  return best;
}

std::vector<std::size_t> factor_ends(LetterSpan w, const OrderSchedule& schedule) {
  std::vector<std::size_t> ends;
  for (std::size_t r = w.size(); r > 0; r -= last_factor_length(w.first(r), schedule))
    ends.push_back(r);
  std::reverse(ends.begin(), ends.end());
  return ends;
}

Word last_factor(const Word& w, const OrderSchedule& schedule) {
  require_word(w, schedule, "last_factor");
  return w.suffix(last_factor_length(w.letters(), schedule));
}

Word longest_lyndon_suffix(const Word& w, const OrderSchedule& schedule) {
  require_word(w, schedule, "longest_lyndon_suffix");
  for (std::size_t len = w.size(); len > 1; --len) {
    if (lyndon_by_suffix(w.letters().last(len), schedule)) return w.suffix(len);
  }
  return w.suffix(1);
}

Factorization factorize(const Word& w, const OrderSchedule& schedule, std::size_t max_length) {
  if (!same_alphabet(w.alphabet(), schedule.alphabet()))
    throw AlphabetMismatch("factorize: word and schedule alphabets differ");
  if (w.size() > max_length)
    throw GuardExceeded("factorize: word length " + std::to_string(w.size()) +
                        " exceeds the guard " + std::to_string(max_length));
  Factorization f{w, {}, schedule};
  std::size_t begin = 0;
  for (std::size_t end : factor_ends(w.letters(), schedule)) {
    f.factors.push_back(w.slice(begin, end));
    begin = end;
  }
  return f;
}

Word first_factor(const Word& w, const OrderSchedule& schedule) {
  require_word(w, schedule, "first_factor");
  return factorize(w, schedule, w.size()).factors.front();
}

bool verify_factorization(const Factorization& f) {
  const auto& schedule = f.schedule;
  if (!same_alphabet(f.source.alphabet(), schedule.alphabet())) return false;
  const LetterSpan source = f.source.letters();
  std::size_t offset = 0;
  for (const auto& factor : f.factors) {
    if (factor.empty() || !same_alphabet(factor.alphabet(), schedule.alphabet())) return false;
    if (factor.size() > source.size() - offset ||
        !std::equal(factor.letters().begin(), factor.letters().end(),
                    source.begin() + static_cast<std::ptrdiff_t>(offset)))
      return false;
    offset += factor.size();
  }
  if (offset != source.size()) return false;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const auto& factor = f.factors[i];
    if (!is_primitive(factor)) return false;
    if (!lyndon_by_suffix(factor.letters(), schedule)) return false;
    if (i + 1 < f.factors.size() &&
        compare_omega(factor, f.factors[i + 1], schedule) == Ordering::Less)
      return false;
  }
  return true;
}

}  // namespace genlyndon
