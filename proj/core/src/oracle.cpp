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

#include "genlyndon/oracle.hpp"

#include <set>

#include "genlyndon/errors.hpp"

namespace genlyndon {

std::vector<std::size_t> EnumerationReport::counts() const {
  std::vector<std::size_t> out;
  out.reserve(words.size());
  for (const auto& by_len : words) out.push_back(by_len.size());
  return out;
}

std::size_t EnumerationReport::total() const {
  std::size_t n = 0;
  for (const auto& by_len : words) n += by_len.size();
  return n;
}

bool operator==(const EnumerationReport& a, const EnumerationReport& b) {
  return a.schedule == b.schedule && same_alphabet(a.alphabet, b.alphabet) &&
         a.max_len == b.max_len && a.words == b.words;
}

void for_each_word(const AlphabetPtr& alphabet, std::size_t n,
                   const std::function<void(const Word&)>& visit) {
  const auto k = static_cast<Letter>(alphabet->size());
  std::vector<Letter> letters(n, 0);
  while (true) {
    visit(Word(alphabet, letters));
    // Odometer with the last position moving fastest.
    std::size_t i = n;
    while (i > 0 && letters[i - 1] + 1 == k) letters[--i] = 0;
    if (i == 0) return;
    ++letters[i - 1];
  }
}

namespace {

void check_search_space(std::size_t k, std::size_t len, std::uint64_t guard, const char* op) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (size > guard / k) {
      throw GuardExceeded(std::string(op) + ": search space " + std::to_string(k) + "^" +
                          std::to_string(len) + " exceeds the guard " + std::to_string(guard));
    }
    size *= k;
  }
}

void require_schedule(const OrderSchedule& schedule, const AlphabetPtr& alphabet) {
  if (!same_alphabet(schedule.alphabet(), alphabet))
    throw AlphabetMismatch("schedule and alphabet differ");
}

}  // namespace

EnumerationReport enumerate_lyndon(const OrderSchedule& schedule, const AlphabetPtr& alphabet,
                                   std::size_t max_len, std::uint64_t guard) {
  if (max_len == 0) throw InvalidArgument("enumerate_lyndon: max_len must be >= 1");
  require_schedule(schedule, alphabet);
  check_search_space(alphabet->size(), max_len, guard, "enumerate_lyndon");
  EnumerationReport report{schedule, alphabet, max_len, {}};
  report.words.resize(max_len);
  for (std::size_t len = 1; len <= max_len; ++len) {
    for_each_word(alphabet, len, [&](const Word& w) {
      if (is_generalized_lyndon(w, schedule)) report.words[len - 1].push_back(w);
    });
  }
  return report;
}

std::vector<Word> lyndon_prefixes_of_length(const OrderSchedule& schedule,
                                            const AlphabetPtr& alphabet, std::size_t n,
                                            std::size_t extension_bound, std::uint64_t guard) {
  if (n == 0) throw InvalidArgument("lyndon_prefixes_of_length: n must be >= 1");
  if (extension_bound < n)
    throw InvalidArgument("lyndon_prefixes_of_length: extension bound must be >= n");
  require_schedule(schedule, alphabet);
  check_search_space(alphabet->size(), extension_bound, guard, "lyndon_prefixes_of_length");
  std::set<std::vector<Letter>> found;
  for (std::size_t len = n; len <= extension_bound; ++len) {
    for_each_word(alphabet, len, [&](const Word& w) {
      const auto head = w.letters().first(n);
      std::vector<Letter> key(head.begin(), head.end());
      if (!found.contains(key) && is_generalized_lyndon(w, schedule)) found.insert(std::move(key));
    });
  }
  std::vector<Word> out;
  for (const auto& key : found) out.emplace_back(alphabet, key);
  return out;
}

std::vector<CandidateFactorization> brute_force_factorizations(const Word& w,
                                                               const OrderSchedule& schedule) {
  if (w.size() > kBruteForceGuard)
    throw GuardExceeded("brute_force_factorizations: |w| = " + std::to_string(w.size()) +
                        " exceeds " + std::to_string(kBruteForceGuard));
  if (!same_alphabet(w.alphabet(), schedule.alphabet()))
    throw AlphabetMismatch("brute_force_factorizations: word and schedule alphabets differ");
  std::vector<CandidateFactorization> out;
  if (w.empty()) {
    out.push_back({{}, true});
    return out;
  }
  const std::size_t n = w.size();
  // Bit i of the mask set means a cut after letter i+1.
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
    CandidateFactorization candidate;
    std::size_t begin = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (i + 1 == n || (mask >> i) & 1u) {
        Word factor = w.slice(begin, i + 1);
        ok = is_generalized_lyndon(factor, schedule);
        candidate.factors.push_back(std::move(factor));
        begin = i + 1;
      }
    }
    if (!ok) continue;
    candidate.nonincreasing = true;
    for (std::size_t i = 0; i + 1 < candidate.factors.size(); ++i) {
      if (compare_omega(candidate.factors[i], candidate.factors[i + 1], schedule) ==
          Ordering::Less) {
        candidate.nonincreasing = false;
        break;
      }
    }
    out.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace genlyndon
