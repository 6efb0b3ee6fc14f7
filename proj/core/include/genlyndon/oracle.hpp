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
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "genlyndon/lyndon.hpp"

namespace genlyndon {

inline constexpr std::uint64_t kDefaultSearchGuard = 100'000'000;

/// Generalized Lyndon words of every length 1..max_len, found by testing
/// every word. words[i] holds the words of length i+1.
struct EnumerationReport {
  OrderSchedule schedule;
  AlphabetPtr alphabet;
  std::size_t max_len = 0;
  std::vector<std::vector<Word>> words;

  std::vector<std::size_t> counts() const;
  std::size_t total() const;
};

bool operator==(const EnumerationReport& a, const EnumerationReport& b);

/// Calls `visit` on every word of length n in length-then-rank order.
void for_each_word(const AlphabetPtr& alphabet, std::size_t n,
                   const std::function<void(const Word&)>& visit);

/// Throws GuardExceeded when k^max_len > guard.
EnumerationReport enumerate_lyndon(const OrderSchedule& schedule, const AlphabetPtr& alphabet,
                                   std::size_t max_len,
                                   std::uint64_t guard = kDefaultSearchGuard);

/// Words of length n that prefix some generalized Lyndon word of length at
/// most extension_bound. Exact only up to that bound.
std::vector<Word> lyndon_prefixes_of_length(const OrderSchedule& schedule,
                                            const AlphabetPtr& alphabet, std::size_t n,
                                            std::size_t extension_bound,
                                            std::uint64_t guard = kDefaultSearchGuard);

struct CandidateFactorization {
  std::vector<Word> factors;
  bool nonincreasing = false;
};

inline constexpr std::size_t kBruteForceGuard = 16;

/// Every cut of w into generalized Lyndon factors. Throws GuardExceeded
/// when |w| > 16.
std::vector<CandidateFactorization> brute_force_factorizations(const Word& w,
                                                               const OrderSchedule& schedule);

struct RegressionItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the pinned corpus of worked examples and counterexamples.
std::vector<RegressionItem> run_regressions();

}  // namespace genlyndon
