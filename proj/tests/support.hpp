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

// Shared fixtures and brute-force oracles for the test suites. Nothing
// here calls the library's comparison or factorization routines.

#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "genlyndon/genlyndon.hpp"

namespace genlyndon::testing {

inline const AlphabetPtr& binary() {
  static const AlphabetPtr a = Alphabet::from_chars("ab");
  return a;
}

inline const AlphabetPtr& ternary() {
  static const AlphabetPtr a = Alphabet::from_chars("abc");
  return a;
}

inline Word W(std::string_view s, const AlphabetPtr& a = binary()) { return Word::parse(a, s); }

inline OrderSchedule prime_flip(const AlphabetPtr& a = binary()) {
  return OrderSchedule::prime_flip(a, PositionOrder::natural(a->size()));
}

struct NamedSchedule {
  std::string name;
  OrderSchedule schedule;
};

/// lex, anti, alt and prime-flip over `a`.
inline std::vector<NamedSchedule> standard_schedules(const AlphabetPtr& a = binary()) {
  const auto lex = OrderSchedule::lex(a);
  return {{"lex", lex}, {"anti", lex.opposite()}, {"alt", OrderSchedule::alt(a)},
          {"primeflip", prime_flip(a)}};
}

/// Every word of length min_len..max_len, shorter first.
inline std::vector<Word> all_words(const AlphabetPtr& a, std::size_t max_len,
                                   std::size_t min_len = 1) {
  std::vector<Word> out;
  for (std::size_t len = min_len; len <= max_len; ++len) {
    std::vector<Letter> letters(len, 0);
    while (true) {
      out.emplace_back(a, letters);
      std::size_t i = len;
      while (i > 0 && letters[i - 1] + 1 == a->size()) letters[--i] = 0;
      if (i == 0) break;
      ++letters[i - 1];
    }
  }
  return out;
}

inline Word random_word(std::mt19937_64& rng, const AlphabetPtr& a, std::size_t len) {
  std::uniform_int_distribution<Letter> pick(0, static_cast<Letter>(a->size() - 1));
  std::vector<Letter> letters(len);
  for (auto& l : letters) l = pick(rng);
  return Word(a, std::move(letters));
}

/// First differing position of u^w and v^w found by expanding both to
/// lcm(|u|, |v|) letters, the common period of the two infinite words.
inline std::optional<std::size_t> naive_position(const Word& u, const Word& v) {
  const std::size_t span = std::lcm(u.size(), v.size());
  for (std::size_t i = 0; i < span; ++i) {
    if (u[i % u.size()] != v[i % v.size()]) return i + 1;
  }
  return std::nullopt;
}

inline Ordering naive_omega(const Word& u, const Word& v, const OrderSchedule& s) {
  auto pos = naive_position(u, v);
  if (!pos) return Ordering::Equal;
  const std::size_t i = *pos - 1;
  const auto& order = s.order_at(*pos);
  return order.rank(u[i % u.size()]) < order.rank(v[i % v.size()]) ? Ordering::Less
                                                                     : Ordering::Greater;
}

/// Definition-level membership: w^w < (vu)^w for every nontrivial w = uv,
/// using the naive comparison.
inline bool naive_is_lyndon(const Word& w, const OrderSchedule& s) {
  for (std::size_t cut = 1; cut < w.size(); ++cut) {
    Word rotated = w.slice(cut, w.size()) + w.prefix(cut);
    if (naive_omega(w, rotated, s) != Ordering::Less) return false;
  }
  return !w.empty();
}

/// Border lengths by comparing every prefix with the suffix of equal length.
inline std::vector<std::size_t> naive_borders(const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t len = 1; len < w.size(); ++len) {
    if (w.prefix(len) == w.suffix(len)) out.push_back(len);
  }
  return out;
}

/// Number of Lyndon words of length n over k letters: (1/n) sum mu(d) k^(n/d).
inline long long witt_count(long long k, long long n) {
  auto mobius = [](long long d) {
    int sign = 1;
    for (long long p = 2; p * p <= d; ++p) {
      if (d % p == 0) {
        d /= p;
        if (d % p == 0) return 0;
        sign = -sign;
      }
    }
    if (d > 1) sign = -sign;
    return sign;
  };
  long long sum = 0;
  for (long long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    long long power = 1;
    for (long long i = 0; i < n / d; ++i) power *= k;
    sum += mobius(d) * power;
  }
  return sum / n;
}

inline std::vector<std::string> strs(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.str());
  return out;
}

}  // namespace genlyndon::testing
