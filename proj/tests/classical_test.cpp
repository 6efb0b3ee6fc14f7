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

#include <doctest.h>

#include "support.hpp"

using namespace genlyndon;
using namespace genlyndon::testing;

namespace {

ClassicalContext lex2() { return ClassicalContext::natural(binary()); }

std::vector<ClassicalContext> contexts() {
  return {ClassicalContext::natural(binary()),
          ClassicalContext(binary(), PositionOrder::natural(2).reversed())};
}

}  // namespace

TEST_CASE("is_lyndon_classical") {
  CHECK(is_lyndon_classical(W("aabab"), lex2()));
  CHECK_FALSE(is_lyndon_classical(W("aba"), lex2()));
  CHECK(is_lyndon_classical(W("a"), lex2()));
  CHECK(is_lyndon_classical(W("b"), lex2()));
  CHECK_THROWS_AS(is_lyndon_classical(Word(binary()), lex2()), InvalidArgument);

  // Any fixed base order, here c < a < b.
  const ClassicalContext odd(ternary(), PositionOrder::from_sequence({2, 0, 1}));
  CHECK(is_lyndon_classical(W("cab", ternary()), odd));
  CHECK_FALSE(is_lyndon_classical(W("abc", ternary()), odd));
  for (const auto& w : all_words(ternary(), 7))
    REQUIRE(is_lyndon_classical(w, odd) == is_generalized_lyndon(w, odd.schedule()));
}

TEST_CASE("duval_factorize") {
  CHECK(duval_factorize(W("ababaab"), lex2()).str() == "(ab)(ab)(aab)");
  CHECK(duval_factorize(W("aaaa"), lex2()).str() == "(a)(a)(a)(a)");
  CHECK(duval_factorize(Word(binary()), lex2()).factors.empty());
  CHECK(duval_factor_ends(W("ababaab").letters(), PositionOrder::natural(2)) ==
        std::vector<std::size_t>{2, 4, 7});

  for (const auto& ctx : contexts()) {
    for (const auto& w : all_words(binary(), 14, 0))
      REQUIRE(duval_factorize(w, ctx).factors == factorize(w, ctx.schedule()).factors);
  }
  const ClassicalContext odd(ternary(), PositionOrder::from_sequence({1, 2, 0}));
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = random_word(rng, ternary(), 1 + rng() % 300);
    REQUIRE(duval_factorize(w, odd).factors == factorize(w, odd.schedule()).factors);
  }
}

TEST_CASE("ufnarovskij_check") {
  CHECK(ufnarovskij_check(W("aabab"), lex2()));
  CHECK_FALSE(ufnarovskij_check(W("ba"), lex2()));
  CHECK_THROWS_AS(ufnarovskij_check(Word(binary()), lex2()), InvalidArgument);
  const auto lex = lex2().schedule();
  CHECK(compare_omega(W("a"), W("aa"), lex) == Ordering::Equal);
  CHECK(compare_omega(W("aa"), W("aaba"), lex) == Ordering::Less);
  CHECK(compare_omega(W("aaba"), W("aab"), lex) == Ordering::Less);
  CHECK(compare_omega(W("aab"), W("aabab"), lex) == Ordering::Less);
  for (const auto& ctx : contexts())
    for (const auto& w : all_words(binary(), 12))
      REQUIRE(ufnarovskij_check(w, ctx) == is_lyndon_classical(w, ctx));
}

TEST_CASE("classical_first_prefix") {
  CHECK(classical_first_prefix(W("ababaab"), lex2()) == W("ab"));
  CHECK(classical_first_prefix(W("aabab"), lex2()) == W("aabab"));
  CHECK_THROWS_AS(classical_first_prefix(Word(binary()), lex2()), InvalidArgument);
  for (const auto& ctx : contexts()) {
    for (const auto& w : all_words(binary(), 12)) {
      const Word p = classical_first_prefix(w, ctx);
      REQUIRE(p == duval_factorize(w, ctx).factors.front());
      // shortest nontrivial prefix with p^w >= w^w
      std::size_t len = 1;
      while (compare_omega(w.prefix(len), w, ctx.schedule()) == Ordering::Less) ++len;
      REQUIRE(p.size() == len);
    }
  }
}

TEST_CASE("bergman_chain_check") {
  CHECK(bergman_chain_check(W("a"), W("b"), lex2()));
  CHECK(bergman_chain_check(W("a"), W("ab"), lex2()));
  CHECK_THROWS_AS(bergman_chain_check(W("ab"), W("ab"), lex2()), PreconditionViolation);
  CHECK_THROWS_AS(bergman_chain_check(W("b"), W("a"), lex2()), PreconditionViolation);
  const auto words = all_words(binary(), 6);
  for (const auto& ctx : contexts()) {
    for (const auto& u : words)
      for (const auto& v : words)
        if (compare_omega(u, v, ctx.schedule()) == Ordering::Less)
          REQUIRE(bergman_chain_check(u, v, ctx));
  }
}

TEST_CASE("lyndon_conjugate") {
  CHECK(lyndon_conjugate(W("baa"), lex2()) == W("aab"));
  CHECK(lyndon_conjugate(W("ab"), lex2()) == W("ab"));
  CHECK(lyndon_conjugate(W("aba"), lex2()) == W("aab"));
  CHECK_THROWS_AS(lyndon_conjugate(W("abab"), lex2()), InvalidArgument);
  for (const auto& ctx : contexts()) {
    for (const auto& w : all_words(binary(), 10)) {
      if (!is_primitive(w)) continue;
      const Word c = lyndon_conjugate(w, ctx);
      const auto square = duval_factorize(w + w, ctx);
      REQUIRE(std::find(square.factors.begin(), square.factors.end(), c) != square.factors.end());
    }
  }
}

TEST_CASE("constant schedules: u^w < (uv)^w and (vu)^w < v^w join the four conditions") {
  const auto words = all_words(binary(), 6);
  for (const auto& ctx : contexts()) {
    const auto& s = ctx.schedule();
    for (const auto& u : words) {
      for (const auto& v : words) {
        const bool c1 = compare_omega(u, v, s) == Ordering::Less;
        REQUIRE((compare_omega(u, u + v, s) == Ordering::Less) == c1);
        REQUIRE((compare_omega(v + u, v, s) == Ordering::Less) == c1);
      }
    }
  }
}

TEST_CASE("classical factor structure") {
  for (const auto& ctx : contexts()) {
    const auto& s = ctx.schedule();
    for (const auto& w : all_words(binary(), 12)) {
      const auto f = duval_factorize(w, ctx);
      // first factor dominates the rest of the product
      if (f.size() >= 2) {
        Word rest(binary());
        for (std::size_t i = 1; i < f.size(); ++i) rest = rest + f.factors[i];
        REQUIRE(compare_omega(f.factors[0], rest, s) != Ordering::Less);
      }
      for (const auto& factor : f.factors) REQUIRE(borders(factor).empty());
      // l1^w is the maximum of p^w over nontrivial prefixes p
      for (std::size_t len = 1; len <= w.size(); ++len)
        REQUIRE(compare_omega(w.prefix(len), f.factors[0], s) != Ordering::Greater);
    }
  }
  // ...which fails for the alternating order
  const auto alt = OrderSchedule::alt(binary());
  CHECK(factorize(W("abab"), alt).str() == "(ab)(ab)");
  CHECK(compare_omega(W("a"), W("ab"), alt) == Ordering::Greater);
}
