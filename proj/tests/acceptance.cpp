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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

using namespace genlyndon;
using namespace genlyndon::testing;

namespace {

class Verdict {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
    ++checked_;
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool passed() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checked_ << " checks";
    if (failed_ > 0) os << ", " << failed_ << " failed";
    for (const auto& n : notes_) os << "; " << n;
    return os.str();
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> notes_;
  std::vector<std::string> failures_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void omega_chain(Verdict& v, const std::vector<std::string>& chain, const OrderSchedule& s,
                 Ordering rel = Ordering::Less) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    v.require(compare_omega(W(chain[i]), W(chain[i + 1]), s) == rel,
              "(" + chain[i] + ")^w " + std::string(symbol(rel)) + " (" + chain[i + 1] + ")^w");
}

Word concat(const std::vector<Word>& parts, const AlphabetPtr& a) {
  std::vector<Letter> letters;
  for (const auto& p : parts) letters.insert(letters.end(), p.letters().begin(), p.letters().end());
  return Word(a, std::move(letters));
}

void criterion1(Verdict& v) {
  const auto lex = OrderSchedule::lex(binary());
  const auto alt = OrderSchedule::alt(binary());
  const auto prime = prime_flip();
  const auto expect_factors = [&](const char* w, const OrderSchedule& s, const char* want) {
    const auto got = factorize(W(w), s).str();
    v.require(got == want, std::string("factorize(") + w + ", " + s.spec() + ") = " + got);
  };
  expect_factors("aabaabaabb", prime, "(a)(aba)(aba)(abb)");
  expect_factors("ababaab", lex, "(ab)(ab)(aab)");
  expect_factors("abbabbabaa", alt, "(abb)(abb)(abaa)");
  v.require(galois_first_prefix(W("abbabbabaa"), GaloisContext::natural(binary())) == W("abbabb"),
            "first prefix of abbabbabaa is abbabb");
  expect_factors("baabaa", alt, "(b)(a)(abaa)");
  const auto f = factorize(W("baabaa"), alt);
  v.require(std::find(f.factors.begin(), f.factors.end(), W("aba")) == f.factors.end(),
            "aba is not a factor of baabaa");
  std::size_t galois_conjugates = 0;
  for (const auto& r : rotations(W("baa")))
    if (is_galois(r, GaloisContext::natural(binary()))) {
      ++galois_conjugates;
      v.require(r == W("aba"), "Galois conjugate of baa is aba");
    }
  v.require(galois_conjugates == 1, "baa has one Galois conjugate");

  const std::vector<std::string> finite{"aba", "abaaa", "aab", "bab", "baab"};
  for (std::size_t i = 0; i + 1 < finite.size(); ++i)
    v.require(compare_finite(W(finite[i]), W(finite[i + 1]), prime) == Ordering::Less,
              finite[i] + " < " + finite[i + 1]);
  omega_chain(v, {"ab", "a", "b", "ba"}, prime);
  v.require(compare_omega(W("aba"), W("ab"), prime) == Ordering::Less, "(aba)^w < (ab)^w");
  omega_chain(v, {"aba", "aab", "bab", "baa"}, prime);
  omega_chain(v, {"baa", "bab", "aab", "aba"}, prime.opposite());
  omega_chain(v, {"abba", "aabb", "bbaa", "baab"}, prime);
  v.require(compare_omega(W("a"), W("aa"), lex) == Ordering::Equal, "a^w = (aa)^w");
  omega_chain(v, {"aa", "aaba", "aab", "aabab"}, lex);
  omega_chain(v, {"ab", "ababaab", "abaab"}, lex, Ordering::Greater);
  omega_chain(v, {"a", "ababaab", "babaab"}, lex);
  v.require(compare_omega(W("a"), W("ab"), alt) == Ordering::Greater, "a^w >_alt (ab)^w");
}

void criterion2(Verdict& v) {
  const auto lex = OrderSchedule::lex(ternary());
  const auto alt = OrderSchedule::alt(ternary());
  v.require(enumerate_lyndon(lex, ternary(), 2).total() == 6, "6 Lyndon words of length <= 2");
  v.require(enumerate_lyndon(alt, ternary(), 2).total() == 6, "6 Galois words of length <= 2");
  v.require(strs(lyndon_prefixes_of_length(lex, ternary(), 2, 6)) ==
                std::vector<std::string>{"aa", "ab", "ac", "bb", "bc"},
            "Lyndon prefixes aa ab ac bb bc");
  for (std::size_t bound : {4, 6, 8})
    v.require(strs(lyndon_prefixes_of_length(alt, ternary(), 2, bound)) ==
                  std::vector<std::string>{"ab", "ac", "bc"},
              "Galois prefixes ab ac bc at bound " + std::to_string(bound));
}

void criterion3(Verdict& v) {
  const auto words = all_words(binary(), 6);
  const auto reverse_if = [](bool flip, Ordering o) { return flip ? reverse(o) : o; };
  for (const auto& [name, s] : standard_schedules()) {
    const auto kind = s.kind();
    for (const auto& u : words) {
      for (const auto& w : words) {
        const Word uv = u + w, vu = w + u;
        const Ordering c1 = compare_omega(u, w, s);
        const std::string tag = name + " u=" + u.str() + " v=" + w.str();
        v.require(compare_omega(uv, w, s) == c1, tag + " (2)");
        v.require(compare_omega(u, vu, s) == c1, tag + " (3)");
        v.require(compare_omega(uv, vu, s) == c1, tag + " (4)");
        if (kind == OrderSchedule::Kind::Constant) {
          v.require(compare_omega(u, uv, s) == c1, tag + " (5)");
          v.require(compare_omega(vu, w, s) == c1, tag + " (6)");
        } else if (kind == OrderSchedule::Kind::Alternating) {
          v.require(reverse_if(u.size() % 2 == 1, compare_omega(u, uv, s)) == c1, tag + " alt (5)");
          v.require(reverse_if(w.size() % 2 == 1, compare_omega(vu, w, s)) == c1, tag + " alt (6)");
        }
      }
    }
  }
}

void criterion4(Verdict& v) {
  const auto galois = GaloisContext::natural(binary());
  const auto classical = ClassicalContext::natural(binary());
  const auto schedules = standard_schedules();
  for (const auto& w : all_words(binary(), 12)) {
    for (const auto& [name, s] : schedules) {
      const bool r = is_generalized_lyndon(w, s, LyndonMethod::Rotations);
      v.require(is_generalized_lyndon(w, s, LyndonMethod::SplitCompare) == r &&
                    is_generalized_lyndon(w, s, LyndonMethod::SuffixCompare) == r,
                name + " methods disagree on " + w.str());
    }
    v.require(parity_prefix_check(w, galois) == is_galois(w, galois), "parity on " + w.str());
    v.require(ufnarovskij_check(w, classical) == is_lyndon_classical(w, classical),
              "ufnarovskij on " + w.str());
  }
}

void criterion5(Verdict& v) {
  const std::vector<NamedSchedule> schedules{{"lex", OrderSchedule::lex(binary())},
                                             {"alt", OrderSchedule::alt(binary())},
                                             {"primeflip", prime_flip()}};
  for (const auto& w : all_words(binary(), 10)) {
    for (const auto& [name, s] : schedules) {
      const auto f = factorize(w, s);
      std::size_t monotone = 0;
      bool matches = false;
      for (const auto& c : brute_force_factorizations(w, s)) {
        if (!c.nonincreasing) continue;
        ++monotone;
        matches = c.factors == f.factors;
      }
      const std::string tag = name + " " + w.str();
      v.require(monotone == 1 && matches, tag + ": unique nonincreasing factorization");
      for (const auto& factor : f.factors) v.require(is_primitive(factor), tag + ": primitive");
      v.require(last_factor(w, s) == longest_lyndon_suffix(w, s), tag + ": last factor");
    }
  }
}

void criterion6(Verdict& v) {
  const auto lex = OrderSchedule::lex(binary());
  const auto classical = ClassicalContext::natural(binary());
  for (const auto& w : all_words(binary(), 14))
    v.require(duval_factorize(w, classical) == factorize(w, lex), "duval on " + w.str());
  std::mt19937_64 rng(20261014);
  const auto start = Clock::now();
  for (int i = 0; i < 1000; ++i) {
    const Word w = random_word(rng, binary(), 10000);
    v.require(duval_factorize(w, classical) == factorize(w, lex), "duval on random word " +
                                                                      std::to_string(i));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "10^3 random words of length 10^4 in %.2f s", seconds_since(start));
  v.note(buf);

  const Word big = random_word(rng, binary(), 10'000'000);
  const auto t0 = Clock::now();
  const auto ends = duval_factor_ends(big.letters(), classical.base());
  const double elapsed = seconds_since(t0);
  v.require(!ends.empty() && ends.back() == big.size(), "duval covers the 10^7-letter word");
  v.require(elapsed < 1.0, "duval on 10^7 letters took " + std::to_string(elapsed) + " s");
  std::snprintf(buf, sizeof buf, "10^7 letters in %.3f s", elapsed);
  v.note(buf);
}

void criterion7(Verdict& v) {
  const auto classical = ClassicalContext::natural(binary());
  const auto galois = GaloisContext::natural(binary());
  const auto& alt = galois.schedule();
  std::size_t squared = 0;
  for (const auto& w : all_words(binary(), 12)) {
    v.require(classical_first_prefix(w, classical) == duval_factorize(w, classical).factors.front(),
              "classical first prefix of " + w.str());
    std::optional<Word> shortest;
    for (std::size_t len = 1; len <= w.size() && !shortest; ++len) {
      const Word p = w.prefix(len);
      const Ordering c = naive_omega(p, w, alt);
      if (len % 2 == 0 ? c != Ordering::Less : c != Ordering::Greater) shortest = p;
    }
    const Word got = galois_first_prefix(w, galois);
    v.require(shortest && got == *shortest, "Galois first prefix of " + w.str());
    const Word& g1 = factorize(w, alt).factors.front();
    if (got.size() == 2 * g1.size()) ++squared;
  }
  v.require(squared > 0, "some inputs have first prefix g1^2");
  v.note(std::to_string(squared) + " inputs with first prefix g1^2");
}

void criterion8(Verdict& v) {
  std::size_t even_bordered = 0, odd_border_checks = 0;
  std::string example;
  const auto scan = [&](const AlphabetPtr& a, std::size_t max_len) {
    const auto ctx = GaloisContext::natural(a);
    for (const auto& w : all_words(a, max_len)) {
      if (!border_parity_witness(w, ctx)) {
        if (even_bordered++ == 0) example = w.str();
      }
      ++odd_border_checks;
      v.require(galois_borders_odd(w, ctx), "even-length border in Galois word " + w.str());
    }
  };
  scan(binary(), 14);
  scan(ternary(), 10);
  v.require(even_bordered == 0, "bordered Galois words of even length exist, e.g. " + example +
                                    " (" + std::to_string(even_bordered) + " found)");
  v.note("every border of a Galois word has odd length (" + std::to_string(odd_border_checks) +
         " words)");

  const auto galois = GaloisContext::natural(binary());
  const auto& alt = galois.schedule();
  std::vector<Word> words;
  for (const auto& w : all_words(binary(), 9))
    if (is_galois(w, galois)) words.push_back(w);
  std::size_t prefix_cases = 0, power_cases = 0;
  for (const auto& g : words) {
    for (const auto& h : words) {
      if (compare_omega(g, h, alt) != Ordering::Less) continue;
      if (g.size() <= h.size() && h.prefix(g.size()) == g) {
        ++prefix_cases;
        v.require(g.size() % 2 == 0, "prefix lemma on " + g.str() + ", " + h.str());
      }
      const auto r = fractional_exponent(g, h);
      if (r && r->strict()) {
        ++power_cases;
        v.require(g.size() % 2 == 0, "fractional power lemma on " + g.str() + ", " + h.str());
      }
    }
  }
  std::size_t product_cases = 0;
  for (const auto& w : all_words(binary(), 12)) {
    const auto f = factorize(w, alt);
    const std::size_t n = f.size(), m = multiplicity(f);
    if (m >= n) continue;
    ++product_cases;
    const Word& g1 = f.factors.front();
    const Word rest = concat({f.factors.begin() + 1, f.factors.end()}, binary());
    const Ordering want = (g1.size() % 2 == 1 && m % 2 == 0) ? Ordering::Less : Ordering::Greater;
    v.require(compare_omega(g1, rest, alt) == want, "first factor vs rest on " + w.str());
    const Ordering vs_w = (g1.size() * m) % 2 == 0 ? Ordering::Greater : Ordering::Less;
    v.require(compare_omega(g1, w, alt) == vs_w, "first factor vs word on " + w.str());
  }
  v.require(prefix_cases > 0 && power_cases > 0 && product_cases > 0, "lemmas have instances");
  v.note(std::to_string(prefix_cases) + "/" + std::to_string(power_cases) + "/" +
         std::to_string(product_cases) + " prefix/power/product instances");
}

void criterion9(Verdict& v) {
  const auto ints = Alphabet::integers(4);
  const auto alt = OrderSchedule::alt(ints);
  const auto words = all_words(ints, 4);
  std::size_t deepest = 0;
  for (const auto& u : words) {
    for (const auto& w : words) {
      const auto r = cf_compare_explained(u, w);
      deepest = std::max(deepest, r.depth);
      v.require(r.ordering == compare_omega(u, w, alt), "cf " + u.str(",") + " vs " + w.str(","));
      v.require(r.depth <= cf_depth_cap(u.size(), w.size()), "depth cap on " + u.str(","));
    }
  }
  v.note("max depth " + std::to_string(deepest));
}

void criterion10(Verdict& v) {
  for (const auto& a : {binary(), ternary()}) {
    const auto counts = enumerate_lyndon(OrderSchedule::lex(a), a, 8).counts();
    const auto k = static_cast<long long>(a->size());
    for (std::size_t n = 1; n <= 8; ++n)
      v.require(static_cast<long long>(counts[n - 1]) == witt_count(k, static_cast<long long>(n)),
                "k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
      {"worked example regressions", criterion1},
      {"counting words and prefixes of length <= 2", criterion2},
      {"omega-power equivalence suites", criterion3},
      {"characterization agreement", criterion4},
      {"factorization uniqueness and correctness", criterion5},
      {"Duval equivalence and speed", criterion6},
      {"first-prefix theorems", criterion7},
      {"Galois structure lemmas", criterion8},
      {"continued-fraction bridge", criterion9},
      {"necklace count cross-check", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    const auto start = Clock::now();
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds_since(start));
    std::cout << (v.passed() ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": "
              << criteria[i].first << " (" << v.summary() << "; " << timing << ")" << std::endl;
    for (const auto& f : v.failures()) std::cout << "       failed: " << f << std::endl;
    if (!v.passed()) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
