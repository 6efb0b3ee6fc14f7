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

#include <algorithm>
#include <sstream>

#include "genlyndon/classical.hpp"
#include "genlyndon/galois.hpp"
#include "genlyndon/oracle.hpp"

namespace genlyndon {

namespace {

// Collects failed sub-checks of one corpus item.
class Item {
 public:
  explicit Item(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }

  // Every adjacent pair of the chain compares as `want` under omega-powers.
  void omega_chain(const std::vector<Word>& chain, const OrderSchedule& s, Ordering want,
                   const std::string& what) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      expect(compare_omega(chain[i], chain[i + 1], s) == want,
             what + ": (" + chain[i].str() + ")^w " + std::string(symbol(want)) + " (" +
                 chain[i + 1].str() + ")^w");
    }
  }

  void finite_chain(const std::vector<Word>& chain, const OrderSchedule& s,
                    const std::string& what) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      expect(compare_finite(chain[i], chain[i + 1], s) == Ordering::Less,
             what + ": " + chain[i].str() + " < " + chain[i + 1].str());
    }
  }

  void factors(const Word& w, const OrderSchedule& s, const std::string& expected) {
    const auto got = factorize(w, s).str();
    expect(got == expected, "factorize(" + w.str() + ") = " + got + ", expected " + expected);
  }

  RegressionItem finish() && {
    std::ostringstream detail;
    for (std::size_t i = 0; i < failures_.size(); ++i) detail << (i ? "; " : "") << failures_[i];
    return {std::move(name_), failures_.empty(), detail.str()};
  }

 private:
  std::string name_;
  std::vector<std::string> failures_;
};

template <typename F>
RegressionItem run_item(std::string name, F&& body) {
  Item item(std::move(name));
  try {
    body(item);
  } catch (const std::exception& e) {
    item.expect(false, std::string("exception: ") + e.what());
  }
  return std::move(item).finish();
}

std::vector<std::string> strs(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.str());
  return out;
}

}  // namespace

std::vector<RegressionItem> run_regressions() {
  const AlphabetPtr ab = Alphabet::from_chars("ab");
  const AlphabetPtr abc = Alphabet::from_chars("abc");
  const auto w2 = [&](std::string_view s) { return Word::parse(ab, s); };
  const auto w3 = [&](std::string_view s) { return Word::parse(abc, s); };
  const OrderSchedule lex2 = OrderSchedule::lex(ab);
  const OrderSchedule alt2 = OrderSchedule::alt(ab);
  const OrderSchedule prime = OrderSchedule::prime_flip(ab, PositionOrder::natural(2));
  const GaloisContext galois2 = GaloisContext::natural(ab);
  const ClassicalContext classical2 = ClassicalContext::natural(ab);

  std::vector<RegressionItem> out;

  out.push_back(run_item("fractional powers of abcdef", [&](Item& t) {
    const AlphabetPtr af = Alphabet::from_chars("abcdef");
    const Word u = Word::parse(af, "abcdef");
    auto r1 = fractional_exponent(Word::parse(af, "abcd"), u);
    auto r2 = fractional_exponent(Word::parse(af, "abcdefabcd"), u);
    t.expect(r1 && r1->str() == "2/3" && !r1->strict(), "abcd = u^(2/3)");
    t.expect(r2 && r2->str() == "5/3" && r2->strict(), "abcdefabcd = u^(5/3), strict");
  }));

  out.push_back(run_item("prime-flip order chains", [&](Item& t) {
    t.finite_chain({w2("aba"), w2("abaaa"), w2("aab"), w2("bab"), w2("baab")}, prime, "finite");
    t.omega_chain({w2("ab"), w2("a"), w2("b"), w2("ba")}, prime, Ordering::Less, "omega");
  }));

  out.push_back(run_item("prefix does not imply smaller omega-power", [&](Item& t) {
    t.expect(compare_omega(w2("aba"), w2("ab"), prime) == Ordering::Less, "(aba)^w < (ab)^w");
  }));

  out.push_back(run_item("opposite of the lexicographic order", [&](Item& t) {
    const OrderSchedule anti = lex2.opposite();
    for (std::size_t n = 1; n <= 16; ++n)
      t.expect(anti.less_at(n, 1, 0), "b < a at position " + std::to_string(n));
    t.expect(anti.spec() == "anti:ab", "spec anti:ab");
  }));

  out.push_back(run_item("prime-flip chain and its opposite", [&](Item& t) {
    t.omega_chain({w2("aba"), w2("aab"), w2("bab"), w2("baa")}, prime, Ordering::Less, "order");
    t.omega_chain({w2("baa"), w2("bab"), w2("aab"), w2("aba")}, prime.opposite(), Ordering::Less,
                  "opposite");
  }));

  out.push_back(run_item("abba is generalized Lyndon under prime-flip", [&](Item& t) {
    t.omega_chain({w2("abba"), w2("aabb"), w2("bbaa"), w2("baab")}, prime, Ordering::Less,
                  "rotations");
    for (auto m : {LyndonMethod::Rotations, LyndonMethod::SplitCompare, LyndonMethod::SuffixCompare})
      t.expect(is_generalized_lyndon(w2("abba"), prime, m), std::string(method_name(m)));
    t.expect(compare_omega(w2("abb"), w2("a"), prime) == Ordering::Less, "(abb)^w < a^w");
    t.expect(compare_omega(w2("abba"), w2("a"), prime) == Ordering::Less, "(abba)^w < a^w");
  }));

  out.push_back(run_item("factorization of aabaabaabb under prime-flip", [&](Item& t) {
    t.factors(w2("aabaabaabb"), prime, "(a)(aba)(aba)(abb)");
    t.expect(last_factor(w2("aabaabaabb"), prime) == w2("abb"), "last factor abb");
    t.expect(longest_lyndon_suffix(w2("aabaabaabb"), prime) == w2("abb"), "longest suffix abb");
  }));

  out.push_back(run_item("aabab is Lyndon with increasing prefix powers", [&](Item& t) {
    const Word w = w2("aabab");
    t.expect(is_lyndon_classical(w, classical2), "aabab Lyndon");
    t.expect(ufnarovskij_check(w, classical2), "prefix criterion");
    t.expect(compare_omega(w2("a"), w2("aa"), lex2) == Ordering::Equal, "a^w = (aa)^w");
    t.omega_chain({w2("aa"), w2("aaba"), w2("aab"), w}, lex2, Ordering::Less, "chain");
  }));

  out.push_back(run_item("ababaab classical first factor", [&](Item& t) {
    const Word w = w2("ababaab");
    t.factors(w, lex2, "(ab)(ab)(aab)");
    t.expect(duval_factorize(w, classical2).str() == "(ab)(ab)(aab)", "duval");
    t.omega_chain({w2("ab"), w, w2("abaab")}, lex2, Ordering::Greater, "upper chain");
    t.omega_chain({w2("a"), w, w2("babaab")}, lex2, Ordering::Less, "lower chain");
    t.expect(classical_first_prefix(w, classical2) == w2("ab"), "first prefix ab");
  }));

  out.push_back(run_item("alternating order chain", [&](Item& t) {
    t.omega_chain({w2("ab"), w2("a"), w2("b"), w2("ba")}, alt2, Ordering::Less, "alt");
    t.expect(compare_finite(w2("aba"), w2("abb"), alt2) == Ordering::Less, "(ab)a... < (ab)b...");
    t.expect(compare_finite(w2("ba"), w2("bb"), alt2) == Ordering::Greater, "ba... > bb...");
  }));

  out.push_back(run_item("Galois words over a<b<c", [&](Item& t) {
    const GaloisContext g3 = GaloisContext::natural(abc);
    for (auto s : {"b", "ac", "bc", "aba", "abb", "abaa", "acab"})
      t.expect(is_galois(w3(s), g3), std::string(s) + " is Galois");
  }));

  out.push_back(run_item("abbabbabaa first prefix is (abb)^2", [&](Item& t) {
    const Word w = w2("abbabbabaa");
    t.factors(w, alt2, "(abb)(abb)(abaa)");
    t.expect(compare_omega(w2("abbabb"), w, alt2) == Ordering::Greater, "((abb)^2)^w > w^w");
    t.expect(galois_first_prefix(w, galois2) == w2("abbabb"), "first prefix abbabb");
    t.expect(star_condition(w2("abbabb"), w, galois2).holds, "(abb)^2 satisfies (*)");
    for (std::size_t len = 1; len < 6; ++len)
      t.expect(!star_condition(w.prefix(len), w, galois2).holds,
               w.prefix(len).str() + " fails (*)");
    t.expect(multiplicity(factorize(w, alt2)) == 2, "multiplicity 2");
  }));

  out.push_back(run_item("Galois conjugate of baa is not a factor of its square", [&](Item& t) {
    const Word w = w2("baa");
    std::vector<Word> galois_rotations;
    for (const auto& r : rotations(w))
      if (is_galois(r, galois2)) galois_rotations.push_back(r);
    t.expect(galois_rotations.size() == 1 && galois_rotations[0] == w2("aba"),
             "unique Galois conjugate aba");
    const auto f = factorize(w + w, alt2);
    t.expect(f.str() == "(b)(a)(abaa)", "factorize(baabaa) = (b)(a)(abaa), got " + f.str());
    t.expect(std::find(f.factors.begin(), f.factors.end(), w2("aba")) == f.factors.end(),
             "aba absent");
    t.expect(last_factor(w + w, alt2) == w2("abaa"), "last factor abaa");
  }));

  out.push_back(run_item("even-length bordered Galois word", [&](Item& t) {
    const Word w = w2("abaa");
    t.expect(is_galois(w, galois2), "abaa is Galois");
    t.expect(borders(w) == std::vector<std::size_t>{1}, "abaa has the single border a");
    t.expect(!border_parity_witness(w, galois2), "bordered with even length");
    t.expect(galois_borders_odd(w, galois2), "its border has odd length");
  }));

  out.push_back(run_item("first factor is not the maximal prefix power", [&](Item& t) {
    t.factors(w2("abab"), alt2, "(ab)(ab)");
    t.expect(compare_omega(w2("a"), w2("ab"), alt2) == Ordering::Greater, "a^w > (ab)^w");
  }));

  out.push_back(run_item("first factor is not the longest Lyndon prefix", [&](Item& t) {
    t.expect(is_galois(w2("aba"), galois2) && is_galois(w2("ab"), galois2), "aba, ab Galois");
    t.expect(first_factor(w2("abab"), alt2) == w2("ab"), "first factor ab");
  }));

  out.push_back(run_item("nonincreasing factorization is not the shortest", [&](Item& t) {
    const Word w = w2("ababab");
    t.factors(w, alt2, "(ab)(ab)(ab)");
    t.expect(is_galois(w2("ababa"), galois2) && is_galois(w2("b"), galois2), "ababa, b Galois");
    const auto f = Factorization::from_factors({w2("ababa"), w2("b")}, alt2, ab);
    t.expect(!verify_factorization(f), "(ababa)(b) is not nonincreasing");
    bool shorter = false;
    for (const auto& c : brute_force_factorizations(w, alt2))
      if (c.factors.size() == 2 && strs(c.factors) == std::vector<std::string>{"ababa", "b"})
        shorter = !c.nonincreasing;
    t.expect(shorter, "brute force finds (ababa)(b) as a non-monotone factorization");
  }));

  out.push_back(run_item("Lyndon words and prefixes of length <= 2", [&](Item& t) {
    const auto lex3 = OrderSchedule::lex(abc);
    const auto alt3 = OrderSchedule::alt(abc);
    const std::vector<std::string> six{"a", "b", "c", "ab", "ac", "bc"};
    for (const auto* s : {&lex3, &alt3}) {
      auto report = enumerate_lyndon(*s, abc, 2);
      std::vector<std::string> all = strs(report.words[0]);
      for (const auto& x : strs(report.words[1])) all.push_back(x);
      t.expect(all == six, s->spec() + ": six words of length <= 2");
    }
    t.expect(strs(lyndon_prefixes_of_length(lex3, abc, 2, 6)) ==
                 std::vector<std::string>{"aa", "ab", "ac", "bb", "bc"},
             "classical prefixes aa ab ac bb bc");
    for (std::size_t bound : {4, 6, 8})
      t.expect(strs(lyndon_prefixes_of_length(alt3, abc, 2, bound)) ==
                   std::vector<std::string>{"ab", "ac", "bc"},
               "alternating prefixes ab ac bc at bound " + std::to_string(bound));
  }));

  return out;
}

}  // namespace genlyndon
