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

#include "genlyndon/galois.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "genlyndon/errors.hpp"

namespace genlyndon {

GaloisContext::GaloisContext(AlphabetPtr alphabet, PositionOrder base)
    : base_(base), schedule_(OrderSchedule::alternating(std::move(alphabet), std::move(base))) {}

GaloisContext GaloisContext::natural(AlphabetPtr alphabet) {
  auto k = alphabet->size();
  return GaloisContext(std::move(alphabet), PositionOrder::natural(k));
}

namespace {

void require_word(const Word& w, const GaloisContext& ctx, const char* op) {
  if (w.empty()) throw InvalidArgument(std::string(op) + ": empty word");
  if (!same_alphabet(w.alphabet(), ctx.alphabet()))
    throw AlphabetMismatch(std::string(op) + ": word and order alphabets differ");
}

}  // namespace

bool is_galois(const Word& w, const GaloisContext& ctx) {
  require_word(w, ctx, "is_galois");
  return is_generalized_lyndon(w, ctx.schedule(), LyndonMethod::SuffixCompare);
}

bool parity_prefix_check(const Word& w, const GaloisContext& ctx) {
  require_word(w, ctx, "parity_prefix_check");
  const LetterSpan letters = w.letters();
  for (std::size_t len = 1; len < letters.size(); ++len) {
    const Ordering want = len % 2 == 0 ? Ordering::Less : Ordering::Greater;
    if (compare_omega(letters.first(len), letters, ctx.schedule()) != want) return false;
  }
  return true;
}

std::size_t multiplicity(const Factorization& f) {
  if (f.factors.empty()) throw InvalidArgument("multiplicity: empty factorization");
  return static_cast<std::size_t>(
      std::count(f.factors.begin(), f.factors.end(), f.factors.front()));
}

bool star_holds_parity_form(const Word& p, const Word& w, const GaloisContext& ctx) {
  const Ordering c = compare_omega(p, w, ctx.schedule());
  return p.size() % 2 == 0 ? c != Ordering::Less : c != Ordering::Greater;
}

bool star_holds_suffix_form(const Word& p, const Word& w, const GaloisContext& ctx) {
  if (p.size() == w.size()) return true;
  const LetterSpan s = w.letters().subspan(p.size());
  return compare_omega(p.letters(), s, ctx.schedule()) != Ordering::Less;
}

StarReport star_condition(const Word& p, const Word& w, const GaloisContext& ctx) {
  require_word(w, ctx, "star_condition");
  require_word(p, ctx, "star_condition");
  if (p.size() > w.size() ||
      !std::equal(p.letters().begin(), p.letters().end(), w.letters().begin()))
    throw InvalidArgument("star_condition: p is not a prefix of w");
  const bool direct = star_holds_parity_form(p, w, ctx);
  if (direct != star_holds_suffix_form(p, w, ctx))
    throw InternalError("star_condition: the two formulations disagree");
  return StarReport{p, parity_of(p.size()), direct};
}

Word galois_first_prefix(const Word& w, const GaloisContext& ctx) {
  require_word(w, ctx, "galois_first_prefix");
  const Factorization f = factorize(w, ctx.schedule(), w.size());
  const Word& g1 = f.factors.front();
  const std::size_t m = multiplicity(f);
  if (g1.size() % 2 == 1 && m % 2 == 0 && m < f.size()) return g1 + g1;
  return g1;
}

bool border_parity_witness(const Word& w, const GaloisContext& ctx) {
  require_word(w, ctx, "border_parity_witness");
  if (w.size() % 2 == 1) return true;
  return borders(w).empty() || !is_galois(w, ctx);
}

bool galois_borders_odd(const Word& w, const GaloisContext& ctx) {
  require_word(w, ctx, "galois_borders_odd");
  const auto lengths = borders(w);
  if (std::all_of(lengths.begin(), lengths.end(), [](std::size_t b) { return b % 2 == 1; }))
    return true;
  return !is_galois(w, ctx);
}

namespace {

std::vector<unsigned long> quotients_of(const Alphabet& alphabet) {
  std::vector<unsigned long> out;
  for (const auto& label : alphabet.labels()) {
    unsigned long value = 0;
    auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), value);
    if (ec != std::errc() || ptr != label.data() + label.size() || value == 0)
      throw InvalidArgument("continued fractions need positive integer labels, got '" + label + "'");
    if (std::find(out.begin(), out.end(), value) != out.end())
      throw InvalidArgument("continued-fraction labels must have distinct values");
    out.push_back(value);
  }
  return out;
}

// Convergent recurrence over the periodic quotient sequence of w^w.
class ConvergentWalker {
 public:
  ConvergentWalker(LetterSpan w, const std::vector<unsigned long>& quotients)
      : w_(w), quotients_(quotients) {}

  void step() {
    const long long a = static_cast<long long>(quotients_[w_[pos_]]);
    Integer p = a * p1_ + p2_;
    Integer q = a * q1_ + q2_;
    p2_ = std::move(p1_);
    q2_ = std::move(q1_);
    p1_ = std::move(p);
    q1_ = std::move(q);
    if (++pos_ == w_.size()) pos_ = 0;
  }

  // Every value [a1; ..., ad, t] with t > 1 lies between the last
  // convergent and its mediant with the previous one.
  CfInterval interval() const {
    Rational c(p1_, q1_);
    Rational m(p1_ + p2_, q1_ + q2_);
    return c < m ? CfInterval{c, m} : CfInterval{m, c};
  }

 private:
  using Integer = boost::multiprecision::cpp_int;
  LetterSpan w_;
  const std::vector<unsigned long>& quotients_;
  std::size_t pos_ = 0;
  Integer p1_ = 1, p2_ = 0, q1_ = 0, q2_ = 1;
};

void require_cf_words(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) throw InvalidArgument("cf_compare: empty word");
  require_same_alphabet(u, v);
}

}  // namespace

std::size_t cf_depth_cap(std::size_t u_len, std::size_t v_len) noexcept {
  return 4 * (u_len + v_len) + 16;
}

CfInterval cf_interval(const Word& w, std::size_t depth) {
  if (w.empty() || depth == 0) throw InvalidArgument("cf_interval: need a nonempty word and depth >= 1");
  const auto quotients = quotients_of(*w.alphabet());
  ConvergentWalker walker(w.letters(), quotients);
  for (std::size_t d = 0; d < depth; ++d) walker.step();
  return walker.interval();
}

CfComparison cf_compare_explained(const Word& u, const Word& v) {
  require_cf_words(u, v);
  const auto quotients = quotients_of(*u.alphabet());
  CfComparison result;
  if (!comparison_position(u.letters(), v.letters())) return result;

  ConvergentWalker wu(u.letters(), quotients), wv(v.letters(), quotients);
  const std::size_t cap = cf_depth_cap(u.size(), v.size());
  for (std::size_t depth = 1; depth <= cap; ++depth) {
    wu.step();
    wv.step();
    CfInterval iu = wu.interval(), iv = wv.interval();
    if (iu.hi < iv.lo || iv.hi < iu.lo) {
      result.ordering = iu.hi < iv.lo ? Ordering::Less : Ordering::Greater;
      result.depth = depth;
      result.u_interval = std::move(iu);
      result.v_interval = std::move(iv);
      return result;
    }
  }
  throw InternalError("cf_compare: convergent intervals did not separate within the depth cap");
}

Ordering cf_compare(const Word& u, const Word& v) {
  return cf_compare_explained(u, v).ordering;
}

OrderSchedule numeric_alternating(const AlphabetPtr& alphabet) {
  const auto quotients = quotients_of(*alphabet);
  std::vector<Letter> seq(alphabet->size());
  std::iota(seq.begin(), seq.end(), Letter{0});
  std::sort(seq.begin(), seq.end(),
            [&](Letter a, Letter b) { return quotients[a] < quotients[b]; });
  return OrderSchedule::alternating(alphabet, PositionOrder::from_sequence(seq));
}

}  // namespace genlyndon
