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

#include "genlyndon/classical.hpp"

#include "genlyndon/errors.hpp"

namespace genlyndon {

ClassicalContext::ClassicalContext(AlphabetPtr alphabet, PositionOrder base)
    : base_(base), schedule_(OrderSchedule::constant(std::move(alphabet), std::move(base))) {}

ClassicalContext ClassicalContext::natural(AlphabetPtr alphabet) {
  auto k = alphabet->size();
  return ClassicalContext(std::move(alphabet), PositionOrder::natural(k));
}

namespace {

void require_word(const Word& w, const ClassicalContext& ctx, const char* op) {
  if (w.empty()) throw InvalidArgument(std::string(op) + ": empty word");
  if (!same_alphabet(w.alphabet(), ctx.alphabet()))
    throw AlphabetMismatch(std::string(op) + ": word and order alphabets differ");
}

}  // namespace

bool is_lyndon_classical(const Word& w, const ClassicalContext& ctx) {
  require_word(w, ctx, "is_lyndon_classical");
  const PositionOrder& order = ctx.base();
  const LetterSpan letters = w.letters();
  const std::size_t n = letters.size();
  for (std::size_t start = 1; start < n; ++start) {
    // w versus its suffix starting at `start`; a suffix that is a prefix of
    // w is smaller than w.
    std::size_t i = 0;
    while (start + i < n && letters[i] == letters[start + i]) ++i;
    if (start + i == n) return false;
    if (!order.less(letters[i], letters[start + i])) return false;
  }
  return true;
}

std::vector<std::size_t> duval_factor_ends(LetterSpan w, const PositionOrder& order) {
  std::vector<std::size_t> ends;
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && !order.less(w[j], w[k])) {
      if (order.less(w[k], w[j]))
        k = i;
      else
        ++k;
      ++j;
    }
    const std::size_t period = j - k;
    while (i <= k) {
      i += period;
      ends.push_back(i);
    }
  }
  return ends;
}

Factorization duval_factorize(const Word& w, const ClassicalContext& ctx) {
  if (!same_alphabet(w.alphabet(), ctx.alphabet()))
    throw AlphabetMismatch("duval_factorize: word and order alphabets differ");
  Factorization f{w, {}, ctx.schedule()};
  std::size_t begin = 0;
  for (std::size_t end : duval_factor_ends(w.letters(), ctx.base())) {
    f.factors.push_back(w.slice(begin, end));
    begin = end;
  }
  return f;
}

bool ufnarovskij_check(const Word& w, const ClassicalContext& ctx) {
  require_word(w, ctx, "ufnarovskij_check");
  const LetterSpan letters = w.letters();
  for (std::size_t len = 1; len < letters.size(); ++len) {
    if (compare_omega(letters.first(len), letters, ctx.schedule()) != Ordering::Less)
      return false;
  }
  return true;
}

Word classical_first_prefix(const Word& w, const ClassicalContext& ctx) {
  require_word(w, ctx, "classical_first_prefix");
  const LetterSpan letters = w.letters();
  for (std::size_t len = 1; len < letters.size(); ++len) {
    if (compare_omega(letters.first(len), letters.subspan(len), ctx.schedule()) != Ordering::Less)
      return w.prefix(len);
  }
  return w;
}

bool bergman_chain_check(const Word& u, const Word& v, const ClassicalContext& ctx) {
  require_word(u, ctx, "bergman_chain_check");
  require_word(v, ctx, "bergman_chain_check");
  const auto& s = ctx.schedule();
  if (compare_omega(u, v, s) != Ordering::Less)
    throw PreconditionViolation("bergman_chain_check requires u^w < v^w");
  const Word uv = u + v, vu = v + u;
  return compare_omega(u, uv, s) == Ordering::Less && compare_omega(uv, vu, s) == Ordering::Less &&
         compare_omega(vu, v, s) == Ordering::Less;
}

Word lyndon_conjugate(const Word& w, const ClassicalContext& ctx) {
  require_word(w, ctx, "lyndon_conjugate");
  if (!is_primitive(w)) throw InvalidArgument("lyndon_conjugate: word is not primitive");
  for (std::size_t shift = 0; shift < w.size(); ++shift) {
    Word r = w.rotation(shift);
    if (is_lyndon_classical(r, ctx)) return r;
  }
  throw InternalError("primitive word without a Lyndon conjugate");
}

}  // namespace genlyndon
