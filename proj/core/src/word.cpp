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

#include "genlyndon/word.hpp"

#include <algorithm>
#include <numeric>

#include "genlyndon/errors.hpp"

namespace genlyndon {

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw InvalidArgument("word requires an alphabet");
}

Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alphabet_) throw InvalidArgument("word requires an alphabet");
  for (Letter l : letters_) {
    if (l >= alphabet_->size()) throw InvalidArgument("letter rank outside the alphabet");
  }
}

Word Word::parse(AlphabetPtr alphabet, std::string_view text, std::string_view sep) {
  std::vector<Letter> letters;
  for (const auto& label : split_labels(text, sep)) letters.push_back(alphabet->letter(label));
  return Word(std::move(alphabet), std::move(letters));
}

Word Word::prefix(std::size_t length) const {
  return slice(0, length);
}

Word Word::suffix(std::size_t length) const {
  if (length > size()) throw InvalidArgument("suffix longer than word");
  return slice(size() - length, size());
}

Word Word::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > size()) throw InvalidArgument("slice out of range");
  Word out(alphabet_);
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(begin),
                      letters_.begin() + static_cast<std::ptrdiff_t>(end));
  return out;
}

Word Word::power(std::size_t exponent) const {
  Word out(alphabet_);
  out.letters_.reserve(size() * exponent);
  for (std::size_t i = 0; i < exponent; ++i)
    out.letters_.insert(out.letters_.end(), letters_.begin(), letters_.end());
  return out;
}

Word Word::rotation(std::size_t shift) const {
  if (empty()) return *this;
  shift %= size();
  Word out(alphabet_);
  out.letters_.reserve(size());
  out.letters_.insert(out.letters_.end(), letters_.begin() + static_cast<std::ptrdiff_t>(shift),
                      letters_.end());
  out.letters_.insert(out.letters_.end(), letters_.begin(),
                      letters_.begin() + static_cast<std::ptrdiff_t>(shift));
  return out;
}

std::string Word::str(std::string_view sep) const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) out += sep;
    out += alphabet_->label(letters_[i]);
  }
  return out;
}

Word operator+(const Word& a, const Word& b) {
  require_same_alphabet(a, b);
  Word out(a.alphabet_);
  out.letters_.reserve(a.size() + b.size());
  out.letters_ = a.letters_;
  out.letters_.insert(out.letters_.end(), b.letters_.begin(), b.letters_.end());
  return out;
}

bool operator==(const Word& a, const Word& b) {
  return a.letters_ == b.letters_ && same_alphabet(a.alphabet_, b.alphabet_);
}

void require_same_alphabet(const Word& a, const Word& b) {
  if (!same_alphabet(a.alphabet(), b.alphabet()))
    throw AlphabetMismatch("words are over different alphabets");
}

std::string FractionalExponent::str() const {
  // Improper fraction: 5/3 rather than 1 2/3.
  if (num == 0) return std::to_string(whole);
  return std::to_string(whole * den + num) + "/" + std::to_string(den);
}

std::optional<FractionalExponent> fractional_exponent(const Word& v, const Word& u) {
  if (u.empty()) throw InvalidArgument("fractional_exponent: base word must be nonempty");
  require_same_alphabet(v, u);
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != u[i % n]) return std::nullopt;
  }
  FractionalExponent r;
  r.whole = v.size() / n;
  std::size_t rem = v.size() % n;
  std::size_t g = std::gcd(rem, n);
  r.num = rem / g;
  r.den = n / g;
  return r;
}

namespace {

// KMP failure function: fail[i] = longest border of w[0..i).
std::vector<std::size_t> failure_function(LetterSpan w) {
  std::vector<std::size_t> fail(w.size() + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k];
    if (w[i] == w[k]) ++k;
    fail[i + 1] = k;
  }
  return fail;
}

}  // namespace

std::vector<std::size_t> borders(const Word& w) {
  std::vector<std::size_t> out;
  if (w.empty()) return out;
  auto fail = failure_function(w.letters());
  for (std::size_t b = fail[w.size()]; b > 0; b = fail[b]) out.push_back(b);
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t smallest_period(LetterSpan w) {
  if (w.empty()) return 0;
  return w.size() - failure_function(w)[w.size()];
}

std::pair<Word, std::size_t> primitive_root(const Word& w) {
  if (w.empty()) throw InvalidArgument("primitive_root: empty word");
  std::size_t p = smallest_period(w.letters());
  if (w.size() % p != 0) p = w.size();
  return {w.prefix(p), w.size() / p};
}

bool is_primitive(const Word& w) {
  return primitive_root(w).second == 1;
}

std::vector<Word> rotations(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w.rotation(i));
  return out;
}

}  // namespace genlyndon
