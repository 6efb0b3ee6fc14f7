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
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genlyndon/alphabet.hpp"

namespace genlyndon {

using LetterSpan = std::span<const Letter>;

/// Finite word over an alphabet. The empty word is valid.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet);
  Word(AlphabetPtr alphabet, std::vector<Letter> letters);

  /// Parses a label string; empty `sep` means one label per character.
  static Word parse(AlphabetPtr alphabet, std::string_view text, std::string_view sep = {});

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  LetterSpan letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word prefix(std::size_t length) const;
  Word suffix(std::size_t length) const;
  Word slice(std::size_t begin, std::size_t end) const;
  Word power(std::size_t exponent) const;
  /// Rotation v u of w = u v with |u| = shift.
  Word rotation(std::size_t shift) const;

  std::string str(std::string_view sep = {}) const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b);

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

/// Throws AlphabetMismatch unless both words share an alphabet.
void require_same_alphabet(const Word& a, const Word& b);

/// w = u^r with r = whole + num/den, 0 <= num < den, num/den reduced.
struct FractionalExponent {
  std::size_t whole = 0;
  std::size_t num = 0;
  std::size_t den = 1;

  bool strict() const noexcept { return whole >= 1; }
  /// "5/3", "2", "0".
  std::string str() const;
  friend bool operator==(const FractionalExponent&, const FractionalExponent&) = default;
};

/// The exponent r with v = u^r when v is a prefix of u^w; nullopt otherwise.
std::optional<FractionalExponent> fractional_exponent(const Word& v, const Word& u);

/// Border lengths of w in increasing order; empty means unbordered.
std::vector<std::size_t> borders(const Word& w);

/// Smallest period of w (|w| for an unbordered word, 0 for the empty word).
std::size_t smallest_period(LetterSpan w);

/// Shortest x and maximal e with w = x^e.
std::pair<Word, std::size_t> primitive_root(const Word& w);
bool is_primitive(const Word& w);

/// All |w| cyclic rotations, rotation(0) first.
std::vector<Word> rotations(const Word& w);

}  // namespace genlyndon
