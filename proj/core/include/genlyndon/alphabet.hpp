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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace genlyndon {

/// A letter is its rank 0..k-1 in the alphabet. Labels are presentation only.
using Letter = std::uint32_t;

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Finite set of k >= 1 distinct display labels.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> labels);

  /// One label per character of `chars`, e.g. "abc" -> {a, b, c}.
  static AlphabetPtr from_chars(std::string_view chars);

  /// Labels obtained by splitting `text` on `sep`; an empty `sep` splits
  /// per character.
  static AlphabetPtr from_labels(std::string_view text, std::string_view sep);

  /// Labels "1", "2", ..., "k". Used for continued-fraction quotients.
  static AlphabetPtr integers(std::size_t k);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Letter letter) const { return labels_.at(letter); }
  std::optional<Letter> find(std::string_view label) const;
  Letter letter(std::string_view label) const;  // throws ParseError

  bool operator==(const Alphabet& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Letter> index_;
};

/// Splits `text` into labels: per character when `sep` is empty.
std::vector<std::string> split_labels(std::string_view text, std::string_view sep);

/// True when both pointers name equal alphabets.
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

}  // namespace genlyndon
