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

#include "genlyndon/alphabet.hpp"

#include <string>

#include "genlyndon/errors.hpp"

namespace genlyndon {

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidArgument("alphabet must have at least one letter");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InvalidArgument("alphabet labels must be nonempty");
    auto [it, inserted] = index_.emplace(labels_[i], static_cast<Letter>(i));
    if (!inserted) throw InvalidArgument("duplicate alphabet label '" + labels_[i] + "'");
  }
}

AlphabetPtr Alphabet::from_chars(std::string_view chars) {
  return from_labels(chars, {});
}

AlphabetPtr Alphabet::from_labels(std::string_view text, std::string_view sep) {
  return std::make_shared<const Alphabet>(split_labels(text, sep));
}

AlphabetPtr Alphabet::integers(std::size_t k) {
  std::vector<std::string> labels;
  labels.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) labels.push_back(std::to_string(i));
  return std::make_shared<const Alphabet>(std::move(labels));
}

std::optional<Letter> Alphabet::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::letter(std::string_view label) const {
  if (auto found = find(label)) return *found;
  throw ParseError("letter '" + std::string(label) + "' is not in the alphabet");
}

std::vector<std::string> split_labels(std::string_view text, std::string_view sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  if (sep.empty()) {
    out.reserve(text.size());
    for (char c : text) out.emplace_back(1, c);
    return out;
  }
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + sep.size();
  }
  return out;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace genlyndon
