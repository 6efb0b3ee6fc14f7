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

#include "genlyndon/serialize.hpp"

#include <json.hpp>

#include "genlyndon/errors.hpp"

namespace genlyndon {

using nlohmann::json;

namespace {

// The alphabet is only written out when the order spec alone would not
// reproduce it (e.g. "alt:ba" over the alphabet {a, b}).
bool spec_implies_alphabet(const OrderSchedule& schedule, std::string_view sep) {
  return same_alphabet(parse_order_spec(schedule.spec(sep), nullptr, sep).alphabet,
                       schedule.alphabet());
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("JSON lacks '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad JSON member '") + key + "': " + e.what());
  }
}

std::string optional_sep(const json& j) {
  return j.contains("sep") ? member<std::string>(j, "sep") : std::string();
}

ParsedOrder order_from(const json& j, const std::string& sep) {
  AlphabetPtr alphabet;
  if (j.contains("alphabet"))
    alphabet = std::make_shared<const Alphabet>(member<std::vector<std::string>>(j, "alphabet"));
  return parse_order_spec(member<std::string>(j, "order"), alphabet, sep);
}

}  // namespace

std::string to_json(const Factorization& f, std::string_view sep) {
  json j;
  j["word"] = f.source.str(sep);
  j["order"] = f.schedule.spec(sep);
  json factors = json::array();
  for (const auto& factor : f.factors) factors.push_back(factor.str(sep));
  j["factors"] = std::move(factors);
  if (!sep.empty()) j["sep"] = std::string(sep);
  if (!spec_implies_alphabet(f.schedule, sep)) j["alphabet"] = f.schedule.alphabet()->labels();
  return j.dump();
}

Factorization factorization_from_json(std::string_view text) {
  const json j = parse_json(text);
  const std::string sep = optional_sep(j);
  auto [alphabet, schedule] = order_from(j, sep);
  Factorization f{Word::parse(alphabet, member<std::string>(j, "word"), sep), {}, schedule};
  for (const auto& s : member<std::vector<std::string>>(j, "factors"))
    f.factors.push_back(Word::parse(alphabet, s, sep));
  return f;
}

std::string to_json(const EnumerationReport& report, std::string_view sep) {
  json j;
  j["order"] = report.schedule.spec(sep);
  j["alphabet"] = report.alphabet->labels();
  j["max_len"] = report.max_len;
  json words = json::array();
  for (const auto& by_len : report.words) {
    json row = json::array();
    for (const auto& w : by_len) row.push_back(w.str(sep));
    words.push_back(std::move(row));
  }
  j["words"] = std::move(words);
  j["counts"] = report.counts();
  if (!sep.empty()) j["sep"] = std::string(sep);
  return j.dump();
}

EnumerationReport enumeration_from_json(std::string_view text) {
  const json j = parse_json(text);
  const std::string sep = optional_sep(j);
  auto [alphabet, schedule] = order_from(j, sep);
  EnumerationReport report{schedule, alphabet, member<std::size_t>(j, "max_len"), {}};
  for (const auto& row : member<std::vector<std::vector<std::string>>>(j, "words")) {
    std::vector<Word> by_len;
    for (const auto& s : row) by_len.push_back(Word::parse(alphabet, s, sep));
    report.words.push_back(std::move(by_len));
  }
  if (report.words.size() != report.max_len) throw ParseError("words array length != max_len");
  if (j.contains("counts") && member<std::vector<std::size_t>>(j, "counts") != report.counts())
    throw ParseError("counts do not match the listed words");
  return report;
}

}  // namespace genlyndon
