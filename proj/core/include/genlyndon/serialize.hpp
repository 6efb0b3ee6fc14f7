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

#include <string>
#include <string_view>

#include "genlyndon/lyndon.hpp"
#include "genlyndon/oracle.hpp"

namespace genlyndon {

/// {"word": "...", "order": "<order-spec>", "factors": ["...", ...]}
/// A "sep" member is added when labels are multi-character.
std::string to_json(const Factorization& f, std::string_view sep = {});
Factorization factorization_from_json(std::string_view json);

/// {"order": ..., "alphabet": [...], "max_len": N, "words": [[...], ...],
///  "counts": [...]}; words[i] lists the words of length i+1.
std::string to_json(const EnumerationReport& report, std::string_view sep = {});
EnumerationReport enumeration_from_json(std::string_view json);

}  // namespace genlyndon
