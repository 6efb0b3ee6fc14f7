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

#include "genlyndon/alphabet.hpp"
#include "genlyndon/classical.hpp"
#include "genlyndon/compare.hpp"
#include "genlyndon/errors.hpp"
#include "genlyndon/galois.hpp"
#include "genlyndon/lyndon.hpp"
#include "genlyndon/oracle.hpp"
#include "genlyndon/order.hpp"
#include "genlyndon/serialize.hpp"
#include "genlyndon/word.hpp"
