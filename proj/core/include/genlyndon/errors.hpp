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

#include <stdexcept>
#include <string>

namespace genlyndon {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (empty word where a
/// nonempty one is required, non-primitive word, prefix that is not a prefix).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two words (or a word and a schedule) are built over different alphabets.
class AlphabetMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Malformed order spec, unknown letter label, or malformed serialized data.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A length or search-space guard was exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// The caller's mathematical precondition does not hold, e.g. u^w < v^w was
/// required but u^w >= v^w.
class PreconditionViolation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// An internal consistency check failed. Never expected to be thrown.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace genlyndon
