// Copyright 2026 The Authors.
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

#ifndef SUBORD_ERRORS_H_
#define SUBORD_ERRORS_H_

#include <stdexcept>
#include <string>

namespace subord {

// Bad arguments: out-of-range ids, parameters outside their domain.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive checker was asked to enumerate beyond its fixed cap.
class EnumerationCapError : public InputError {
 public:
  using InputError::InputError;
};

// A caller broke an operation's precondition contract.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Should never happen; signals a broken internal invariant.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed or schema-invalid instance document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace subord

#endif  // SUBORD_ERRORS_H_
