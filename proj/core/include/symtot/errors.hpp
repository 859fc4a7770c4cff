// Copyright 2026 The symtotient Authors
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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace symtot {

/// Caller supplied a value outside an operation's domain (n = 0, composite p,
/// index out of range, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration would visit more tuples than the configured cap.
/// Enumerations are never truncated; they refuse up front.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string what, std::uint64_t modulus, unsigned arity,
                 std::uint64_t cap)
      : std::runtime_error(std::move(what)),
        modulus_(modulus),
        arity_(arity),
        cap_(cap) {}

  std::uint64_t modulus() const noexcept { return modulus_; }
  unsigned arity() const noexcept { return arity_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t modulus_;
  unsigned arity_;
  std::uint64_t cap_;
};

/// An internal identity that must hold did not (non-integral quotient, ...).
/// Signals a bug, not a user error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace symtot
