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

namespace symtot {

/// Cap on the number of tuples any brute-force enumeration may visit.
struct Budget {
  static constexpr std::uint64_t kDefaultMaxTuples = 20'000'000;

  std::uint64_t max_tuples = kDefaultMaxTuples;

  /// Default cap, overridden by SYMTOTIENT_BUDGET when it holds a positive
  /// decimal integer.
  static Budget from_env();

  /// Throws BudgetExceeded unless modulus^arity <= max_tuples.
  void require(std::uint64_t modulus, unsigned arity) const;

  bool allows(std::uint64_t modulus, unsigned arity) const noexcept;
};

/// modulus^arity, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t modulus, unsigned arity) noexcept;

}  // namespace symtot
