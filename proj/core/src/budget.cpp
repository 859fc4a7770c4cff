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
#include "symtot/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <string>
#include <string_view>

#include "symtot/errors.hpp"

namespace symtot {

std::uint64_t saturating_pow(std::uint64_t modulus, unsigned arity) noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (unsigned i = 0; i < arity; ++i) {
    if (modulus != 0 && result > kMax / modulus) return kMax;
    result *= modulus;
  }
  return result;
}

Budget Budget::from_env() {
  Budget budget;
  const char* raw = std::getenv("SYMTOTIENT_BUDGET");
  if (raw == nullptr) return budget;
  std::string_view text(raw);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0)
    budget.max_tuples = value;
  return budget;
}

bool Budget::allows(std::uint64_t modulus, unsigned arity) const noexcept {
  return saturating_pow(modulus, arity) <= max_tuples;
}

void Budget::require(std::uint64_t modulus, unsigned arity) const {
  if (allows(modulus, arity)) return;
  throw BudgetExceeded("enumerating " + std::to_string(modulus) + "^" +
                           std::to_string(arity) + " tuples exceeds the budget of " +
                           std::to_string(max_tuples),
                       modulus, arity, max_tuples);
}

}  // namespace symtot
