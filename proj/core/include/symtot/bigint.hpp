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
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace symtot {

/// Exact signed integer used for every count and every intermediate of a
/// product formula.
using BigInt = boost::multiprecision::cpp_int;

/// Exact count of solutions. Always non-negative.
using ZeroCount = BigInt;

using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace symtot
