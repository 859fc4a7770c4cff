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
#include <vector>

#include "symtotient/records.hpp"

namespace symtot::cli {

/// Index list for --J: "1,2,4", "a..b", or a mix such as "1,3..k".
/// "k" stands for the arity. An empty string gives an empty list.
/// Throws symtot::InvalidArgument on malformed input.
std::vector<unsigned> parse_indices(const std::string& text, unsigned k);

std::vector<std::int64_t> parse_int_list(const std::string& text);

/// Inclusive range "a..b" or a single value "a". b < a is an empty range.
struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool empty() const noexcept { return hi < lo; }
};
Range parse_range(const std::string& text);

std::uint64_t parse_u64(const std::string& text);
std::int64_t parse_i64(const std::string& text);

Format parse_format(const std::string& text);
Method parse_method(const std::string& text);

}  // namespace symtot::cli
