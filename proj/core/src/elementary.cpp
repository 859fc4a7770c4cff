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
#include "symtot/elementary.hpp"

#include <algorithm>
#include <string>

#include "symtot/errors.hpp"

namespace symtot {

__extension__ using Uint128 = unsigned __int128;

SymSystem::SymSystem(unsigned k, std::vector<unsigned> indices, GcdMode mode)
    : k_(k), indices_(std::move(indices)), mode_(mode) {
  if (k_ == 0) throw InvalidArgument("arity k must be >= 1");
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw InvalidArgument("J has a repeated index");
  for (unsigned j : indices_) {
    if (j < 1 || j > k_)
      throw InvalidArgument("index " + std::to_string(j) + " outside [1, " +
                            std::to_string(k_) + "]");
  }
}

bool SymSystem::contains(unsigned j) const noexcept {
  return std::binary_search(indices_.begin(), indices_.end(), j);
}

bool SymSystem::is_full() const noexcept {
  return indices_.size() == k_;  // sorted, unique, within [1, k]
}

std::string format_indices(std::span<const unsigned> indices) {
  std::string out;
  for (unsigned j : indices) {
    if (!out.empty()) out += ',';
    out += std::to_string(j);
  }
  return out;
}

std::vector<std::uint64_t> elementary_symmetric(std::span<const std::uint64_t> x,
                                                unsigned degree, std::uint64_t m) {
  if (m == 0) throw InvalidArgument("modulus must be positive");
  std::vector<std::uint64_t> e(degree + 1, 0);
  e[0] = 1 % m;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::uint64_t xi = x[i] % m;
    const unsigned top = static_cast<unsigned>(std::min<std::size_t>(degree, i + 1));
    for (unsigned j = top; j >= 1; --j)
      e[j] = static_cast<std::uint64_t>(
          (e[j] + static_cast<Uint128>(xi) * e[j - 1]) % m);
  }
  return e;
}

std::uint64_t eval_elem_sym(unsigned j, std::span<const std::uint64_t> x,
                            std::uint64_t m) {
  if (j < 1 || j > x.size())
    throw InvalidArgument("e_" + std::to_string(j) + " undefined for " +
                          std::to_string(x.size()) + " variables");
  return elementary_symmetric(x, j, m)[j];
}

}  // namespace symtot
