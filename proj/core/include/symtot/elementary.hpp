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
#include <span>
#include <string>
#include <vector>

namespace symtot {

/// How the constraint polynomials meet the modulus: one joint gcd over all of
/// them, or each one separately coprime.
enum class GcdMode { Joint, Individual };

/// Arity k plus the set J of elementary symmetric polynomials e_j (j in J)
/// that are constrained. J is kept sorted; indices are unique and in [1, k].
/// An empty J is allowed and denotes the empty system.
class SymSystem {
 public:
  SymSystem(unsigned k, std::vector<unsigned> indices,
            GcdMode mode = GcdMode::Joint);

  unsigned arity() const noexcept { return k_; }
  const std::vector<unsigned>& indices() const noexcept { return indices_; }
  GcdMode mode() const noexcept { return mode_; }

  bool empty() const noexcept { return indices_.empty(); }
  bool contains(unsigned j) const noexcept;
  unsigned max_index() const noexcept { return empty() ? 0 : indices_.back(); }
  std::size_t size() const noexcept { return indices_.size(); }

  /// J == {1, ..., k}.
  bool is_full() const noexcept;

  SymSystem with_mode(GcdMode mode) const { return {k_, indices_, mode}; }

  friend bool operator==(const SymSystem&, const SymSystem&) = default;

 private:
  unsigned k_;
  std::vector<unsigned> indices_;
  GcdMode mode_;
};

/// "1,2,3" style rendering of J.
std::string format_indices(std::span<const unsigned> indices);

/// e_j(x) mod m from the truncated product prod (1 + x_i t); O(k j).
/// Throws InvalidArgument unless 1 <= j <= len(x) and m >= 1.
std::uint64_t eval_elem_sym(unsigned j, std::span<const std::uint64_t> x,
                            std::uint64_t m);

/// [e_0, e_1, ..., e_degree](x) mod m.
std::vector<std::uint64_t> elementary_symmetric(
    std::span<const std::uint64_t> x, unsigned degree, std::uint64_t m);

}  // namespace symtot
