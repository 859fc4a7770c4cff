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
#include <functional>
#include <optional>
#include <vector>

#include "symtot/bigint.hpp"
#include "symtot/budget.hpp"
#include "symtot/elementary.hpp"

namespace symtot {

/// N_F(p): number of x in F_p^k with e_j(x) = 0 for all j in J, simultaneous
/// zeros regardless of sys.mode(). Exhaustive; refuses when p^k exceeds the
/// budget.
ZeroCount count_zeros_bruteforce(const SymSystem& sys, std::uint64_t p,
                                 const Budget& budget = {});

/// N_k(e_2, p) for k >= 2. Odd p follows the degenerate / non-degenerate
/// split of the e_2 matrix (degenerate iff k = 1 mod p); p = 2 is the sieved
/// binomial sum over j = 0, 1 (mod 4).
ZeroCount closed_N_e2(unsigned k, std::uint64_t p);

/// N_k(e_1, e_2, p) for k >= 2 (degenerate iff p | k); p = 2 sums C(k, j)
/// over j = 0 (mod 4).
ZeroCount closed_N_e1e2(unsigned k, std::uint64_t p);

/// N_k(e_l, 2) = sum of C(k, j) over j in [0, k] with l not a submask of j.
ZeroCount closed_N_el_mod2(unsigned l, unsigned k);

/// N_k(J, 2) for any J: a 0/1 tuple with j ones has e_l = C(j, l) mod 2.
ZeroCount count_zeros_mod2(const SymSystem& sys);

/// N_m(J', p) supplier for extend_with_ek. Receives the truncated system
/// (arity m >= 1).
using ZeroCounter = std::function<ZeroCount(const SymSystem&, std::uint64_t)>;

/// N_k(J u {k}, p) = sum_{j=1..k} (-1)^{j+1} C(k, j) N_{k-j}(J n [1, k-j], p)
/// with N_0 = 1 and N_m(empty) = p^m. `base` must not contain k.
ZeroCount extend_with_ek(const SymSystem& base, std::uint64_t p,
                         const ZeroCounter& base_counter);

/// Closed-form N_k(J, p) when one is known:
///   J empty -> p^k;  p = 2 -> submask sums;  J = {1..k} -> 1;
///   J = {1} -> p^{k-1};  J = {2} -> closed_N_e2;  J = {1,2} -> closed_N_e1e2;
///   k in J -> extend_with_ek over a base that itself has a closed form.
/// std::nullopt otherwise.
std::optional<ZeroCount> closed_zero_count(const SymSystem& sys, std::uint64_t p);

enum class CountMethod { Closed, BruteForce };

struct ZeroCountResult {
  ZeroCount value;
  CountMethod method;
};

/// closed_zero_count when available, count_zeros_bruteforce otherwise.
ZeroCountResult count_zeros(const SymSystem& sys, std::uint64_t p,
                            const Budget& budget = {});

}  // namespace symtot
