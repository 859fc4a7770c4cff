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

#include "symtot/arith.hpp"
#include "symtot/bigint.hpp"
#include "symtot/budget.hpp"
#include "symtot/elementary.hpp"

namespace symtot {

/// Generalized totient over Z_n^k constrained by the e_j, j in J. The joint
/// mode counts tuples with gcd(e_j1, ..., e_jm, n) = 1 (varphi_J); the
/// individual mode requires every gcd(e_j, n) = 1 (phi_J).
///
/// Conventions: J empty -> 0 for every n; otherwise n = 1 -> 1.
struct TotientSpec {
  SymSystem system;
  std::uint64_t n;
};

/// varphi_J(n) = prod over p^a || n of p^{k(a-1)} (p^k - N_k(J, p)), with
/// N from count_zeros (closed form when known, F_p enumeration otherwise).
/// Throws BudgetExceeded naming the prime when a fallback is too large.
ZeroCount varphi(const SymSystem& sys, std::uint64_t n, const Budget& budget = {});

/// phi_J(n): per prime power, the alternating sum of varphi_S over all
/// non-empty S within J; multiplied across primes.
ZeroCount phi(const SymSystem& sys, std::uint64_t n, const Budget& budget = {});

ZeroCount varphi_prime_power(const SymSystem& sys, std::uint64_t p, unsigned a,
                             const Budget& budget = {});
ZeroCount phi_prime_power(const SymSystem& sys, std::uint64_t p, unsigned a,
                          const Budget& budget = {});

/// Dispatches to varphi / phi by spec.system.mode().
ZeroCount totient(const TotientSpec& spec, const Budget& budget = {});

/// Literal counts over Z_n^k.
ZeroCount varphi_bruteforce(const SymSystem& sys, std::uint64_t n,
                            const Budget& budget = {});
ZeroCount phi_bruteforce(const SymSystem& sys, std::uint64_t n,
                         const Budget& budget = {});
ZeroCount totient_bruteforce(const TotientSpec& spec, const Budget& budget = {});

/// phi_{1,2}(n) for k >= 2, per prime p^a:
/// p^{k(a-1)} (p^k - p^{k-1} + N_k(e1,e2,p) - N_k(e2,p)).
ZeroCount closed_phi_12(unsigned k, std::uint64_t n);

/// phi_{1,2,3}(n) for k = 3: n^3 prod (1 - 1/p)(1 - 3/p + (6 - h(p))/p^2).
ZeroCount closed_phi_123(std::uint64_t n);

/// The h(p) table shared by phi_{1,2,3} and g_3: 3 at p = 3, p - 1 when
/// p = 1 (mod 3), p + 1 when p = 2 (mod 3).
std::uint64_t h3(std::uint64_t p);

/// phi_{1,k}(n) = n^k prod (1 - 1/p)((1 - 1/p)^k - (-1)^k / p^k), k >= 2.
/// By the x -> x^{-1} symmetry this is also phi_{k-1,k}(n).
ZeroCount toth_phi_1k(unsigned k, std::uint64_t n);

/// Sum over x in S of f(gcd(e_1(x) - 1, n)), S the individual-mode solution
/// set of sys over Z_n^k. Requires 1 in J.
BigInt menon_lhs(std::uint64_t n, const SymSystem& sys, const ArithmeticFn& f,
                 const Budget& budget = {});

/// phi_J(n) * sum over d | n of (mu * f)(d) / phi(d), in exact rationals.
/// Throws InvariantViolation if the product is not an integer.
BigInt menon_rhs(std::uint64_t n, const SymSystem& sys, const ArithmeticFn& f,
                 const Budget& budget = {});

}  // namespace symtot
