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

#include <complex>
#include <cstdint>
#include <vector>

#include "symtot/bigint.hpp"
#include "symtot/budget.hpp"
#include "symtot/elementary.hpp"

namespace symtot {

/// a_1 x_1 + ... + a_k x_k = b (mod n), restricted to tuples with
/// gcd(e_j(x), n) = 1 for every j in the constraint's J.
class CongruenceProblem {
 public:
  /// Coefficients and b are reduced mod n. Throws InvalidArgument when
  /// n = 0, k = 0, or coeffs.size() != constraint.arity().
  CongruenceProblem(std::vector<std::int64_t> coeffs, std::int64_t b,
                    std::uint64_t n, SymSystem constraint);

  const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
  std::uint64_t rhs() const noexcept { return b_; }
  std::uint64_t modulus() const noexcept { return n_; }
  const SymSystem& constraint() const noexcept { return constraint_; }
  unsigned arity() const noexcept { return constraint_.arity(); }

  bool unit_coefficients() const noexcept;

  CongruenceProblem with_rhs(std::int64_t b) const;

 private:
  std::vector<std::uint64_t> coeffs_;
  std::uint64_t b_;
  std::uint64_t n_;
  SymSystem constraint_;
};

/// Exhaustive count over Z_n^k.
ZeroCount count_bruteforce(const CongruenceProblem& prob, const Budget& budget = {});

/// Counts for every right-hand side b in [0, n) in a single sweep; entry b is
/// count_bruteforce(prob.with_rhs(b)).
std::vector<std::uint64_t> count_bruteforce_by_rhs(const CongruenceProblem& prob,
                                                   const Budget& budget = {});

/// Same problem with b replaced by gcd(b, n) (b = 0 stays 0). The count is
/// unchanged because the constraints are homogeneous.
CongruenceProblem reduce_rhs(const CongruenceProblem& prob);

/// g_k(b, n) = phi_{F'}(n) / phi(n), F' = J plus the linear form, for
/// gcd(b, n) = 1. Unit coefficients reuse the symmetric totient machinery
/// (F' = J u {1}); other coefficients count F' per prime over F_p^k.
/// Throws InvalidArgument when gcd(b, n) != 1 and InvariantViolation if the
/// quotient is not exact.
ZeroCount count_unit_rhs(const CongruenceProblem& prob, const Budget& budget = {});

/// Unit triples mod p^a with a + b + c = 0 and ab + bc + ca = 0 (mod p).
ZeroCount psi(std::uint64_t p, unsigned a);

/// g_3(m, n): x_1 + x_2 + x_3 = m with e_2, e_3 coprime to n. gcd(m, n) = 1.
ZeroCount g3_closed(std::int64_t m, std::uint64_t n);

/// g_4(m, n): x_1 + ... + x_4 = m with e_3, e_4 coprime to n. gcd(m, n) = 1.
/// Zero for even n.
ZeroCount g4_closed(std::int64_t m, std::uint64_t n);

/// g_k(1, n) c(m, n): the exponential sum of exp(2 pi i m e_1(x) / n) over
/// constrained tuples whose e_1 is a unit.
BigInt generalized_ramanujan(std::int64_t m, std::uint64_t n, const SymSystem& constraint,
                             const Budget& budget = {});

/// The defining exponential sum, evaluated in floating point.
std::complex<double> generalized_ramanujan_direct(std::int64_t m, std::uint64_t n,
                                                  const SymSystem& constraint,
                                                  const Budget& budget = {});

}  // namespace symtot
