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
#include <vector>

#include "symtot/bigint.hpp"
#include "symtot/budget.hpp"

namespace symtot {

/// x -> x^T A x over F_p for a symmetric k x k matrix A, p an odd prime.
class QuadraticForm {
 public:
  /// Row-major entries, reduced mod p. Throws InvalidArgument unless p is an
  /// odd prime, entries.size() == k*k, k >= 1, and A is symmetric mod p.
  QuadraticForm(std::uint64_t p, unsigned k, std::span<const std::int64_t> entries);

  std::uint64_t prime() const noexcept { return p_; }
  unsigned arity() const noexcept { return k_; }
  std::uint64_t at(unsigned i, unsigned j) const noexcept { return a_[i * k_ + j]; }

  std::uint64_t evaluate(std::span<const std::uint64_t> x) const noexcept;

  /// det(A) mod p by Gaussian elimination.
  std::uint64_t determinant() const;

  /// Diagonal of a form congruent to this one (P^T A P for invertible P).
  /// Zeros on the diagonal span the radical; their count is the nullity.
  std::vector<std::uint64_t> congruent_diagonal() const;

  unsigned rank() const;

 private:
  std::uint64_t p_;
  unsigned k_;
  std::vector<std::uint64_t> a_;
};

/// Number of x in F_p^k with f(x) = b. Non-degenerate forms use the
/// closed two-branch count in eta(Delta); a degenerate form of nullity r
/// counts as p^r times the count of its non-degenerate quotient; the zero
/// form gives p^k at b = 0 and 0 elsewhere.
ZeroCount quad_form_count(const QuadraticForm& form, std::int64_t b);

/// Same count by exhaustive enumeration of F_p^k.
ZeroCount quad_form_count_bruteforce(const QuadraticForm& form, std::int64_t b,
                                     const Budget& budget = {});

/// Matrix of e_2(x_1..x_k): 0 on the diagonal, 2^{-1} elsewhere.
QuadraticForm e2_form(unsigned k, std::uint64_t p);

/// e_2 restricted to the hyperplane e_1 = 0, in the coordinates
/// x_1..x_{k-1}: it equals -(sum x_i^2 + e_2(x_1..x_{k-1})); this returns
/// the bracketed form (1 on the diagonal, 2^{-1} elsewhere, size k-1).
QuadraticForm e1e2_reduced_form(unsigned k, std::uint64_t p);

}  // namespace symtot
