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
#include "symtot/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "symtot/arith.hpp"
#include "symtot/detail/enumerate.hpp"
#include "symtot/errors.hpp"
#include "symtot/totient.hpp"

namespace symtot {
namespace {

std::uint64_t linear_form(std::span<const std::uint64_t> coeffs,
                          std::span<const std::uint64_t> x, std::uint64_t m) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sum = (sum + coeffs[i] * x[i]) % m;
  return sum;
}

void require_unit(std::int64_t m, std::uint64_t n, const char* what) {
  if (n == 0) throw InvalidArgument("modulus must be >= 1");
  if (std::gcd(reduce_mod(m, n), n) != 1)
    throw InvalidArgument(std::string(what) + " requires gcd(m, n) = 1");
}

// Tuples mod n whose constrained e_j are all units; the visitor gets the
// linear form's value.
template <class Acc, class OnMatch>
Acc reduce_constrained(const CongruenceProblem& prob, std::uint64_t n, const Budget& budget,
                       const Acc& zero, OnMatch on_match) {
  std::vector<std::uint64_t> coeffs;
  for (std::uint64_t a : prob.coeffs()) coeffs.push_back(a % n);
  std::vector<std::uint64_t> gcds(n);
  for (std::uint64_t r = 0; r < n; ++r) gcds[r] = std::gcd(r, n);
  const auto& J = prob.constraint().indices();
  return detail::reduce_tuples<Acc>(
      prob.arity(), n, prob.constraint().max_index(), budget, zero,
      [&](std::span<const std::uint64_t> x, std::span<const std::uint64_t> e, Acc& acc) {
        for (unsigned j : J)
          if (gcds[e[j]] != 1) return;
        on_match(linear_form(coeffs, x, n), acc);
      });
}

}  // namespace

CongruenceProblem::CongruenceProblem(std::vector<std::int64_t> coeffs, std::int64_t b,
                                     std::uint64_t n, SymSystem constraint)
    : n_(n), constraint_(std::move(constraint)) {
  if (n == 0) throw InvalidArgument("modulus must be >= 1");
  if (coeffs.size() != constraint_.arity())
    throw InvalidArgument("expected " + std::to_string(constraint_.arity()) +
                          " coefficients, got " + std::to_string(coeffs.size()));
  if (n > std::numeric_limits<std::uint32_t>::max())
    throw InvalidArgument("congruence modulus must be below 2^32");
  for (std::int64_t a : coeffs) coeffs_.push_back(reduce_mod(a, n));
  b_ = reduce_mod(b, n);
}

bool CongruenceProblem::unit_coefficients() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [&](std::uint64_t a) { return a == 1 % n_; });
}

CongruenceProblem CongruenceProblem::with_rhs(std::int64_t b) const {
  CongruenceProblem copy = *this;
  copy.b_ = reduce_mod(b, n_);
  return copy;
}

ZeroCount count_bruteforce(const CongruenceProblem& prob, const Budget& budget) {
  const std::uint64_t b = prob.rhs();
  return reduce_constrained<std::uint64_t>(
      prob, prob.modulus(), budget, 0,
      [b](std::uint64_t value, std::uint64_t& acc) { acc += value == b; });
}

std::vector<std::uint64_t> count_bruteforce_by_rhs(const CongruenceProblem& prob,
                                                   const Budget& budget) {
  const std::uint64_t n = prob.modulus();
  return reduce_constrained<detail::Histogram>(
             prob, n, budget, detail::Histogram(n),
             [](std::uint64_t value, detail::Histogram& acc) { ++acc.bins[value]; })
      .bins;
}

CongruenceProblem reduce_rhs(const CongruenceProblem& prob) {
  const std::uint64_t n = prob.modulus();
  return prob.with_rhs(static_cast<std::int64_t>(std::gcd(prob.rhs(), n) % n));
}

ZeroCount count_unit_rhs(const CongruenceProblem& prob, const Budget& budget) {
  const std::uint64_t n = prob.modulus();
  if (std::gcd(prob.rhs(), n) != 1)
    throw InvalidArgument("count_unit_rhs requires gcd(b, n) = 1");
  const unsigned k = prob.arity();

  ZeroCount augmented;
  if (prob.unit_coefficients()) {
    std::vector<unsigned> J = prob.constraint().indices();
    if (!prob.constraint().contains(1)) J.push_back(1);
    augmented = phi(SymSystem(k, std::move(J), GcdMode::Individual), n, budget);
  } else {
    // F' mixes a general linear form with the e_j, so N_{F'}(p) is counted
    // over F_p^k; every condition depends on x mod p only.
    augmented = 1;
    for (const auto& [p, a] : factorize(n)) {
      std::vector<std::int64_t> coeffs;
      for (std::uint64_t c : prob.coeffs()) coeffs.push_back(static_cast<std::int64_t>(c % p));
      const CongruenceProblem local(std::move(coeffs), 0, p, prob.constraint());
      const std::uint64_t units = reduce_constrained<std::uint64_t>(
          local, p, budget, 0,
          [](std::uint64_t value, std::uint64_t& acc) { acc += value != 0; });
      augmented *= ipow(p, k * (a - 1)) * units;
    }
  }
  const BigInt units = euler_phi(n);
  if (augmented % units != 0)
    throw InvariantViolation("phi_{F'}(n) = " + augmented.str() + " is not divisible by phi(" +
                             std::to_string(n) + ")");
  return augmented / units;
}

ZeroCount psi(std::uint64_t p, unsigned a) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (a == 0) throw InvalidArgument("psi needs exponent >= 1");
  const BigInt lift = ipow(p, 3 * (a - 1));
  if (p == 3) return lift * (p - 1);
  if (p % 3 == 1) return 2 * lift * (p - 1);
  return 0;
}

ZeroCount g3_closed(std::int64_t m, std::uint64_t n) {
  require_unit(m, n, "g_3(m, n)");
  ZeroCount result = 1;
  for (const auto& [p, a] : factorize(n)) {
    const BigInt local = BigInt(p) * p - 3 * BigInt(p) + 6 - h3(p);
    result *= ipow(p, 2 * (a - 1)) * local;
  }
  return result;
}

ZeroCount g4_closed(std::int64_t m, std::uint64_t n) {
  require_unit(m, n, "g_4(m, n)");
  if (n % 2 == 0) return 0;
  ZeroCount result = 1;
  for (const auto& [p, a] : factorize(n)) {
    const BigInt q = p;
    result *= ipow(p, 3 * (a - 1)) * (q * q * q - 5 * q * q + 12 * q - 13);
  }
  return result;
}

BigInt generalized_ramanujan(std::int64_t m, std::uint64_t n, const SymSystem& constraint,
                             const Budget& budget) {
  const std::vector<std::int64_t> ones(constraint.arity(), 1);
  const CongruenceProblem unit_rhs(ones, 1, n, constraint.with_mode(GcdMode::Individual));
  return count_unit_rhs(unit_rhs, budget) * ramanujan_sum(m, n);
}

std::complex<double> generalized_ramanujan_direct(std::int64_t m, std::uint64_t n,
                                                  const SymSystem& constraint,
                                                  const Budget& budget) {
  const std::vector<std::int64_t> ones(constraint.arity(), 1);
  const CongruenceProblem prob(ones, 0, n, constraint.with_mode(GcdMode::Individual));
  const auto counts = count_bruteforce_by_rhs(prob, budget);
  const std::uint64_t mm = reduce_mod(m, n);
  std::complex<double> sum = 0;
  for (std::uint64_t r = 0; r < n; ++r) {
    if (counts[r] == 0 || std::gcd(r, n) != 1) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(mm * r % n) /
                         static_cast<double>(n);
    sum += static_cast<double>(counts[r]) * std::polar(1.0, angle);
  }
  return sum;
}

}  // namespace symtot
