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
#include "symtot/totient.hpp"

#include <numeric>
#include <string>

#include "symtot/detail/enumerate.hpp"
#include "symtot/errors.hpp"
#include "symtot/zeros.hpp"

namespace symtot {
namespace {

std::vector<std::uint64_t> gcd_table(std::uint64_t n) {
  std::vector<std::uint64_t> table(n);
  for (std::uint64_t r = 0; r < n; ++r) table[r] = std::gcd(r, n);
  return table;
}

// Tuples of Z_n^k whose constrained e_j are individually units mod n.
template <class Acc, class OnMatch>
Acc reduce_individual(const SymSystem& sys, std::uint64_t n, unsigned degree,
                      const Budget& budget, const Acc& zero, OnMatch on_match) {
  const auto gcds = gcd_table(n);
  const auto& J = sys.indices();
  return detail::reduce_tuples<Acc>(
      sys.arity(), n, degree, budget, zero,
      [&](std::span<const std::uint64_t> x, std::span<const std::uint64_t> e, Acc& acc) {
        for (unsigned j : J)
          if (gcds[e[j]] != 1) return;
        on_match(x, e, acc);
      });
}

std::string prime_context(std::uint64_t p) {
  return " (needed for N_F(p) at prime p = " + std::to_string(p) + ")";
}

}  // namespace

ZeroCount varphi_prime_power(const SymSystem& sys, std::uint64_t p, unsigned a,
                             const Budget& budget) {
  if (sys.empty()) return 0;
  const unsigned k = sys.arity();
  ZeroCount zeros;
  try {
    zeros = count_zeros(sys, p, budget).value;
  } catch (const BudgetExceeded& err) {
    throw BudgetExceeded(err.what() + prime_context(p), err.modulus(), err.arity(), err.cap());
  }
  return ipow(p, k * (a - 1)) * (ipow(p, k) - zeros);
}

ZeroCount phi_prime_power(const SymSystem& sys, std::uint64_t p, unsigned a,
                          const Budget& budget) {
  if (sys.empty()) return 0;
  const auto& J = sys.indices();
  if (J.size() > 20) throw InvalidArgument("phi: |J| > 20 is not supported");
  // Inclusion-exclusion over the zero sets of the individual e_j.
  BigInt sum = 0;
  for (std::uint32_t mask = 1; mask < (1U << J.size()); ++mask) {
    std::vector<unsigned> subset;
    for (std::size_t i = 0; i < J.size(); ++i)
      if (mask & (1U << i)) subset.push_back(J[i]);
    const bool odd = subset.size() % 2 == 1;
    const ZeroCount term = varphi_prime_power(SymSystem(sys.arity(), std::move(subset)), p, a, budget);
    if (odd) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

ZeroCount varphi(const SymSystem& sys, std::uint64_t n, const Budget& budget) {
  if (sys.empty()) return 0;
  ZeroCount result = 1;
  for (const auto& [p, a] : factorize(n)) result *= varphi_prime_power(sys, p, a, budget);
  return result;
}

ZeroCount phi(const SymSystem& sys, std::uint64_t n, const Budget& budget) {
  if (sys.empty()) return 0;
  ZeroCount result = 1;
  for (const auto& [p, a] : factorize(n)) result *= phi_prime_power(sys, p, a, budget);
  return result;
}

ZeroCount totient(const TotientSpec& spec, const Budget& budget) {
  return spec.system.mode() == GcdMode::Joint ? varphi(spec.system, spec.n, budget)
                                              : phi(spec.system, spec.n, budget);
}

ZeroCount varphi_bruteforce(const SymSystem& sys, std::uint64_t n, const Budget& budget) {
  if (sys.empty()) return 0;
  if (n == 0) throw InvalidArgument("modulus must be >= 1");
  const auto& J = sys.indices();
  return detail::reduce_tuples<std::uint64_t>(
      sys.arity(), n, sys.max_index(), budget, 0,
      [&](std::span<const std::uint64_t>, std::span<const std::uint64_t> e,
          std::uint64_t& acc) {
        std::uint64_t g = n;
        for (unsigned j : J) g = std::gcd(g, e[j]);
        acc += g == 1;
      });
}

ZeroCount phi_bruteforce(const SymSystem& sys, std::uint64_t n, const Budget& budget) {
  if (sys.empty()) return 0;
  if (n == 0) throw InvalidArgument("modulus must be >= 1");
  return reduce_individual<std::uint64_t>(
      sys, n, sys.max_index(), budget, 0,
      [](std::span<const std::uint64_t>, std::span<const std::uint64_t>,
         std::uint64_t& acc) { ++acc; });
}

ZeroCount totient_bruteforce(const TotientSpec& spec, const Budget& budget) {
  return spec.system.mode() == GcdMode::Joint ? varphi_bruteforce(spec.system, spec.n, budget)
                                              : phi_bruteforce(spec.system, spec.n, budget);
}

ZeroCount closed_phi_12(unsigned k, std::uint64_t n) {
  if (k < 2) throw InvalidArgument("phi_{1,2} needs k >= 2");
  ZeroCount result = 1;
  for (const auto& [p, a] : factorize(n)) {
    const BigInt local =
        ipow(p, k) - ipow(p, k - 1) + closed_N_e1e2(k, p) - closed_N_e2(k, p);
    result *= ipow(p, k * (a - 1)) * local;
  }
  return result;
}

std::uint64_t h3(std::uint64_t p) {
  if (p == 3) return 3;
  return p % 3 == 1 ? p - 1 : p + 1;
}

ZeroCount closed_phi_123(std::uint64_t n) {
  ZeroCount result = 1;
  for (const auto& [p, a] : factorize(n)) {
    const BigInt inner = BigInt(p) * p - 3 * BigInt(p) + 6 - h3(p);
    result *= ipow(p, 3 * (a - 1)) * (p - 1) * inner;
  }
  return result;
}

ZeroCount toth_phi_1k(unsigned k, std::uint64_t n) {
  if (k < 2) throw InvalidArgument("phi_{1,k} needs k >= 2");
  ZeroCount result = 1;
  for (const auto& [p, a] : factorize(n)) {
    const BigInt sign = k % 2 == 0 ? 1 : -1;
    const BigInt numerator = (p - 1) * (ipow(p - 1, k) - sign);
    if (numerator % p != 0)
      throw InvariantViolation("phi_{1,k}: local factor not divisible by p = " + std::to_string(p));
    result *= ipow(p, k * (a - 1)) * (numerator / p);
  }
  return result;
}

BigInt menon_lhs(std::uint64_t n, const SymSystem& sys, const ArithmeticFn& f,
                 const Budget& budget) {
  if (!sys.contains(1)) throw InvalidArgument("Menon identity needs 1 in J");
  if (n == 0) throw InvalidArgument("modulus must be >= 1");
  const auto gcds = gcd_table(n);
  const auto counts = reduce_individual<detail::Histogram>(
      sys, n, sys.max_index(), budget, detail::Histogram(n + 1),
      [&](std::span<const std::uint64_t>, std::span<const std::uint64_t> e,
          detail::Histogram& acc) { ++acc.bins[gcds[(e[1] + n - 1) % n]]; });
  BigInt sum = 0;
  for (std::uint64_t g = 1; g <= n; ++g)
    if (counts.bins[g] != 0) sum += BigInt(counts.bins[g]) * f(g);
  return sum;
}

BigInt menon_rhs(std::uint64_t n, const SymSystem& sys, const ArithmeticFn& f,
                 const Budget& budget) {
  if (!sys.contains(1)) throw InvalidArgument("Menon identity needs 1 in J");
  Rational divisor_sum = 0;
  for (std::uint64_t d : divisors(n))
    divisor_sum += Rational(dirichlet_convolve_mu(f, d), euler_phi(d));
  const Rational value = divisor_sum * Rational(phi(sys, n, budget));
  if (denominator(value) != 1)
    throw InvariantViolation("Menon right-hand side is not an integer at n = " + std::to_string(n));
  return numerator(value);
}

}  // namespace symtot
