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

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "symtot/bigint.hpp"

namespace symtot {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive integer: primes strictly increasing,
/// every exponent >= 1, empty for n = 1.
struct Factorization {
  std::vector<PrimePower> factors;

  /// Product of prime^exponent; the n the factorization was computed from.
  std::uint64_t value() const;

  bool empty() const noexcept { return factors.empty(); }
  auto begin() const noexcept { return factors.begin(); }
  auto end() const noexcept { return factors.end(); }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Trial division up to 10^6, then Pollard-rho (Brent) with a deterministic
/// Miller-Rabin test. Throws InvalidArgument for n = 0.
Factorization factorize(std::uint64_t n);

/// Deterministic for every 64-bit input (witnesses 2..37).
bool is_prime(std::uint64_t n) noexcept;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// Canonical residue of a signed value in [0, m).
std::uint64_t reduce_mod(std::int64_t a, std::uint64_t m) noexcept;

/// Inverse of a modulo m; throws InvalidArgument when gcd(a, m) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

/// Quadratic character of F_p with eta(0) = 0.
enum class QuadChar : int { NonResidue = -1, Zero = 0, Residue = 1 };

constexpr int to_int(QuadChar c) noexcept { return static_cast<int>(c); }

/// eta(a) for an odd prime p, via Euler's criterion. Throws InvalidArgument
/// when p is 2 or composite.
QuadChar quadratic_character(std::int64_t a, std::uint64_t p);

/// p - 1 when b = 0 (mod p), -1 otherwise.
std::int64_t nu(std::int64_t b, std::uint64_t p);

/// C(j, l) mod 2. By Lucas, odd exactly when l is a submask of j.
constexpr unsigned binom_mod2(std::uint64_t j, std::uint64_t l) noexcept {
  return (j & l) == l ? 1U : 0U;
}

/// Exact binomial coefficient; 0 when l > j.
BigInt binomial(unsigned j, unsigned l);

std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(const Factorization& f);

int moebius(std::uint64_t n);
BigInt euler_phi(std::uint64_t n);
BigInt jordan_totient(unsigned k, std::uint64_t n);
std::uint64_t divisor_count(std::uint64_t n);

/// A total map from positive integers to integers.
using ArithmeticFn = std::function<BigInt(std::uint64_t)>;

/// (mu * f)(d) = sum over e | d of mu(d / e) f(e).
BigInt dirichlet_convolve_mu(const ArithmeticFn& f, std::uint64_t d);

/// c(m, n) via the divisor formula sum over d | gcd(m, n) of d mu(n / d).
/// gcd(0, n) = n, so c(0, n) = phi(n).
BigInt ramanujan_sum(std::int64_t m, std::uint64_t n);

}  // namespace symtot
