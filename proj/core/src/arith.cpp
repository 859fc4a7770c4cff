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
#include "symtot/arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "symtot/errors.hpp"

namespace symtot {

__extension__ using Uint128 = unsigned __int128;

std::uint64_t Factorization::value() const {
  std::uint64_t n = 1;
  for (const auto& [p, e] : factors)
    for (unsigned i = 0; i < e; ++i) n *= p;
  return n;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<Uint128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce_mod(std::int64_t a, std::uint64_t m) noexcept {
  if (a >= 0) return static_cast<std::uint64_t>(a) % m;
  // -(a + 1) avoids overflow at INT64_MIN.
  const std::uint64_t r = static_cast<std::uint64_t>(-(a + 1)) % m;
  return m - 1 - r;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1)
    throw InvalidArgument(std::to_string(a) + " is not invertible mod " + std::to_string(m));
  return reduce_mod(old_s, m);
}

QuadChar quadratic_character(std::int64_t a, std::uint64_t p) {
  if (p == 2 || !is_prime(p))
    throw InvalidArgument("quadratic character needs an odd prime, got " + std::to_string(p));
  const std::uint64_t r = reduce_mod(a, p);
  if (r == 0) return QuadChar::Zero;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? QuadChar::Residue : QuadChar::NonResidue;
}

std::int64_t nu(std::int64_t b, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument("nu needs a prime, got " + std::to_string(p));
  return reduce_mod(b, p) == 0 ? static_cast<std::int64_t>(p) - 1 : -1;
}

BigInt binomial(unsigned j, unsigned l) {
  if (l > j) return 0;
  l = std::min(l, j - l);
  BigInt result = 1;
  for (unsigned i = 1; i <= l; ++i) {
    result *= j - l + i;
    result /= i;
  }
  return result;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t t = 0; t < base; ++t) out.push_back(out[t] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) { return divisors(factorize(n)); }

int moebius(std::uint64_t n) {
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

BigInt jordan_totient(unsigned k, std::uint64_t n) {
  if (k == 0) throw InvalidArgument("Jordan totient needs k >= 1");
  BigInt result = 1;
  for (const auto& [p, e] : factorize(n))
    result *= ipow(p, k * (e - 1)) * (ipow(p, k) - 1);
  return result;
}

BigInt euler_phi(std::uint64_t n) { return jordan_totient(1, n); }

std::uint64_t divisor_count(std::uint64_t n) {
  std::uint64_t count = 1;
  for (const auto& [p, e] : factorize(n)) count *= e + 1;
  return count;
}

BigInt dirichlet_convolve_mu(const ArithmeticFn& f, std::uint64_t d) {
  if (d == 0) throw InvalidArgument("Dirichlet convolution is defined for d >= 1");
  BigInt sum = 0;
  for (std::uint64_t e : divisors(d)) {
    const int mu = moebius(d / e);
    if (mu != 0) sum += mu * f(e);
  }
  return sum;
}

BigInt ramanujan_sum(std::int64_t m, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("Ramanujan sum needs n >= 1");
  const std::uint64_t g = std::gcd(reduce_mod(m, n), n);
  BigInt sum = 0;
  for (std::uint64_t d : divisors(g)) {
    const int mu = moebius(n / d);
    if (mu != 0) sum += BigInt(d) * mu;
  }
  return sum;
}

}  // namespace symtot
