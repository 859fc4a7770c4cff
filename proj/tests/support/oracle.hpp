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
// Naive reference computations for tests. Deliberately independent of the
// library's incremental enumeration: every tuple is built from scratch and
// every e_j is expanded over explicit index subsets.
#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace symtot::testing {

/// e_j(x) mod m by summing the products over every j-subset of indices.
inline std::uint64_t naive_elem_sym(unsigned j, const std::vector<std::uint64_t>& x,
                                    std::uint64_t m) {
  const unsigned k = static_cast<unsigned>(x.size());
  std::uint64_t sum = 0;
  for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != j) continue;
    std::uint64_t prod = 1 % m;
    for (unsigned i = 0; i < k; ++i)
      if (mask & (1U << i)) prod = prod * (x[i] % m) % m;
    sum = (sum + prod) % m;
  }
  return sum;
}

/// Calls fn(x) for every x in Z_m^k, decoding a flat counter each time.
template <class Fn>
void for_each_tuple(unsigned k, std::uint64_t m, Fn fn) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < k; ++i) total *= m;
  std::vector<std::uint64_t> x(k);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < k; ++i) {
      x[i] = c % m;
      c /= m;
    }
    fn(x);
  }
}

/// Tuples of Z_n^k where the e_j (j in J) meet the gcd condition: joint
/// (gcd of all values with n is 1) or individual (each value a unit).
inline std::uint64_t naive_totient(unsigned k, const std::vector<unsigned>& J,
                                   std::uint64_t n, bool joint) {
  if (J.empty()) return 0;
  std::uint64_t count = 0;
  for_each_tuple(k, n, [&](const std::vector<std::uint64_t>& x) {
    bool ok = true;
    std::uint64_t g = n;
    for (unsigned j : J) {
      const std::uint64_t v = naive_elem_sym(j, x, n);
      g = std::gcd(g, v);
      if (std::gcd(v, n) != 1) ok = false;
    }
    count += joint ? (g == 1) : ok;
  });
  return count;
}

/// Simultaneous zeros of e_j (j in J) over F_p^k.
inline std::uint64_t naive_zeros(unsigned k, const std::vector<unsigned>& J, std::uint64_t p) {
  std::uint64_t count = 0;
  for_each_tuple(k, p, [&](const std::vector<std::uint64_t>& x) {
    for (unsigned j : J)
      if (naive_elem_sym(j, x, p) != 0) return;
    ++count;
  });
  return count;
}

}  // namespace symtot::testing
