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
#include "symtot/zeros.hpp"

#include <string>

#include "symtot/arith.hpp"
#include "symtot/detail/enumerate.hpp"
#include "symtot/errors.hpp"

namespace symtot {
namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
}

// sum of C(k, j) over j in [0, k] accepted by keep(j).
template <class Pred>
ZeroCount sieved_binomial_sum(unsigned k, Pred keep) {
  ZeroCount sum = 0;
  for (unsigned j = 0; j <= k; ++j)
    if (keep(j)) sum += binomial(k, j);
  return sum;
}

int eta(std::int64_t a, std::uint64_t p) { return to_int(quadratic_character(a, p)); }

std::int64_t minus_one_pow(unsigned e) { return e % 2 == 0 ? 1 : -1; }

struct NoClosedForm {};

}  // namespace

ZeroCount count_zeros_bruteforce(const SymSystem& sys, std::uint64_t p,
                                 const Budget& budget) {
  require_prime(p);
  const auto& J = sys.indices();
  return detail::reduce_tuples<std::uint64_t>(
      sys.arity(), p, sys.max_index(), budget, 0,
      [&](std::span<const std::uint64_t>, std::span<const std::uint64_t> e,
          std::uint64_t& acc) {
        for (unsigned j : J)
          if (e[j] != 0) return;
        ++acc;
      });
}

ZeroCount closed_N_e2(unsigned k, std::uint64_t p) {
  if (k < 2) throw InvalidArgument("N_k(e_2, p) needs k >= 2");
  require_prime(p);
  if (p == 2)
    return sieved_binomial_sum(k, [](unsigned j) { return j % 4 == 0 || j % 4 == 1; });

  // The e_2 matrix has determinant (-1)^{k-1} 2^{-k} (k - 1); it is singular
  // exactly when k = 1 (mod p), with a one-dimensional radical.
  const bool degenerate = (k - 1) % p == 0;
  const ZeroCount main = ipow(p, k - 1);
  if (k % 2 == 1) {
    if (!degenerate) return main;
    return main + (p - 1) * ipow(p, (k - 1) / 2) * eta(minus_one_pow((k - 1) / 2), p);
  }
  if (degenerate) return main;
  return main + (p - 1) * ipow(p, (k - 2) / 2) *
                    eta(minus_one_pow(k / 2 + 1) * static_cast<std::int64_t>(k - 1), p);
}

ZeroCount closed_N_e1e2(unsigned k, std::uint64_t p) {
  if (k < 2) throw InvalidArgument("N_k(e_1, e_2, p) needs k >= 2");
  require_prime(p);
  if (p == 2) return sieved_binomial_sum(k, [](unsigned j) { return j % 4 == 0; });

  // On e_1 = 0 the system reduces to a form in k - 1 variables with
  // determinant 2^{1-k} k; singular exactly when p | k.
  const bool degenerate = k % p == 0;
  const ZeroCount main = ipow(p, k - 2);
  if (k % 2 == 1) {
    if (degenerate) return main;
    return main + (p - 1) * ipow(p, (k - 3) / 2) *
                      eta(minus_one_pow((k - 1) / 2) * static_cast<std::int64_t>(k), p);
  }
  if (!degenerate) return main;
  return main + (p - 1) * ipow(p, (k - 2) / 2) * eta(minus_one_pow(k / 2), p);
}

ZeroCount closed_N_el_mod2(unsigned l, unsigned k) {
  if (l < 1 || l > k)
    throw InvalidArgument("N_k(e_l, 2) needs 1 <= l <= k, got l=" + std::to_string(l) +
                          " k=" + std::to_string(k));
  return sieved_binomial_sum(k, [l](unsigned j) { return binom_mod2(j, l) == 0; });
}

ZeroCount count_zeros_mod2(const SymSystem& sys) {
  const auto& J = sys.indices();
  return sieved_binomial_sum(sys.arity(), [&](unsigned j) {
    for (unsigned l : J)
      if (binom_mod2(j, l) != 0) return false;
    return true;
  });
}

ZeroCount extend_with_ek(const SymSystem& base, std::uint64_t p,
                         const ZeroCounter& base_counter) {
  const unsigned k = base.arity();
  if (base.contains(k))
    throw InvalidArgument("extend_with_ek: J already contains k = " + std::to_string(k));
  require_prime(p);

  // Zeroing j coordinates leaves e_i of the other k - j, and e_i vanishes
  // identically once i > k - j.
  BigInt sum = 0;
  for (unsigned j = 1; j <= k; ++j) {
    const unsigned rest = k - j;
    ZeroCount inner;
    if (rest == 0) {
      inner = 1;
    } else {
      std::vector<unsigned> kept;
      for (unsigned i : base.indices())
        if (i <= rest) kept.push_back(i);
      if (kept.empty()) {
        inner = ipow(p, rest);
      } else {
        inner = base_counter(SymSystem(rest, std::move(kept)), p);
      }
    }
    const BigInt term = binomial(k, j) * inner;
    if (j % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

std::optional<ZeroCount> closed_zero_count(const SymSystem& sys, std::uint64_t p) {
  require_prime(p);
  const unsigned k = sys.arity();
  const auto& J = sys.indices();
  if (J.empty()) return ipow(p, k);
  if (p == 2) return count_zeros_mod2(sys);
  if (sys.is_full()) return ZeroCount(1);
  if (J == std::vector<unsigned>{1}) return ipow(p, k - 1);
  if (J == std::vector<unsigned>{2}) return closed_N_e2(k, p);
  if (J == std::vector<unsigned>{1, 2}) return closed_N_e1e2(k, p);
  if (sys.contains(k)) {
    std::vector<unsigned> rest(J.begin(), J.end() - 1);
    try {
      return extend_with_ek(SymSystem(k, std::move(rest)), p,
                            [](const SymSystem& inner, std::uint64_t q) {
                              auto value = closed_zero_count(inner, q);
                              if (!value) throw NoClosedForm{};
                              return *value;
                            });
    } catch (const NoClosedForm&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

ZeroCountResult count_zeros(const SymSystem& sys, std::uint64_t p, const Budget& budget) {
  if (auto closed = closed_zero_count(sys, p)) return {std::move(*closed), CountMethod::Closed};
  return {count_zeros_bruteforce(sys, p, budget), CountMethod::BruteForce};
}

}  // namespace symtot
