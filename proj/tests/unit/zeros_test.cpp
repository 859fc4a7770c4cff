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

#include <cmath>
#include <numbers>
#include <numeric>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "symtot/arith.hpp"
#include "symtot/errors.hpp"
#include "symtot/quadratic_form.hpp"

namespace symtot {
namespace {

std::vector<std::vector<unsigned>> all_subsets(unsigned k) {
  std::vector<std::vector<unsigned>> out;
  for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
    std::vector<unsigned> s;
    for (unsigned i = 0; i < k; ++i)
      if (mask & (1U << i)) s.push_back(i + 1);
    out.push_back(s);
  }
  return out;
}

int eta(std::int64_t a, std::uint64_t p) { return to_int(quadratic_character(a, p)); }

// The single-line statements with gcd terms, as opposed to the
// degenerate/non-degenerate split the library uses.
BigInt merged_N_e2(unsigned k, std::uint64_t p) {
  const auto pp = static_cast<std::int64_t>(p);
  if (k % 2 == 1) {
    const std::int64_t g = static_cast<std::int64_t>(std::gcd<std::uint64_t>(k - 1, p));
    const std::int64_t sign = ((k - 1) / 2) % 2 == 0 ? 1 : -1;
    return ipow(p, k - 1) + (pp - 1) * ipow(p, (k - 1) / 2) * eta(sign * (1 - g), p);
  }
  const std::int64_t sign = (k / 2 + 1) % 2 == 0 ? 1 : -1;
  return ipow(p, k - 1) +
         (pp - 1) * ipow(p, (k - 2) / 2) * eta(sign * static_cast<std::int64_t>(k - 1), p);
}

BigInt merged_N_e1e2(unsigned k, std::uint64_t p) {
  const auto pp = static_cast<std::int64_t>(p);
  if (k % 2 == 1) {
    const std::int64_t sign = ((k - 1) / 2) % 2 == 0 ? 1 : -1;
    return ipow(p, k - 2) +
           (pp - 1) * ipow(p, (k - 3) / 2) * eta(sign * static_cast<std::int64_t>(k), p);
  }
  const std::int64_t g = static_cast<std::int64_t>(std::gcd<std::uint64_t>(k, p));
  const std::int64_t sign = (k / 2) % 2 == 0 ? 1 : -1;
  return ipow(p, k - 2) + (pp - 1) * ipow(p, (k - 2) / 2) * eta(sign * (1 - g), p);
}

TEST(CountZerosBruteforce, Examples) {
  EXPECT_EQ(count_zeros_bruteforce(SymSystem(2, {2}), 3), 5);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL})
    EXPECT_EQ(count_zeros_bruteforce(SymSystem(1, {1}), p), 1);
  EXPECT_EQ(count_zeros_bruteforce(SymSystem(3, {1, 2, 3}), 5), 1);
  EXPECT_THROW(count_zeros_bruteforce(SymSystem(2, {1}), 4), InvalidArgument);
  EXPECT_THROW(count_zeros_bruteforce(SymSystem(6, {1}), 31, Budget{1000}), BudgetExceeded);
}

TEST(CountZerosBruteforce, MatchesNaiveOracle) {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    for (unsigned k = 1; k <= 4; ++k) {
      for (const auto& J : all_subsets(k)) {
        const ZeroCount got = count_zeros_bruteforce(SymSystem(k, J), p);
        ASSERT_EQ(got, testing::naive_zeros(k, J, p))
            << "p=" << p << " k=" << k << " J=" << format_indices(J);
        ASSERT_LE(got, ipow(p, k));
      }
    }
  }
}

TEST(ClosedNe2, Examples) {
  EXPECT_EQ(closed_N_e2(2, 3), 5);
  EXPECT_EQ(closed_N_e2(3, 5), 25);
  EXPECT_EQ(closed_N_e2(3, 2), 4);
  EXPECT_EQ(closed_N_e2(4, 3), 27);
  EXPECT_THROW(closed_N_e2(1, 3), InvalidArgument);
  EXPECT_THROW(closed_N_e2(3, 9), InvalidArgument);
}

TEST(ClosedNe1e2, Examples) {
  EXPECT_EQ(closed_N_e1e2(2, 3), 1);
  EXPECT_EQ(closed_N_e1e2(3, 5), 1);
  EXPECT_EQ(closed_N_e1e2(2, 2), 1);
  EXPECT_THROW(closed_N_e1e2(1, 5), InvalidArgument);
}

TEST(ClosedNe2, MergedStatementsAgreeWithCaseSplit) {
  for (std::uint64_t p = 3; p <= 31; p += 2) {
    if (!is_prime(p)) continue;
    for (unsigned k = 2; k <= 40; ++k) {
      ASSERT_EQ(closed_N_e2(k, p), merged_N_e2(k, p)) << "k=" << k << " p=" << p;
      ASSERT_EQ(closed_N_e1e2(k, p), merged_N_e1e2(k, p)) << "k=" << k << " p=" << p;
    }
  }
}

TEST(ClosedNe2, DegeneratePathMatchesQuadraticFormCount) {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL}) {
    for (unsigned k = 2; k <= 23; ++k) {
      ASSERT_EQ(closed_N_e2(k, p), quad_form_count(e2_form(k, p), 0)) << k << "," << p;
      ASSERT_EQ(closed_N_e1e2(k, p), quad_form_count(e1e2_reduced_form(k, p), 0)) << k << "," << p;
    }
  }
}

TEST(ClosedModTwo, Examples) {
  EXPECT_EQ(closed_N_el_mod2(1, 3), 4);
  EXPECT_EQ(closed_N_el_mod2(3, 3), 7);
  for (unsigned k = 1; k <= 12; ++k) EXPECT_EQ(closed_N_el_mod2(k, k), ipow(2, k) - 1);
  EXPECT_THROW(closed_N_el_mod2(0, 3), InvalidArgument);
  EXPECT_THROW(closed_N_el_mod2(4, 3), InvalidArgument);
}

TEST(ClosedModTwo, TrigonometricFormsAgree) {
  const double r2 = std::sqrt(2.0);
  const double pi = std::numbers::pi;
  for (unsigned k = 2; k <= 30; ++k) {
    const double kk = k;
    const double e2 = (std::pow(2.0, kk + 1) + 2 * std::pow(r2, kk + 1) * std::cos(pi / 4 - kk * pi / 4)) / 4;
    const double e1e2 = (std::pow(2.0, kk) + 2 * std::pow(r2, kk) * std::cos(kk * pi / 4)) / 4;
    const double e3 = (3 * std::pow(2.0, kk) + 2 * std::pow(r2, kk) * std::sin(kk * pi / 4)) / 4;
    EXPECT_EQ(closed_N_e2(k, 2), static_cast<long long>(std::llround(e2))) << k;
    EXPECT_EQ(closed_N_e1e2(k, 2), static_cast<long long>(std::llround(e1e2))) << k;
    if (k >= 3) EXPECT_EQ(closed_N_el_mod2(3, k), static_cast<long long>(std::llround(e3))) << k;
  }
}

TEST(ExtendWithEk, Examples) {
  const ZeroCounter closed = [](const SymSystem& s, std::uint64_t p) {
    return *closed_zero_count(s, p);
  };
  EXPECT_EQ(extend_with_ek(SymSystem(3, {2}), 3, closed), 7);
  EXPECT_EQ(extend_with_ek(SymSystem(3, {2}), 2, closed), 4);
  for (unsigned k = 2; k <= 7; ++k) {
    std::vector<unsigned> below(k - 1);
    std::iota(below.begin(), below.end(), 1U);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL})
      EXPECT_EQ(extend_with_ek(SymSystem(k, below), p, closed), 1) << k << "," << p;
  }
  EXPECT_EQ(extend_with_ek(SymSystem(4, {}), 5, closed), 625 - 256);
  EXPECT_THROW(extend_with_ek(SymSystem(3, {3}), 3, closed), InvalidArgument);
}

TEST(ClosedZeroCount, DispatchMatchesOracleWheneverAvailable) {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    for (unsigned k = 1; k <= 4; ++k) {
      for (const auto& J : all_subsets(k)) {
        const SymSystem sys(k, J);
        const auto closed = closed_zero_count(sys, p);
        const auto expected = testing::naive_zeros(k, J, p);
        if (closed) ASSERT_EQ(*closed, expected) << "p=" << p << " k=" << k << " J=" << format_indices(J);
        const auto result = count_zeros(sys, p);
        ASSERT_EQ(result.value, expected);
        ASSERT_EQ(result.method == CountMethod::Closed, closed.has_value());
      }
    }
  }
  EXPECT_FALSE(closed_zero_count(SymSystem(4, {3}), 3).has_value());
  EXPECT_TRUE(closed_zero_count(SymSystem(4, {3}), 2).has_value());
  EXPECT_TRUE(closed_zero_count(SymSystem(4, {3, 4}), 3).has_value());
}

TEST(ClosedZeroCount, LargePrimesNeedNoEnumeration) {
  const std::uint64_t p = 1'000'000'007ULL;
  const auto result = count_zeros(SymSystem(5, {1, 2, 5}), p, Budget{1});
  EXPECT_EQ(result.method, CountMethod::Closed);
  EXPECT_LE(result.value, ipow(p, 5));
}

}  // namespace
}  // namespace symtot
