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

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "symtot/errors.hpp"

namespace symtot {
namespace {

TEST(Factorize, SmallExamples) {
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(12).factors, (std::vector<PrimePower>{{2, 2}, {3, 1}}));
  EXPECT_THROW(factorize(0), InvalidArgument);
}

TEST(Factorize, LargePrimeMatchesTrialDivision) {
  constexpr std::uint64_t n = 9999999967ULL;
  bool composite = false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) composite = true;
  ASSERT_FALSE(composite);
  EXPECT_EQ(factorize(n).factors, (std::vector<PrimePower>{{n, 1}}));
}

TEST(Factorize, PollardRhoBeyondTrialRange) {
  constexpr std::uint64_t p = 2147483647ULL;  // 2^31 - 1
  constexpr std::uint64_t q = 4294967291ULL;  // largest prime below 2^32
  EXPECT_EQ(factorize(p * q).factors, (std::vector<PrimePower>{{p, 1}, {q, 1}}));
  EXPECT_EQ(factorize(q * q).factors, (std::vector<PrimePower>{{q, 2}}));
  EXPECT_EQ(factorize(8 * 1000003ULL * 1000003ULL).factors,
            (std::vector<PrimePower>{{2, 3}, {1000003, 2}}));
  EXPECT_TRUE(is_prime((1ULL << 61) - 1));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Factorize, RoundTripUpToOneMillion) {
  for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
    const Factorization f = factorize(n);
    ASSERT_EQ(f.value(), n);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      ASSERT_GE(f.factors[i].exponent, 1U);
      if (i > 0) ASSERT_LT(f.factors[i - 1].prime, f.factors[i].prime);
    }
  }
}

TEST(QuadraticCharacter, Examples) {
  EXPECT_EQ(quadratic_character(1, 5), QuadChar::Residue);
  EXPECT_EQ(quadratic_character(0, 7), QuadChar::Zero);
  EXPECT_EQ(quadratic_character(2, 5), QuadChar::NonResidue);
  EXPECT_EQ(quadratic_character(-1, 5), QuadChar::Residue);
  EXPECT_EQ(quadratic_character(-1, 7), QuadChar::NonResidue);
  EXPECT_THROW(quadratic_character(1, 2), InvalidArgument);
  EXPECT_THROW(quadratic_character(1, 9), InvalidArgument);
}

TEST(QuadraticCharacter, MatchesEnumeratedSquares) {
  for (std::uint64_t p = 3; p <= 100; p += 2) {
    if (!is_prime(p)) continue;
    std::set<std::uint64_t> squares;
    for (std::uint64_t x = 1; x < p; ++x) squares.insert(x * x % p);
    for (std::uint64_t a = 0; a < p; ++a) {
      const int expected = a == 0 ? 0 : (squares.count(a) ? 1 : -1);
      ASSERT_EQ(to_int(quadratic_character(static_cast<std::int64_t>(a), p)), expected)
          << "a=" << a << " p=" << p;
    }
  }
}

TEST(Nu, Values) {
  EXPECT_EQ(nu(0, 5), 4);
  EXPECT_EQ(nu(3, 5), -1);
  EXPECT_EQ(nu(10, 5), 4);
  EXPECT_THROW(nu(1, 6), InvalidArgument);
}

TEST(BinomMod2, Examples) {
  EXPECT_EQ(binom_mod2(3, 1), 1U);
  EXPECT_EQ(binom_mod2(4, 1), 0U);
  EXPECT_EQ(binom_mod2(5, 5), 1U);
}

TEST(BinomMod2, MatchesExactBinomials) {
  for (unsigned j = 0; j <= 64; ++j)
    for (unsigned l = 0; l <= 64; ++l)
      ASSERT_EQ(binom_mod2(j, l), static_cast<unsigned>(binomial(j, l) % 2)) << j << "," << l;
}

TEST(ClassicalTotients, Examples) {
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(jordan_totient(2, 6), 24);
  EXPECT_EQ(moebius(1), 1);
  EXPECT_EQ(moebius(30), -1);
  EXPECT_EQ(moebius(12), 0);
  EXPECT_EQ(divisor_count(12), 6U);
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
}

TEST(ClassicalTotients, JordanMatchesTupleCount) {
  for (unsigned k = 1; k <= 3; ++k) {
    for (std::uint64_t n = 1; n <= 30; ++n) {
      std::uint64_t count = 0;
      testing::for_each_tuple(k, n, [&](const std::vector<std::uint64_t>& x) {
        std::uint64_t g = n;
        for (std::uint64_t v : x) g = std::gcd(g, v);
        count += g == 1;
      });
      ASSERT_EQ(jordan_totient(k, n), count) << "k=" << k << " n=" << n;
    }
  }
}

TEST(DirichletConvolution, Examples) {
  const ArithmeticFn identity = [](std::uint64_t d) { return BigInt(d); };
  const ArithmeticFn one = [](std::uint64_t) { return BigInt(1); };
  EXPECT_EQ(dirichlet_convolve_mu(identity, 6), 2);
  EXPECT_EQ(dirichlet_convolve_mu(one, 1), 1);
  for (std::uint64_t n = 2; n <= 50; ++n) EXPECT_EQ(dirichlet_convolve_mu(one, n), 0);
  for (std::uint64_t n = 1; n <= 50; ++n) EXPECT_EQ(dirichlet_convolve_mu(identity, n), euler_phi(n));
}

TEST(RamanujanSum, Examples) {
  EXPECT_EQ(ramanujan_sum(0, 12), euler_phi(12));
  EXPECT_EQ(ramanujan_sum(1, 6), 1);
  EXPECT_EQ(ramanujan_sum(2, 4), -2);
  EXPECT_EQ(ramanujan_sum(-2, 4), -2);
}

TEST(RamanujanSum, MatchesExponentialSum) {
  for (std::uint64_t n = 1; n <= 50; ++n) {
    for (std::uint64_t m = 0; m < n; ++m) {
      std::complex<double> sum = 0;
      for (std::uint64_t a = 1; a <= n; ++a)
        if (std::gcd(a, n) == 1)
          sum += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(a * m % n) /
                                     static_cast<double>(n));
      const double rounded = std::round(sum.real());
      ASSERT_LT(std::abs(sum - rounded), 1e-6);
      ASSERT_EQ(ramanujan_sum(static_cast<std::int64_t>(m), n), static_cast<long>(rounded))
          << "m=" << m << " n=" << n;
    }
  }
}

TEST(ModularHelpers, InverseAndReduce) {
  EXPECT_EQ(reduce_mod(-1, 7), 6U);
  EXPECT_EQ(reduce_mod(-14, 7), 0U);
  EXPECT_EQ(inverse_mod(2, 7), 4U);
  EXPECT_THROW(inverse_mod(6, 9), InvalidArgument);
}

}  // namespace
}  // namespace symtot
