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

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "symtot/errors.hpp"

namespace symtot {
namespace {

const ArithmeticFn kIdentity = [](std::uint64_t d) { return BigInt(d); };
const ArithmeticFn kOne = [](std::uint64_t) { return BigInt(1); };
const ArithmeticFn kTau = [](std::uint64_t d) { return BigInt(divisor_count(d)); };

std::vector<std::vector<unsigned>> nonempty_subsets(unsigned k) {
  std::vector<std::vector<unsigned>> out;
  for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
    std::vector<unsigned> s;
    for (unsigned i = 0; i < k; ++i)
      if (mask & (1U << i)) s.push_back(i + 1);
    out.push_back(s);
  }
  return out;
}

TEST(Varphi, Examples) {
  EXPECT_EQ(varphi(SymSystem(2, {2}), 3), 4);
  EXPECT_EQ(varphi(SymSystem(2, {1}), 9), 54);
  for (unsigned k = 1; k <= 4; ++k) {
    std::vector<unsigned> full(k);
    std::iota(full.begin(), full.end(), 1U);
    for (std::uint64_t n : {1ULL, 12ULL, 35ULL, 97ULL})
      EXPECT_EQ(varphi(SymSystem(k, full), n), jordan_totient(k, n));
  }
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi(SymSystem(2, {1, 2}), 9), 18);
  EXPECT_EQ(phi(SymSystem(2, {1, 2}), 2), 0);
  EXPECT_EQ(phi(SymSystem(3, {1, 2, 3}), 2), 1);
  EXPECT_EQ(totient({SymSystem(2, {1, 2}, GcdMode::Individual), 9}), 18);
  EXPECT_EQ(totient({SymSystem(2, {1, 2}, GcdMode::Joint), 9}), 72);
}

TEST(Conventions, EmptySystemAndUnitModulus) {
  EXPECT_EQ(varphi(SymSystem(2, {}), 5), 0);
  EXPECT_EQ(phi(SymSystem(2, {}), 1), 0);
  EXPECT_EQ(varphi_bruteforce(SymSystem(2, {}), 5), 0);
  EXPECT_EQ(phi_bruteforce(SymSystem(2, {2}), 1), 1);
  EXPECT_EQ(varphi(SymSystem(3, {2}), 1), 1);
  EXPECT_EQ(phi(SymSystem(3, {2}), 1), 1);
}

TEST(Bruteforce, Examples) {
  EXPECT_EQ(phi_bruteforce(SymSystem(1, {1}), 12), 4);
  EXPECT_EQ(varphi_bruteforce(SymSystem(1, {1}), 12), 4);
  EXPECT_EQ(varphi_bruteforce(SymSystem(2, {2}), 1), 1);
}

TEST(Bruteforce, MatchesNaiveOracle) {
  for (unsigned k = 1; k <= 3; ++k)
    for (const auto& J : nonempty_subsets(k))
      for (std::uint64_t n = 1; n <= 12; ++n) {
        ASSERT_EQ(varphi_bruteforce(SymSystem(k, J), n), testing::naive_totient(k, J, n, true));
        ASSERT_EQ(phi_bruteforce(SymSystem(k, J), n), testing::naive_totient(k, J, n, false));
      }
}

TEST(Bridge, ClosedDispatchMatchesEnumerationOnPrimePowers) {
  struct Range {
    unsigned k;
    std::uint64_t max_n;
  };
  for (const auto [k, max_n] : {Range{1, 3000}, Range{2, 300}, Range{3, 64}}) {
    for (std::uint64_t q = 2; q <= max_n; ++q) {
      if (factorize(q).factors.size() != 1) continue;
      for (const auto& J : nonempty_subsets(k)) {
        const SymSystem sys(k, J);
        ASSERT_EQ(varphi(sys, q), varphi_bruteforce(sys, q)) << "k=" << k << " q=" << q;
        ASSERT_EQ(phi(sys, q), phi_bruteforce(sys, q)) << "k=" << k << " q=" << q;
      }
    }
  }
}

TEST(Multiplicativity, CoprimeModuli) {
  for (unsigned k = 1; k <= 3; ++k)
    for (const auto& J : nonempty_subsets(k)) {
      const SymSystem sys(k, J);
      for (std::uint64_t m = 1; m <= 50; ++m)
        for (std::uint64_t n = 1; n <= 50; ++n) {
          if (std::gcd(m, n) != 1) continue;
          ASSERT_EQ(varphi(sys, m * n), varphi(sys, m) * varphi(sys, n));
          ASSERT_EQ(phi(sys, m * n), phi(sys, m) * phi(sys, n));
        }
    }
}

TEST(Symmetry, PairWithTopIndexIsReflected) {
  for (unsigned k = 2; k <= 4; ++k)
    for (unsigned i = 1; i < k; ++i)
      for (std::uint64_t n = 1; n <= 30; ++n) {
        if (k == 4 && n > 20) continue;
        ASSERT_EQ(phi_bruteforce(SymSystem(k, {i, k}), n),
                  phi_bruteforce(SymSystem(k, {k - i, k}), n))
            << "k=" << k << " i=" << i << " n=" << n;
      }
}

TEST(Divisibility, EulerPhiDividesWhenLinearFormConstrained) {
  for (unsigned k = 1; k <= 3; ++k)
    for (const auto& J : nonempty_subsets(k)) {
      if (J.front() != 1) continue;
      for (std::uint64_t n = 1; n <= 60; ++n)
        ASSERT_EQ(phi(SymSystem(k, J), n) % euler_phi(n), 0) << "n=" << n;
    }
}

TEST(ClosedPhi12, Examples) {
  EXPECT_EQ(closed_phi_12(2, 9), 18);
  EXPECT_EQ(closed_phi_12(2, 2), 0);
  EXPECT_EQ(closed_phi_12(2, 45), 18 * closed_phi_12(2, 5));
  EXPECT_EQ(closed_phi_12(2, 45), phi_bruteforce(SymSystem(2, {1, 2}), 45));
  EXPECT_THROW(closed_phi_12(1, 9), InvalidArgument);
}

TEST(ClosedPhi123, Examples) {
  EXPECT_EQ(closed_phi_123(5), 40);
  EXPECT_EQ(closed_phi_123(2), 1);
  EXPECT_EQ(closed_phi_123(1), 1);
  for (std::uint64_t n = 1; n <= 20; ++n)
    EXPECT_EQ(closed_phi_123(n), phi_bruteforce(SymSystem(3, {1, 2, 3}), n)) << n;
}

TEST(TothPhi1k, Examples) {
  EXPECT_EQ(toth_phi_1k(2, 9), 18);
  EXPECT_EQ(toth_phi_1k(2, 1), 1);
  EXPECT_EQ(toth_phi_1k(3, 5), 52);
  EXPECT_EQ(toth_phi_1k(3, 5), phi_bruteforce(SymSystem(3, {1, 3}), 5));
  for (unsigned k = 2; k <= 4; ++k)
    for (std::uint64_t n = 1; n <= 15; ++n) {
      EXPECT_EQ(toth_phi_1k(k, n), phi(SymSystem(k, {1, k}), n));
      EXPECT_EQ(toth_phi_1k(k, n), phi(SymSystem(k, {k - 1, k}), n));
    }
}

TEST(Menon, Examples) {
  EXPECT_EQ(menon_lhs(6, SymSystem(1, {1}), kIdentity), 8);
  EXPECT_EQ(menon_rhs(6, SymSystem(1, {1}), kIdentity), 8);
  EXPECT_EQ(menon_lhs(9, SymSystem(2, {1, 2}), kIdentity), 54);
  EXPECT_EQ(menon_rhs(9, SymSystem(2, {1, 2}), kIdentity), 54);
  for (std::uint64_t n : {1ULL, 7ULL, 12ULL}) {
    const SymSystem sys(3, {1, 2});
    EXPECT_EQ(menon_lhs(n, sys, kOne), phi(sys, n));
    EXPECT_EQ(menon_rhs(n, sys, kOne), phi(sys, n));
  }
  EXPECT_THROW(menon_lhs(6, SymSystem(2, {2}), kIdentity), InvalidArgument);
}

TEST(Menon, IdentityHoldsOnSmallModuli) {
  const std::vector<SymSystem> systems{SymSystem(1, {1}), SymSystem(2, {1, 2}),
                                       SymSystem(3, {1, 2, 3}), SymSystem(3, {1}),
                                       SymSystem(3, {1, 2})};
  for (const auto& sys : systems)
    for (const ArithmeticFn& f : {kIdentity, kOne, kTau})
      for (std::uint64_t n = 1; n <= 20; ++n)
        ASSERT_EQ(menon_lhs(n, sys, f), menon_rhs(n, sys, f)) << "n=" << n;
}

TEST(Budget, FallbackErrorNamesThePrime) {
  try {
    varphi(SymSystem(4, {3}), 101, Budget{1000});
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& err) {
    EXPECT_NE(std::string(err.what()).find("p = 101"), std::string::npos) << err.what();
  }
  // Closed forms need no enumeration budget at all.
  EXPECT_NO_THROW(varphi(SymSystem(4, {1, 2, 4}), 1'000'000'007ULL, Budget{1}));
}

}  // namespace
}  // namespace symtot
