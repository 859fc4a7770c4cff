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
#include "symtotient/verify.hpp"

#include <cmath>
#include <complex>
#include <exception>
#include <numeric>
#include <random>
#include <sstream>
#include <utility>

#include "symtot/arith.hpp"
#include "symtot/congruence.hpp"
#include "symtot/elementary.hpp"
#include "symtot/errors.hpp"
#include "symtot/quadratic_form.hpp"
#include "symtot/totient.hpp"
#include "symtot/zeros.hpp"

namespace symtot::cli {
namespace {

using Check = std::pair<bool, std::string>;

template <class A, class B>
Check eq(const A& got, const B& want) {
  if (got == want) return {true, {}};
  std::ostringstream os;
  os << "got " << got << ", expected " << want;
  return {false, os.str()};
}

template <class F>
void cell(Tally& t, const std::string& label, F&& f) {
  try {
    const Check c = f();
    ++t.checked;
    if (c.first) {
      ++t.passed;
    } else {
      t.failures.push_back(label + ": " + c.second);
    }
  } catch (const BudgetExceeded& e) {
    t.skipped.push_back(label + ": " + e.what());
  } catch (const std::exception& e) {
    ++t.checked;
    t.failures.push_back(label + ": " + e.what());
  }
}

std::string params(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) {
    if (!s.empty()) s += ' ';
    s += k;
    s += '=';
    s += v;
  }
  return s;
}

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(const std::vector<unsigned>& J) { return "{" + format_indices(J) + "}"; }

std::vector<std::vector<unsigned>> nonempty_subsets(unsigned k) {
  std::vector<std::vector<unsigned>> out;
  for (unsigned mask = 1; mask < (1U << k); ++mask) {
    std::vector<unsigned> J;
    for (unsigned j = 0; j < k; ++j)
      if (mask & (1U << j)) J.push_back(j + 1);
    out.push_back(std::move(J));
  }
  return out;
}

const std::vector<std::uint64_t>& odd_primes_to_31() {
  static const std::vector<std::uint64_t> ps{3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  return ps;
}

constexpr std::uint64_t kGridCap = 20'000'000;

void sweep_prime_grid(const Budget& budget, Tally& t, const std::vector<unsigned>& J,
                      ZeroCount (*closed)(unsigned, std::uint64_t)) {
  for (auto p : odd_primes_to_31())
    for (unsigned k = 2; k <= 6; ++k) {
      if (saturating_pow(p, k) > kGridCap) continue;
      cell(t, params({{"p", str(p)}, {"k", str(k)}}), [&] {
        return eq(closed(k, p), count_zeros_bruteforce(SymSystem(k, J), p, budget));
      });
    }
}

void sweep_e2(const Budget& b, Tally& t) { sweep_prime_grid(b, t, {2}, closed_N_e2); }
void sweep_e1e2(const Budget& b, Tally& t) { sweep_prime_grid(b, t, {1, 2}, closed_N_e1e2); }

void sweep_mod2(const Budget& budget, Tally& t) {
  cell(t, "N_3(e2,2)", [] { return eq(closed_N_e2(3, 2), 4); });
  cell(t, "N_3(e3,2)", [] { return eq(closed_N_el_mod2(3, 3), 7); });
  for (unsigned k = 1; k <= 20; ++k) {
    if (k >= 2) {
      cell(t, params({{"q", "e2"}, {"k", str(k)}}), [&] {
        return eq(closed_N_e2(k, 2), count_zeros_bruteforce(SymSystem(k, {2}), 2, budget));
      });
      cell(t, params({{"q", "e1e2"}, {"k", str(k)}}), [&] {
        return eq(closed_N_e1e2(k, 2),
                  count_zeros_bruteforce(SymSystem(k, {1, 2}), 2, budget));
      });
    }
    for (unsigned l = 1; l <= 4 && l <= k; ++l)
      cell(t, params({{"q", "e" + str(l)}, {"k", str(k)}}), [&] {
        return eq(closed_N_el_mod2(l, k), count_zeros_bruteforce(SymSystem(k, {l}), 2, budget));
      });
  }
}

// Alternating binomial sum over lower arities plus the boundary term, as
// the two e_k theorems state it.
ZeroCount stated_sum(unsigned k, std::uint64_t p, bool with_e1) {
  ZeroCount sum = 0;
  for (unsigned j = 1; j + 2 <= k; ++j) {
    const ZeroCount inner = with_e1 ? closed_N_e1e2(k - j, p) : closed_N_e2(k - j, p);
    const ZeroCount term = binomial(k, j) * inner;
    sum += (j % 2 == 1) ? term : ZeroCount(-term);
  }
  const ZeroCount boundary =
      with_e1 ? ZeroCount(k) - 1 : ZeroCount(k) * p - 1;
  sum += (k % 2 == 0) ? boundary : ZeroCount(-boundary);
  return sum;
}

void sweep_extend(const Budget& budget, Tally& t) {
  const ZeroCounter brute = [&budget](const SymSystem& s, std::uint64_t p) {
    return count_zeros_bruteforce(s, p, budget);
  };
  const std::vector<std::vector<unsigned>> bases{{1}, {2}, {1, 2}};
  for (const auto& J : bases)
    for (unsigned k = 3; k <= 5; ++k)
      for (std::uint64_t p : {2, 3, 5, 7}) {
        auto full = J;
        full.push_back(k);
        cell(t, params({{"J", str(J)}, {"k", str(k)}, {"p", str(p)}}), [&] {
          return eq(extend_with_ek(SymSystem(k, J), p, brute),
                    count_zeros_bruteforce(SymSystem(k, full), p, budget));
        });
        if (J == std::vector<unsigned>{1}) continue;
        const bool with_e1 = J.size() == 2;
        // The p = 2 boundary terms hold only on these residue classes of k.
        if (p == 2 && (with_e1 ? k % 4 != 0 : (k % 4 != 0 && k % 4 != 1))) continue;
        cell(t, params({{"stated", str(full)}, {"k", str(k)}, {"p", str(p)}}), [&] {
          return eq(extend_with_ek(SymSystem(k, J), p, brute), stated_sum(k, p, with_e1));
        });
      }
}

std::vector<std::int64_t> random_symmetric(std::mt19937_64& rng, unsigned k, std::uint64_t p,
                                           bool degenerate) {
  std::uniform_int_distribution<std::uint64_t> digit(0, p - 1);
  std::vector<std::int64_t> a(static_cast<std::size_t>(k) * k, 0);
  if (!degenerate) {
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = i; j < k; ++j)
        a[i * k + j] = a[j * k + i] = static_cast<std::int64_t>(digit(rng));
    return a;
  }
  // B D B^T with a zero on the diagonal of D has rank below k.
  std::vector<std::uint64_t> b(static_cast<std::size_t>(k) * k), d(k);
  for (auto& x : b) x = digit(rng);
  for (auto& x : d) x = digit(rng);
  d[digit(rng) % k] = 0;
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) {
      std::uint64_t s = 0;
      for (unsigned l = 0; l < k; ++l) s = (s + b[i * k + l] * d[l] % p * b[j * k + l]) % p;
      a[i * k + j] = static_cast<std::int64_t>(s);
    }
  return a;
}

void sweep_quadratic(const Budget& budget, Tally& t) {
  std::mt19937_64 rng(0x5eed'2026ULL);
  for (unsigned k = 1; k <= 4; ++k)
    for (std::uint64_t p : {3, 5, 7, 13})
      for (unsigned sample = 0; sample < 50; ++sample) {
        const bool degenerate = sample % 5 == 0;
        const auto entries = random_symmetric(rng, k, p, degenerate);
        cell(t, params({{"k", str(k)}, {"p", str(p)}, {"sample", str(sample)}}), [&]() -> Check {
          const QuadraticForm form(p, k, entries);
          if (degenerate && form.rank() == k) return {false, "sample is not degenerate"};
          ZeroCount total = 0;
          for (std::uint64_t b = 0; b < p; ++b) {
            const ZeroCount c = quad_form_count(form, static_cast<std::int64_t>(b));
            total += c;
            auto r = eq(c, quad_form_count_bruteforce(form, static_cast<std::int64_t>(b), budget));
            if (!r.first) return {false, "b=" + str(b) + ": " + r.second};
          }
          return eq(total, ipow(p, k));
        });
      }
}

void sweep_product_forms(const Budget& budget, Tally& t) {
  for (unsigned k = 1; k <= 3; ++k)
    for (const auto& J : nonempty_subsets(k))
      for (std::uint64_t n = 1; n <= 50; ++n) {
        const SymSystem sys(k, J);
        cell(t, params({{"varphi k", str(k)}, {"J", str(J)}, {"n", str(n)}}), [&] {
          return eq(varphi(sys, n, budget), varphi_bruteforce(sys, n, budget));
        });
        cell(t, params({{"phi k", str(k)}, {"J", str(J)}, {"n", str(n)}}), [&] {
          return eq(phi(sys, n, budget), phi_bruteforce(sys, n, budget));
        });
      }
}

void sweep_relation(const Budget& budget, Tally& t) {
  const auto subsets = nonempty_subsets(3);
  for (std::uint64_t p : {3, 5})
    for (unsigned a = 1; a <= 2; ++a) {
      const std::uint64_t q = a == 1 ? p : p * p;
      cell(t, params({{"phi p", str(p)}, {"a", str(a)}}), [&] {
        ZeroCount sum = 0;
        for (const auto& S : subsets) {
          const ZeroCount v = varphi_bruteforce(SymSystem(3, S), q, budget);
          sum += S.size() % 2 == 1 ? v : ZeroCount(-v);
        }
        return eq(phi_bruteforce(SymSystem(3, {1, 2, 3}), q, budget), sum);
      });
      cell(t, params({{"varphi p", str(p)}, {"a", str(a)}}), [&] {
        ZeroCount sum = 0;
        for (const auto& S : subsets) {
          const ZeroCount v = phi_bruteforce(SymSystem(3, S), q, budget);
          sum += S.size() % 2 == 1 ? v : ZeroCount(-v);
        }
        return eq(varphi_bruteforce(SymSystem(3, {1, 2, 3}), q, budget), sum);
      });
    }
}

void sweep_jordan(const Budget& budget, Tally& t) {
  for (unsigned k = 1; k <= 5; ++k) {
    std::vector<unsigned> J;
    for (unsigned j = 1; j <= k; ++j) J.push_back(j);
    const SymSystem sys(k, J);
    for (std::uint64_t n = 1; n <= 10'000; ++n)
      cell(t, params({{"k", str(k)}, {"n", str(n)}}), [&] {
        return eq(varphi(sys, n, budget), jordan_totient(k, n));
      });
  }
}

void sweep_phi_12(const Budget& budget, Tally& t) {
  cell(t, "phi_12(2,9)", [] { return eq(closed_phi_12(2, 9), 18); });
  for (std::uint64_t n = 1; n <= 500; ++n)
    cell(t, params({{"toth n", str(n)}}), [&] {
      return eq(closed_phi_12(2, n), toth_phi_1k(2, n));
    });
  for (unsigned k = 2; k <= 3; ++k)
    for (std::uint64_t n = 1; n <= 40; ++n)
      cell(t, params({{"k", str(k)}, {"n", str(n)}}), [&] {
        return eq(closed_phi_12(k, n), phi_bruteforce(SymSystem(k, {1, 2}), n, budget));
      });
}

void sweep_phi_123(const Budget& budget, Tally& t) {
  cell(t, "phi_123(5)", [] { return eq(closed_phi_123(5), 40); });
  cell(t, "phi_123(2)", [] { return eq(closed_phi_123(2), 1); });
  for (std::uint64_t n = 1; n <= 40; ++n)
    cell(t, params({{"n", str(n)}}), [&] {
      return eq(closed_phi_123(n), phi_bruteforce(SymSystem(3, {1, 2, 3}), n, budget));
    });
}

void sweep_menon(const Budget& budget, Tally& t) {
  const std::vector<std::pair<std::string, ArithmeticFn>> fns{
      {"id", [](std::uint64_t d) { return BigInt(d); }},
      {"one", [](std::uint64_t) { return BigInt(1); }},
      {"tau", [](std::uint64_t d) { return BigInt(divisor_count(d)); }},
  };
  cell(t, "classical n=6", [&] {
    return eq(menon_lhs(6, SymSystem(1, {1}), fns[0].second, budget), 8);
  });
  const std::vector<SymSystem> systems{SymSystem(1, {1}), SymSystem(2, {1, 2}),
                                       SymSystem(3, {1, 2, 3})};
  for (const auto& sys : systems)
    for (const auto& [name, f] : fns)
      for (std::uint64_t n = 1; n <= 40; ++n)
        cell(t, params({{"k", str(sys.arity())}, {"f", name}, {"n", str(n)}}), [&] {
          return eq(menon_lhs(n, sys, f, budget), menon_rhs(n, sys, f, budget));
        });
}

void sweep_rhs_classes(const Budget& budget, Tally& t) {
  const std::vector<std::int64_t> mixed{2, 3, 5};
  for (unsigned k = 1; k <= 3; ++k)
    for (const auto& J : nonempty_subsets(k))
      for (std::uint64_t n = 1; n <= 30; ++n)
        for (int variant = 0; variant < 2; ++variant) {
          std::vector<std::int64_t> coeffs(k, 1);
          if (variant == 1) coeffs.assign(mixed.begin(), mixed.begin() + k);
          const CongruenceProblem prob(coeffs, 0, n, SymSystem(k, J, GcdMode::Individual));
          cell(t, params({{"k", str(k)}, {"J", str(J)}, {"n", str(n)},
                          {"coeffs", variant == 0 ? "ones" : "mixed"}}),
               [&]() -> Check {
                 const auto counts = count_bruteforce_by_rhs(prob, budget);
                 const std::uint64_t one = n == 1 ? 0 : 1;
                 for (std::uint64_t b = 0; b < n; ++b) {
                   const auto rep = reduce_rhs(prob.with_rhs(static_cast<std::int64_t>(b)));
                   if (counts[b] != counts[rep.rhs()])
                     return {false, "gcd class of b=" + str(b)};
                   if (std::gcd(b, n) == 1 && counts[b] != counts[one])
                     return {false, "fiber of b=" + str(b)};
                 }
                 return eq(count_unit_rhs(prob.with_rhs(1), budget), counts[one]);
               });
        }
}

void sweep_g3_g4(const Budget& budget, Tally& t) {
  cell(t, "g3(1,5)", [] { return eq(g3_closed(1, 5), 10); });
  cell(t, "g4(1,3)", [] { return eq(g4_closed(1, 3), 5); });
  auto ones = [](unsigned k, std::uint64_t n, std::vector<unsigned> J) {
    return CongruenceProblem(std::vector<std::int64_t>(k, 1), 0, n,
                             SymSystem(k, std::move(J), GcdMode::Individual));
  };
  for (std::uint64_t n = 1; n <= 50; ++n)
    cell(t, params({{"g3 n", str(n)}}), [&]() -> Check {
      const auto counts = count_bruteforce_by_rhs(ones(3, n, {2, 3}), budget);
      for (std::uint64_t m = 0; m < n; ++m) {
        if (std::gcd(m, n) != 1) continue;
        auto r = eq(g3_closed(static_cast<std::int64_t>(m), n), counts[m]);
        if (!r.first) return {false, "m=" + str(m) + ": " + r.second};
      }
      return {true, {}};
    });
  for (std::uint64_t n = 1; n <= 50; ++n) {
    const bool brute = n % 2 == 1 ? n <= 27 : n <= 6;
    if (n % 2 == 1 && !brute) continue;
    cell(t, params({{"g4 n", str(n)}}), [&]() -> Check {
      std::vector<std::uint64_t> counts;
      if (brute) counts = count_bruteforce_by_rhs(ones(4, n, {3, 4}), budget);
      for (std::uint64_t m = 0; m < n; ++m) {
        if (std::gcd(m, n) != 1) continue;
        const ZeroCount closed = g4_closed(static_cast<std::int64_t>(m), n);
        if (n % 2 == 0 && closed != 0) return {false, "m=" + str(m) + ": nonzero for even n"};
        if (brute && closed != counts[m])
          return {false, "m=" + str(m) + ": " + eq(closed, counts[m]).second};
      }
      return {true, {}};
    });
  }
}

void sweep_ramanujan(const Budget& budget, Tally& t) {
  const std::vector<std::vector<unsigned>> systems{{2}, {1, 2}};
  for (unsigned k = 2; k <= 3; ++k)
    for (const auto& J : systems)
      for (std::uint64_t n = 1; n <= 20; ++n)
        cell(t, params({{"k", str(k)}, {"J", str(J)}, {"n", str(n)}}), [&]() -> Check {
          const SymSystem sys(k, J);
          for (std::uint64_t m = 0; m < n; ++m) {
            const auto mi = static_cast<std::int64_t>(m);
            const auto direct = generalized_ramanujan_direct(mi, n, sys, budget);
            const double rounded = std::round(direct.real());
            if (std::abs(direct - rounded) >= 1e-6)
              return {false, "m=" + str(m) + ": rounding error too large"};
            auto r = eq(generalized_ramanujan(mi, n, sys, budget),
                        BigInt(static_cast<long long>(rounded)));
            if (!r.first) return {false, "m=" + str(m) + ": " + r.second};
          }
          return {true, {}};
        });
}

}  // namespace

const std::vector<ManifestEntry>& manifest() {
  static const std::vector<ManifestEntry> entries{
      {1, "symfield", "e2", sweep_e2},
      {2, "symfield", "e1e2", sweep_e1e2},
      {3, "symfield", "mod2", sweep_mod2},
      {4, "symfield", "extend_ek", sweep_extend},
      {5, "symfield", "quadratic_form", sweep_quadratic},
      {6, "totient", "product_form", sweep_product_forms},
      {7, "totient", "relation", sweep_relation},
      {8, "totient", "jordan", sweep_jordan},
      {9, "totient", "phi_12", sweep_phi_12},
      {10, "totient", "phi_123", sweep_phi_123},
      {11, "menon", "menon", sweep_menon},
      {12, "congruence", "rhs_classes", sweep_rhs_classes},
      {13, "congruence", "g3_g4", sweep_g3_g4},
      {14, "congruence", "ramanujan", sweep_ramanujan},
  };
  return entries;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "symfield", "totient", "menon",
                                              "congruence"};
  return names;
}

Tally run_entry(const ManifestEntry& entry, const Budget& budget) {
  Tally t;
  t.theorem = entry.theorem;
  entry.sweep(budget, t);
  return t;
}

}  // namespace symtot::cli
