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
#include "symtot/quadratic_form.hpp"

#include <string>
#include <utility>

#include "symtot/arith.hpp"
#include "symtot/detail/enumerate.hpp"
#include "symtot/errors.hpp"

namespace symtot {

QuadraticForm::QuadraticForm(std::uint64_t p, unsigned k,
                             std::span<const std::int64_t> entries)
    : p_(p), k_(k) {
  if (p == 2 || !is_prime(p))
    throw InvalidArgument("quadratic forms need an odd prime, got " + std::to_string(p));
  if (k == 0) throw InvalidArgument("quadratic form needs k >= 1");
  if (entries.size() != static_cast<std::size_t>(k) * k)
    throw InvalidArgument("expected " + std::to_string(k * k) + " matrix entries");
  a_.reserve(entries.size());
  for (std::int64_t v : entries) a_.push_back(reduce_mod(v, p));
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = i + 1; j < k; ++j)
      if (at(i, j) != at(j, i)) throw InvalidArgument("matrix is not symmetric mod p");
}

std::uint64_t QuadraticForm::evaluate(std::span<const std::uint64_t> x) const noexcept {
  std::uint64_t sum = 0;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t row = 0;
    for (unsigned j = 0; j < k_; ++j) row = (row + mul_mod(at(i, j), x[j], p_)) % p_;
    sum = (sum + mul_mod(x[i] % p_, row, p_)) % p_;
  }
  return sum;
}

std::uint64_t QuadraticForm::determinant() const {
  std::vector<std::uint64_t> m = a_;
  auto cell = [&](unsigned i, unsigned j) -> std::uint64_t& { return m[i * k_ + j]; };
  std::uint64_t det = 1;
  for (unsigned c = 0; c < k_; ++c) {
    unsigned pivot = c;
    while (pivot < k_ && cell(pivot, c) == 0) ++pivot;
    if (pivot == k_) return 0;
    if (pivot != c) {
      for (unsigned j = 0; j < k_; ++j) std::swap(cell(pivot, j), cell(c, j));
      det = (p_ - det) % p_;
    }
    det = mul_mod(det, cell(c, c), p_);
    const std::uint64_t inv = inverse_mod(cell(c, c), p_);
    for (unsigned r = c + 1; r < k_; ++r) {
      const std::uint64_t factor = mul_mod(cell(r, c), inv, p_);
      if (factor == 0) continue;
      for (unsigned j = c; j < k_; ++j)
        cell(r, j) = (cell(r, j) + p_ - mul_mod(factor, cell(c, j), p_)) % p_;
    }
  }
  return det;
}

std::vector<std::uint64_t> QuadraticForm::congruent_diagonal() const {
  std::vector<std::uint64_t> m = a_;
  const std::uint64_t p = p_;
  auto cell = [&](unsigned i, unsigned j) -> std::uint64_t& { return m[i * k_ + j]; };
  // Simultaneous row/column operations keep the matrix symmetric and
  // congruent to A.
  auto swap_both = [&](unsigned i, unsigned j) {
    for (unsigned t = 0; t < k_; ++t) std::swap(cell(i, t), cell(j, t));
    for (unsigned t = 0; t < k_; ++t) std::swap(cell(t, i), cell(t, j));
  };
  auto add_both = [&](unsigned dst, unsigned src, std::uint64_t factor) {
    for (unsigned t = 0; t < k_; ++t)
      cell(dst, t) = (cell(dst, t) + mul_mod(factor, cell(src, t), p)) % p;
    for (unsigned t = 0; t < k_; ++t)
      cell(t, dst) = (cell(t, dst) + mul_mod(factor, cell(t, src), p)) % p;
  };

  std::vector<std::uint64_t> diag(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (cell(i, i) == 0) {
      unsigned j = i + 1;
      while (j < k_ && cell(j, j) == 0) ++j;
      if (j < k_) {
        swap_both(i, j);
      } else {
        j = i + 1;
        while (j < k_ && cell(i, j) == 0) ++j;
        if (j == k_) continue;  // row i is already zero past the diagonal
        add_both(i, j, 1);      // new a_ii = 2 a_ij, nonzero for odd p
      }
    }
    const std::uint64_t inv = inverse_mod(cell(i, i), p);
    for (unsigned j = i + 1; j < k_; ++j) {
      const std::uint64_t factor = mul_mod(cell(j, i), inv, p);
      if (factor != 0) add_both(j, i, (p - factor) % p);
    }
    diag[i] = cell(i, i);
  }
  return diag;
}

unsigned QuadraticForm::rank() const {
  unsigned r = 0;
  for (std::uint64_t d : congruent_diagonal()) r += d != 0;
  return r;
}

ZeroCount quad_form_count(const QuadraticForm& form, std::int64_t b) {
  const std::uint64_t p = form.prime();
  const unsigned k = form.arity();
  const std::uint64_t rhs = reduce_mod(b, p);

  unsigned nullity = 0;
  std::uint64_t delta = 1;
  for (std::uint64_t d : form.congruent_diagonal()) {
    if (d == 0) {
      ++nullity;
    } else {
      delta = mul_mod(delta, d, p);
    }
  }
  const unsigned m = k - nullity;
  if (m == 0) return rhs == 0 ? ipow(p, k) : ZeroCount(0);

  auto signed_power = [&](unsigned e) -> std::uint64_t { return e % 2 == 0 ? 1 : p - 1; };
  BigInt count = ipow(p, m - 1);
  if (m % 2 == 1) {
    const std::uint64_t arg =
        mul_mod(mul_mod(signed_power((m - 1) / 2), rhs, p), delta, p);
    count += ipow(p, (m - 1) / 2) * to_int(quadratic_character(static_cast<std::int64_t>(arg), p));
  } else {
    const std::uint64_t arg = mul_mod(signed_power(m / 2), delta, p);
    count += BigInt(nu(static_cast<std::int64_t>(rhs), p)) * ipow(p, (m - 2) / 2) *
             to_int(quadratic_character(static_cast<std::int64_t>(arg), p));
  }
  return count * ipow(p, nullity);
}

ZeroCount quad_form_count_bruteforce(const QuadraticForm& form, std::int64_t b,
                                     const Budget& budget) {
  const std::uint64_t rhs = reduce_mod(b, form.prime());
  const std::uint64_t hits = detail::reduce_tuples<std::uint64_t>(
      form.arity(), form.prime(), 0, budget, 0,
      [&](std::span<const std::uint64_t> x, std::span<const std::uint64_t>,
          std::uint64_t& acc) { acc += form.evaluate(x) == rhs; });
  return hits;
}

namespace {

QuadraticForm constant_off_diagonal(unsigned k, std::uint64_t p, std::int64_t diagonal) {
  if (p == 2 || !is_prime(p))
    throw InvalidArgument("needs an odd prime, got " + std::to_string(p));
  const auto half = static_cast<std::int64_t>(inverse_mod(2, p));
  std::vector<std::int64_t> entries(static_cast<std::size_t>(k) * k, half);
  for (unsigned i = 0; i < k; ++i) entries[i * k + i] = diagonal;
  return QuadraticForm(p, k, entries);
}

}  // namespace

QuadraticForm e2_form(unsigned k, std::uint64_t p) {
  if (k < 2) throw InvalidArgument("e_2 needs k >= 2");
  return constant_off_diagonal(k, p, 0);
}

QuadraticForm e1e2_reduced_form(unsigned k, std::uint64_t p) {
  if (k < 2) throw InvalidArgument("e_1, e_2 reduction needs k >= 2");
  return constant_off_diagonal(k - 1, p, 1);
}

}  // namespace symtot
