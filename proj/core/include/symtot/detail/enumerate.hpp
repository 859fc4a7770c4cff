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

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <span>
#include <thread>
#include <vector>

#include "symtot/budget.hpp"
#include "symtot/errors.hpp"

namespace symtot::detail {

/// Visits every x in Z_m^k in odometer order, handing the visitor the tuple
/// and e_0..e_degree of it (mod m). e-values are maintained incrementally:
/// row d holds the coefficients of prod_{i<d} (1 + x_i t), so advancing one
/// coordinate costs O((k - d) * degree).
///
/// The space is partitioned by the leading coordinate. Each leading value
/// gets its own accumulator and the partials are folded in leading-value
/// order, so the result is identical to a sequential sweep regardless of the
/// thread count.
///
/// Visitor: void(std::span<const uint64_t> x, std::span<const uint64_t> e,
///               Acc& acc). Acc needs copy construction and operator+=.
template <class Acc, class Visitor>
Acc reduce_tuples(unsigned k, std::uint64_t m, unsigned degree,
                  const Budget& budget, const Acc& zero, Visitor visit) {
  if (k == 0) throw InvalidArgument("tuple enumeration needs arity >= 1");
  if (m == 0) throw InvalidArgument("modulus must be positive");
  budget.require(m, k);
  if (m > std::numeric_limits<std::uint32_t>::max())
    throw InvalidArgument("enumeration modulus must be below 2^32");

  const unsigned width = degree + 1;
  std::vector<Acc> partials(m, zero);

  auto walk_leading = [&](std::uint64_t lead) {
    Acc& acc = partials[lead];
    std::vector<std::uint64_t> x(k, 0);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(k + 1) * width, 0);
    auto row = [&](unsigned d) { return rows.data() + d * width; };
    auto extend = [&](unsigned d) {
      const std::uint64_t* prev = row(d);
      std::uint64_t* next = row(d + 1);
      next[0] = prev[0];
      for (unsigned j = 1; j < width; ++j)
        next[j] = (prev[j] + x[d] * prev[j - 1]) % m;
    };
    row(0)[0] = 1 % m;
    x[0] = lead;
    for (unsigned d = 0; d < k; ++d) extend(d);
    const std::span<const std::uint64_t> tuple(x);
    const std::span<const std::uint64_t> esym(row(k), width);
    for (;;) {
      visit(tuple, esym, acc);
      unsigned d = k - 1;
      while (d >= 1 && ++x[d] == m) x[d--] = 0;
      if (d == 0) break;
      for (unsigned i = d; i < k; ++i) extend(i);
    }
  };

  const std::uint64_t total = saturating_pow(m, k);
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  if (total < (1U << 14) || m == 1) threads = 1;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, m));

  if (threads == 1) {
    for (std::uint64_t lead = 0; lead < m; ++lead) walk_leading(lead);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::uint64_t lead = next++; lead < m; lead = next++)
          walk_leading(lead);
      });
    }
  }

  Acc result = zero;
  for (const Acc& part : partials) result += part;
  return result;
}

/// Elementwise-summed histogram, used as an accumulator by reduce_tuples.
struct Histogram {
  std::vector<std::uint64_t> bins;

  explicit Histogram(std::size_t size = 0) : bins(size, 0) {}

  Histogram& operator+=(const Histogram& other) {
    for (std::size_t i = 0; i < bins.size(); ++i) bins[i] += other.bins[i];
    return *this;
  }
};

}  // namespace symtot::detail
