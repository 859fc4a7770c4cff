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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "symtot/budget.hpp"

namespace symtot::cli {

/// Outcome of one theorem sweep. A cell that needs more enumeration than the
/// budget allows is recorded as skipped and not counted as checked.
struct Tally {
  std::string theorem;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::vector<std::string> failures;
  std::vector<std::string> skipped;

  bool ok() const noexcept { return passed == checked && failures.empty(); }
};

struct ManifestEntry {
  int criterion;
  std::string suite;
  std::string theorem;
  std::function<void(const Budget&, Tally&)> sweep;
};

/// Static manifest in criterion order.
const std::vector<ManifestEntry>& manifest();

const std::vector<std::string>& suite_names();

Tally run_entry(const ManifestEntry& entry, const Budget& budget);

}  // namespace symtot::cli
