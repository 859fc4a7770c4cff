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
#include "symtotient/parse.hpp"

#include <charconv>
#include <limits>
#include <string_view>

#include "symtot/errors.hpp"

namespace symtot::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

template <class T>
T parse_number(std::string_view s, std::string_view what) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw InvalidArgument("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

std::uint64_t parse_u64(const std::string& text) {
  return parse_number<std::uint64_t>(text, "non-negative integer");
}

std::int64_t parse_i64(const std::string& text) {
  return parse_number<std::int64_t>(text, "integer");
}

std::vector<unsigned> parse_indices(const std::string& text, unsigned k) {
  std::vector<unsigned> out;
  if (trim(text).empty()) return out;
  auto bound = [k](std::string_view s) -> unsigned {
    s = trim(s);
    if (s == "k") return k;
    return parse_number<unsigned>(s, "index");
  };
  for (auto part : split(text, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(bound(part));
      continue;
    }
    const unsigned lo = bound(part.substr(0, dots));
    const unsigned hi = bound(part.substr(dots + 2));
    if (hi < lo) throw InvalidArgument("malformed index range: '" + std::string(part) + "'");
    for (unsigned j = lo; j <= hi; ++j) out.push_back(j);
  }
  return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (trim(text).empty()) throw InvalidArgument("empty coefficient list");
  for (auto part : split(text, ',')) out.push_back(parse_number<std::int64_t>(part, "coefficient"));
  return out;
}

Range parse_range(const std::string& text) {
  const std::string_view s = text;
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_number<std::uint64_t>(s, "range");
    return {v, v};
  }
  const auto lo = parse_number<std::uint64_t>(s.substr(0, dots), "range start");
  const auto hi = parse_number<std::uint64_t>(s.substr(dots + 2), "range end");
  if (hi == std::numeric_limits<std::uint64_t>::max())
    throw InvalidArgument("range end too large");
  return {lo, hi};
}

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "csv") return Format::Csv;
  if (text == "jsonl") return Format::Jsonl;
  throw InvalidArgument("unknown format '" + text + "'");
}

Method parse_method(const std::string& text) {
  if (text == "closed") return Method::Closed;
  if (text == "brute") return Method::Brute;
  if (text == "both") return Method::Both;
  throw InvalidArgument("unknown method '" + text + "'");
}

}  // namespace symtot::cli
