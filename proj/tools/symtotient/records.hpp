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

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace symtot::cli {

enum class Format { Text, Csv, Jsonl };
enum class Method { Closed, Brute, Both };

std::string method_label(Method m);

struct OutputRecord {
  std::string quantity;
  std::vector<std::pair<std::string, std::string>> params;
  std::string value;
  Method method = Method::Closed;
};

/// Quotes a CSV field when it holds a comma, quote or line break.
std::string csv_field(const std::string& s);

/// Streams records in one format. The CSV header is taken from the
/// parameter names given at construction, so an empty stream still has one.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, Format format, std::vector<std::string> param_names);
  void write(const OutputRecord& rec);
  /// Emits the CSV header if no record has been written yet.
  void finish();

 private:
  void header();

  std::ostream& out_;
  Format format_;
  std::vector<std::string> param_names_;
  bool header_done_ = false;
};

}  // namespace symtot::cli
