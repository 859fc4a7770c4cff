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
#include "symtotient/records.hpp"

#include "json.hpp"

namespace symtot::cli {

std::string method_label(Method m) {
  switch (m) {
    case Method::Closed: return "closed-form";
    case Method::Brute: return "brute-force";
    case Method::Both: return "both";
  }
  return "";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

RecordWriter::RecordWriter(std::ostream& out, Format format,
                           std::vector<std::string> param_names)
    : out_(out), format_(format), param_names_(std::move(param_names)) {}

void RecordWriter::header() {
  if (header_done_ || format_ != Format::Csv) return;
  header_done_ = true;
  out_ << "quantity";
  for (const auto& name : param_names_) out_ << ',' << csv_field("param:" + name);
  out_ << ",value,method\n";
}

void RecordWriter::write(const OutputRecord& rec) {
  switch (format_) {
    case Format::Text: {
      out_ << rec.quantity;
      for (const auto& [k, v] : rec.params) out_ << ' ' << k << '=' << v;
      out_ << ": " << rec.value << " (" << method_label(rec.method) << ")\n";
      break;
    }
    case Format::Csv: {
      header();
      out_ << csv_field(rec.quantity);
      for (const auto& name : param_names_) {
        std::string v;
        for (const auto& [k, pv] : rec.params)
          if (k == name) v = pv;
        out_ << ',' << csv_field(v);
      }
      out_ << ',' << csv_field(rec.value) << ',' << method_label(rec.method) << '\n';
      break;
    }
    case Format::Jsonl: {
      nlohmann::ordered_json j;
      j["quantity"] = rec.quantity;
      j["params"] = nlohmann::ordered_json::object();
      for (const auto& [k, v] : rec.params) j["params"][k] = v;
      j["value"] = rec.value;
      j["method"] = method_label(rec.method);
      out_ << j.dump() << '\n';
      break;
    }
  }
}

void RecordWriter::finish() { header(); }

}  // namespace symtot::cli
