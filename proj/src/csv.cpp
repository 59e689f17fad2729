// Copyright 2026 The freqconv Authors
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


#include "freqconv/csv.hpp"

#include <cstdio>
#include <ostream>

namespace freqconv {

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void CsvWriter::header(const std::vector<std::string>& columns) {
  begin_row();
  for (const auto& c : columns) field(std::string_view(c));
  end_row();
}

void CsvWriter::separator() {
  if (!first_) out_ << ',';
  first_ = false;
}

void CsvWriter::field(double value) {
  separator();
  out_ << format_double(value);
}

void CsvWriter::field(long long value) {
  separator();
  out_ << value;
}

void CsvWriter::field(std::string_view value) {
  separator();
  out_ << value;
}

void CsvWriter::end_row() { out_ << '\n'; }

}  // namespace freqconv
