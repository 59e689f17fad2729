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


#ifndef FREQCONV_CSV_HPP
#define FREQCONV_CSV_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace freqconv {

// Minimal CSV emitter. Doubles are printed with %.17g so a value written and
// read back round-trips exactly and reruns are byte-identical.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(const std::vector<std::string>& columns);
  void begin_row() { first_ = true; }
  void field(double value);
  void field(long long value);
  void field(std::string_view value);
  void end_row();

 private:
  void separator();

  std::ostream& out_;
  bool first_ = true;
};

std::string format_double(double value);

}  // namespace freqconv

#endif  // FREQCONV_CSV_HPP
