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


#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freqconv/errors.hpp"
#include "freqconv/scenario.hpp"

namespace freqconv {

namespace {

// Generated at configure time from presets/*.json.
constexpr std::pair<std::string_view, std::string_view> kPresets[] = {
#include "freqconv/preset_data.inc"
};

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : kPresets) names.emplace_back(name);
  return names;
}

std::string_view preset_text(std::string_view name) {
  for (const auto& [preset, text] : kPresets) {
    if (preset == name) return text;
  }
  std::string known;
  for (const auto& [preset, text] : kPresets) known += (known.empty() ? "" : ", ") + std::string(preset);
  throw ConfigError("preset", "unknown preset '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace freqconv
