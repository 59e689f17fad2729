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

#ifndef FREQCONV_ERRORS_HPP
#define FREQCONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace freqconv {

/// Bad argument: out-of-range label, wrong dimension, invalid parameter.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base class for failures of a numerical procedure on otherwise valid input.
/// The CLI maps every subclass to exit status 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No interior gap minimum inside the requested window.
class SearchError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// An eliminated level is resonant with the frame (singular elimination block).
class EliminationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A bare label could not be matched to a dressed eigenstate unambiguously.
class IdentificationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Integration drifted beyond tolerance; the step is too coarse.
class StepSizeError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Scenario configuration problem. `key()` names the offending entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace freqconv

#endif  // FREQCONV_ERRORS_HPP
