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

#ifndef FREQCONV_FOCKSPACE_HPP
#define FREQCONV_FOCKSPACE_HPP

#include <Eigen/Dense>
#include <compare>
#include <string>
#include <string_view>

namespace freqconv {

/// Dense complex square matrix. Carries Hamiltonians, observables and
/// density matrices on the truncated two-resonator-plus-qubit space.
using OperatorMatrix = Eigen::MatrixXcd;

enum class QubitLevel : int { g = 0, e = 1 };

/// Product state |n_a, n_b, q>.
struct BasisLabel {
  int n_a = 0;
  int n_b = 0;
  QubitLevel q = QubitLevel::g;

  auto operator<=>(const BasisLabel&) const = default;

  /// "n_a,n_b,q", e.g. "1,0,g".
  std::string to_string() const;
  /// Inverse of to_string; whitespace around fields is ignored.
  static BasisLabel parse(std::string_view text);
};

/// Fock cutoffs: resonator a keeps |0>..|cutoff_a-1>, likewise for b.
struct SpaceConfig {
  int cutoff_a = 6;
  int cutoff_b = 6;

  Eigen::Index dimension() const { return Eigen::Index{2} * cutoff_a * cutoff_b; }
  bool contains(const BasisLabel& label) const;
  /// Throws DomainError unless both cutoffs are at least 2.
  void validate() const;
};

enum class Slot { a, b, qubit };
enum class QubitOp { sigma_x, sigma_z, sigma_plus, sigma_minus };

/// Composite index, ordered with n_a outermost and the qubit innermost:
/// (n_a * cutoff_b + n_b) * 2 + q.
Eigen::Index index_of(const BasisLabel& label, const SpaceConfig& cfg);
BasisLabel label_of(Eigen::Index index, const SpaceConfig& cfg);

/// Truncated bosonic lowering operator, <n-1|a|n> = sqrt(n).
OperatorMatrix annihilator(int cutoff);

/// 2x2 qubit operator in the (g, e) basis. sigma_z|e> = +|e>, sigma_+|g> = |e>.
OperatorMatrix qubit_operator(QubitOp which);

/// Embeds a single-subsystem operator into the composite space.
OperatorMatrix lift(const OperatorMatrix& op, Slot slot, const SpaceConfig& cfg);

/// max|M - M^dagger| <= rel_tol * max|M| (zero matrix counts as Hermitian).
bool is_hermitian(const OperatorMatrix& m, double rel_tol = 1e-12);

}  // namespace freqconv

#endif  // FREQCONV_FOCKSPACE_HPP
