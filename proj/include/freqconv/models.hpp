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

#ifndef FREQCONV_MODELS_HPP
#define FREQCONV_MODELS_HPP

#include <span>
#include <string_view>

#include "freqconv/fockspace.hpp"

namespace freqconv {

// Hamiltonians of one qubit coupled to two resonators a and b (hbar = 1).
// All frequencies share one unit, normally the reference qubit frequency.
//
//   generalized_rabi:  w_a a^+a + w_b b^+b + (w_q/2) sz
//                      + [g_a (a + a^+) + g_b (b + b^+)] (sx cos(theta) + sz sin(theta))
//   quantum_rabi:      generalized_rabi at theta = 0
//   jaynes_cummings:   bare terms + g_a (a s+ + a^+ s-) + g_b (b s+ + b^+ s-)
//
// There is no direct resonator-resonator term and no higher resonator mode.

enum class ModelKind { generalized_rabi, quantum_rabi, jaynes_cummings };

std::string_view to_string(ModelKind kind);
/// Accepts the enumerator spelling, e.g. "quantum_rabi". Throws DomainError.
ModelKind parse_model_kind(std::string_view text);

struct ModelParams {
  double omega_a = 3.0;
  double omega_b = 2.0;
  double omega_q = 1.0;
  double g_a = 0.0;
  double g_b = 0.0;
  /// Mixing angle between transverse (sx) and longitudinal (sz) coupling.
  double theta = 0.0;

  /// Throws DomainError on non-finite values, omega_a <= 0, omega_b <= 0,
  /// omega_q < 0, or negative couplings.
  void validate() const;

  ModelParams with_omega_q(double w) const {
    ModelParams p = *this;
    p.omega_q = w;
    return p;
  }
  ModelParams with_coupling(double g) const {
    ModelParams p = *this;
    p.g_a = g;
    p.g_b = g;
    return p;
  }
};

OperatorMatrix build_hamiltonian(ModelKind kind, const ModelParams& p, const SpaceConfig& cfg);

/// H(w_q) = fixed + w_q * qubit_half_sz, with everything else from `p` frozen.
/// Lets qubit-frequency sweeps skip rebuilding the lifted operators.
struct QubitSweepHamiltonian {
  OperatorMatrix fixed;
  OperatorMatrix qubit_half_sz;

  OperatorMatrix at(double omega_q) const { return fixed + omega_q * qubit_half_sz; }
};

QubitSweepHamiltonian split_qubit_frequency(ModelKind kind, const ModelParams& p, const SpaceConfig& cfg);

/// Matrix of <label_i|h|label_j> in the given label order.
OperatorMatrix project_subspace(const OperatorMatrix& h, std::span<const BasisLabel> labels,
                                const SpaceConfig& cfg);

/// sz * exp(i pi (a^+a + b^+b)) on the composite space; diagonal with entries +-1.
OperatorMatrix parity_operator(const SpaceConfig& cfg);

/// a^+a + b^+b + s+s-.
OperatorMatrix excitation_number(const SpaceConfig& cfg);

}  // namespace freqconv

#endif  // FREQCONV_MODELS_HPP
