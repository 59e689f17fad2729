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


#ifndef FREQCONV_EFFCOUPLING_HPP
#define FREQCONV_EFFCOUPLING_HPP

#include <string_view>
#include <utility>
#include <vector>

#include "freqconv/fockspace.hpp"
#include "freqconv/models.hpp"

namespace freqconv {

// Closed-form effective couplings for the three conversion processes and a
// generic adiabatic-elimination engine that reproduces them from truncated
// Hamiltonians. All couplings are signed; the anticrossing splitting is
// 2 * |g_eff|.

/// Single-photon |1,0,g> <-> |0,1,e> coupling at arbitrary qubit frequency:
///   (1/2) g_a g_b sin(2 theta) [1/(w_a - w_q) + 1/w_b - 1/w_a - 1/(w_b + w_q)].
/// On resonance (w_q = w_a - w_b) this is g_a g_b sin(2 theta) (1/w_b - 1/w_a).
/// Throws DomainError at the poles w_q = w_a and w_b + w_q = 0.
double geff_single_photon(const ModelParams& p);

/// Two-photon |1,0,g> <-> |0,2,e> coupling of the Rabi model on resonance
/// (w_q = w_a - 2 w_b), general unequal-coupling form.
double geff_two_photon_ge(double g_a, double g_b, double omega_a, double omega_b);

/// Two-photon |1,0,e> <-> |0,2,g> coupling of the Rabi model on resonance
/// (w_q = 2 w_b - w_a). Algebraically identical to geff_two_photon_ge; only
/// meaningful while |w_a - w_b| is large compared to g.
double geff_two_photon_eg_rabi(double g_a, double g_b, double omega_a, double omega_b);

/// Jaynes-Cummings value for |1,0,e> <-> |0,2,g>:
///   -sqrt(2) g_a g_b^2 / (g_a^2 + (w_a - w_b)^2).
double geff_two_photon_eg_jc(double g_a, double g_b, double omega_a, double omega_b);

/// Leading order in g/w of the equal-coupling two-photon Rabi coupling,
///   sqrt(2) g^3 (w_a - 2 w_b) / (w_b (w_a - w_b)^2).
double geff_two_photon_leading_order(double g, double omega_a, double omega_b);

/// 2x2 effective Hamiltonian on the kept pair after elimination, relative to
/// the frame energy. The diagonal shifts only account for the eliminated
/// states that were supplied and are not final energies; the coupling is.
struct EffectiveTwoLevel {
  double shift_kept_1 = 0.0;
  double shift_kept_2 = 0.0;
  double coupling = 0.0;
};

/// Adiabatic elimination of every state except `kept`.
///
/// Subtracts `frame_energy` from the diagonal, sets the eliminated amplitude
/// derivatives to zero and solves D_EE v_E = -H_EK v_K (D_EE keeps the
/// couplings among eliminated states), giving
///   H_eff = H_KK - H_KE D_EE^{-1} H_EK.
/// Throws EliminationError when D_EE is singular (a resonant intermediate
/// state) and DomainError for non-Hermitian input or bad indices.
EffectiveTwoLevel adiabatic_eliminate(const OperatorMatrix& h_small, std::pair<Eigen::Index, Eigen::Index> kept,
                                      double frame_energy);

enum class ConversionProcess { single_photon, two_photon_ge, two_photon_eg };

std::string_view to_string(ConversionProcess process);
ConversionProcess parse_conversion_process(std::string_view text);

/// Qubit frequency of the bare resonance: w_a - w_b, w_a - 2 w_b or 2 w_b - w_a.
double nominal_resonance(ConversionProcess process, double omega_a, double omega_b);

/// Everything needed to reproduce a process by elimination: the converted
/// pair (initial, final), the truncated state list, the positions of the kept
/// pair inside it and the frame energy at the given qubit frequency.
///
/// For the two-photon |1,0,e> <-> |0,2,g> process on the Jaynes-Cummings model
/// the state list is the four JC-connected states; otherwise it has six states.
struct ProcessSetup {
  std::pair<BasisLabel, BasisLabel> pair;
  std::vector<BasisLabel> subspace;
  std::pair<Eigen::Index, Eigen::Index> kept;
  double frame_energy = 0.0;
};

ProcessSetup process_setup(ConversionProcess process, ModelKind kind, const ModelParams& p);

/// Closed-form coupling of `process` for the model `kind` on resonance.
/// Single-photon uses p.omega_q as given; the two-photon forms assume the
/// resonance condition implicitly.
double geff_closed_form(ConversionProcess process, ModelKind kind, const ModelParams& p);

}  // namespace freqconv

#endif  // FREQCONV_EFFCOUPLING_HPP
