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


#ifndef FREQCONV_DYNAMICS_HPP
#define FREQCONV_DYNAMICS_HPP

#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

#include "freqconv/fockspace.hpp"
#include "freqconv/models.hpp"
#include "freqconv/spectrum.hpp"

namespace freqconv {

/// Relaxation rates of resonator a, resonator b and the qubit.
struct DecoherenceRates {
  double kappa_a = 0.0;
  double kappa_b = 0.0;
  double gamma = 0.0;

  void validate() const;
};

/// One dressed decay channel rate * D[|lower><upper|], lower < upper in energy order.
struct DissipatorChannel {
  double rate = 0.0;
  Eigen::Index lower = 0;
  Eigen::Index upper = 0;
};

using DressedDissipator = std::vector<DissipatorChannel>;

/// Energy-lowering part of `op` in the eigenbasis of `es`,
///   O+ = sum_{j<k} <j|O|k> |j><k|,
/// returned in the bare basis. Diagonal (zero-frequency) terms are excluded.
OperatorMatrix positive_part(const OperatorMatrix& op, const EigenSystem& es);
/// O- = (O+)^dagger.
OperatorMatrix negative_part(const OperatorMatrix& op, const EigenSystem& es);

/// Channels j < k with rate kappa_a |<j|X_a|k>|^2 + kappa_b |<j|X_b|k>|^2 + gamma |<j|sx|k>|^2,
/// X_a = a + a^+, X_b = b + b^+. Numerically zero rates (below 1e-13 of the
/// largest bare rate) are dropped.
DressedDissipator dressed_dissipators(const EigenSystem& es, const SpaceConfig& cfg, const DecoherenceRates& rates);

/// Largest step allowed for the fixed-step integrator: 2 pi / (50 max|E|).
double max_stable_step(const EigenSystem& es);

/// Master-equation generator for one segment of fixed Hamiltonian,
///   L(rho) = -i[H, rho] + sum_channels rate * D[|j><k|] rho,
/// stored in the dressed eigenbasis where the coherent part is diagonal.
/// In that basis a coherence rho_mn only decays and rotates, and populations
/// follow a triangular rate equation, so one evaluation or step is O(d^2).
class SegmentLiouvillian {
 public:
  SegmentLiouvillian(EigenSystem es, DressedDissipator channels);

  const EigenSystem& eigensystem() const { return es_; }
  const DressedDissipator& channels() const { return channels_; }

  /// out = L(rho) with both sides in the eigenbasis.
  void apply(const OperatorMatrix& rho, OperatorMatrix& out) const;
  /// L(rho) with rho and the result in the bare basis.
  OperatorMatrix apply_bare(const OperatorMatrix& rho_bare) const;

  OperatorMatrix to_eigenbasis(const OperatorMatrix& rho_bare) const;
  OperatorMatrix to_bare(const OperatorMatrix& rho_eig) const;

  /// One fixed step of fourth-order integrating-factor (Lawson) Runge-Kutta
  /// in the eigenbasis, followed by Hermitian symmetrisation. Coherences get
  /// their exact factor exp(L_mn dt); the population feed terms are
  /// integrated by classic RK4 in that frame.
  void step(OperatorMatrix& rho, double dt) const;

 private:
  void feed(const Eigen::VectorXd& populations, Eigen::VectorXd& out) const;

  EigenSystem es_;
  DressedDissipator channels_;
  OperatorMatrix coherence_;
  Eigen::VectorXd outflow_;

  mutable double cached_dt_ = 0.0;
  mutable OperatorMatrix factor_;
  mutable Eigen::VectorXd half_decay_, full_decay_;
  mutable Eigen::VectorXd p_, k1_, k2_, k3_, k4_, tmp_;
  mutable OperatorMatrix sym_;
};

struct DensitySample {
  double t = 0.0;
  OperatorMatrix rho;
};

/// Integrates the master equation for a fixed qubit frequency (p.omega_q).
///
/// rho0 must be Hermitian with unit trace and no eigenvalue below -1e-9
/// (DomainError otherwise); dt must not exceed max_stable_step of the
/// segment Hamiltonian. The step actually taken is duration / n for the
/// smallest n with duration / n <= dt, rounded up to a multiple of the number
/// of sample intervals when duration is a whole number of them.
/// Returns bare-basis samples at t = 0, every `sample_dt`, and at `duration`.
/// Throws StepSizeError when the trace drifts by more than 1e-6.
std::vector<DensitySample> propagate_segment(const OperatorMatrix& rho0, ModelKind kind, const ModelParams& p,
                                             const SpaceConfig& cfg, const DecoherenceRates& rates,
                                             double duration, double dt, double sample_dt);

/// Qubit frequency held for a fixed time.
struct ProtocolSegment {
  double omega_q = 1.0;
  double duration = 1.0;
};

/// A bare label (matched to the closest dressed state) or a dressed index.
using InitialState = std::variant<BasisLabel, Eigen::Index>;

struct TimeseriesRecord {
  double t = 0.0;
  double n_a = 0.0;
  double n_b = 0.0;
  double n_q = 0.0;
  double omega_q = 0.0;
};

struct Timeseries {
  std::vector<TimeseriesRecord> records;
  /// Largest |Tr rho - 1| seen at any step.
  double max_trace_drift = 0.0;
  /// Smallest density-matrix eigenvalue over all samples.
  double min_eigenvalue = 0.0;
};

/// CSV: t, n_a, n_b, n_q, omega_q.
void write_timeseries_csv(const Timeseries& series, std::ostream& out);

struct ProtocolOptions {
  double sample_dt = 1.0;
  /// Integration step; 0 picks max_stable_step for every segment.
  double dt = 0.0;
  bool check_positivity = true;
};

struct ProtocolRun {
  Timeseries series;
  /// Final state in the eigenbasis of the last segment.
  OperatorMatrix final_rho_eigen;
  EigenSystem final_eigensystem;
  /// |<bare|dressed>|^2 of the initial identification (1 for an index).
  double initial_overlap = 1.0;
};

/// Piecewise-constant qubit-frequency protocol with per-segment
/// re-diagonalisation and dissipator rebuild. Photon and qubit numbers are
/// <X_a^- X_a^+>, <X_b^- X_b^+>, <C^- C^+> in the active segment's eigenbasis.
/// Throws IdentificationError when a bare initial label overlaps its best
/// dressed match by less than 1/2.
ProtocolRun run_protocol(std::span<const ProtocolSegment> segments, const InitialState& initial, ModelKind kind,
                         const ModelParams& p_base, const SpaceConfig& cfg, const DecoherenceRates& rates,
                         const ProtocolOptions& options = {});

/// Linear qubit-frequency ramp approximated by `segments` constant pieces.
struct SweepProfile {
  double omega_start = 1.0;
  double omega_end = 1.0;
  double duration = 1.0;
  int segments = 1000;
};

struct AdiabaticSweepResult {
  ProtocolRun run;
  /// <t|rho_final|t> for the dressed state |t> best matching the target label
  /// at the final qubit frequency.
  double fidelity = 0.0;
};

/// Throws DomainError for fewer than 100 segments.
AdiabaticSweepResult adiabatic_sweep(const SweepProfile& profile, const InitialState& initial,
                                     const BasisLabel& target, ModelKind kind, const ModelParams& p_base,
                                     const SpaceConfig& cfg, const DecoherenceRates& rates,
                                     const ProtocolOptions& options = {});

}  // namespace freqconv

#endif  // FREQCONV_DYNAMICS_HPP
