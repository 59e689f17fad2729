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

#include "freqconv/models.hpp"

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "freqconv/errors.hpp"

namespace freqconv {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::generalized_rabi:
      return "generalized_rabi";
    case ModelKind::quantum_rabi:
      return "quantum_rabi";
    case ModelKind::jaynes_cummings:
      return "jaynes_cummings";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view text) {
  for (auto kind : {ModelKind::generalized_rabi, ModelKind::quantum_rabi, ModelKind::jaynes_cummings}) {
    if (text == to_string(kind)) return kind;
  }
  throw DomainError("unknown model kind '" + std::string(text) +
                    "' (expected generalized_rabi, quantum_rabi or jaynes_cummings)");
}

void ModelParams::validate() const {
  for (double v : {omega_a, omega_b, omega_q, g_a, g_b, theta}) {
    if (!std::isfinite(v)) throw DomainError("model parameters must be finite");
  }
  if (omega_a <= 0.0) throw DomainError("omega_a must be > 0");
  if (omega_b <= 0.0) throw DomainError("omega_b must be > 0");
  if (omega_q < 0.0) throw DomainError("omega_q must be >= 0");
  if (g_a < 0.0) throw DomainError("g_a must be >= 0");
  if (g_b < 0.0) throw DomainError("g_b must be >= 0");
}

OperatorMatrix build_hamiltonian(ModelKind kind, const ModelParams& p, const SpaceConfig& cfg) {
  p.validate();
  cfg.validate();

  const OperatorMatrix a = lift(annihilator(cfg.cutoff_a), Slot::a, cfg);
  const OperatorMatrix b = lift(annihilator(cfg.cutoff_b), Slot::b, cfg);
  const OperatorMatrix sz = lift(qubit_operator(QubitOp::sigma_z), Slot::qubit, cfg);

  OperatorMatrix h = p.omega_a * (a.adjoint() * a) + p.omega_b * (b.adjoint() * b) + (0.5 * p.omega_q) * sz;

  if (kind == ModelKind::jaynes_cummings) {
    const OperatorMatrix sp = lift(qubit_operator(QubitOp::sigma_plus), Slot::qubit, cfg);
    const OperatorMatrix sm = lift(qubit_operator(QubitOp::sigma_minus), Slot::qubit, cfg);
    h += p.g_a * (a * sp + a.adjoint() * sm);
    h += p.g_b * (b * sp + b.adjoint() * sm);
    return h;
  }

  const double theta = kind == ModelKind::quantum_rabi ? 0.0 : p.theta;
  const OperatorMatrix sx = lift(qubit_operator(QubitOp::sigma_x), Slot::qubit, cfg);
  const OperatorMatrix field = p.g_a * (a + a.adjoint()) + p.g_b * (b + b.adjoint());
  const OperatorMatrix qubit = std::cos(theta) * sx + std::sin(theta) * sz;
  h += field * qubit;
  return h;
}

QubitSweepHamiltonian split_qubit_frequency(ModelKind kind, const ModelParams& p,
                                            const SpaceConfig& cfg) {
  QubitSweepHamiltonian out;
  out.fixed = build_hamiltonian(kind, p.with_omega_q(0.0), cfg);
  out.qubit_half_sz = 0.5 * lift(qubit_operator(QubitOp::sigma_z), Slot::qubit, cfg);
  return out;
}

OperatorMatrix project_subspace(const OperatorMatrix& h, std::span<const BasisLabel> labels,
                                const SpaceConfig& cfg) {
  if (h.rows() != cfg.dimension() || h.cols() != cfg.dimension()) {
    throw DomainError("project_subspace: matrix does not match the space dimension");
  }
  std::vector<Eigen::Index> idx;
  idx.reserve(labels.size());
  std::set<BasisLabel> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw DomainError("project_subspace: duplicate label " + label.to_string());
    }
    idx.push_back(index_of(label, cfg));
  }
  const auto n = static_cast<Eigen::Index>(idx.size());
  OperatorMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = h(idx[i], idx[j]);
  }
  return out;
}

OperatorMatrix parity_operator(const SpaceConfig& cfg) {
  cfg.validate();
  OperatorMatrix parity = OperatorMatrix::Zero(cfg.dimension(), cfg.dimension());
  for (Eigen::Index i = 0; i < cfg.dimension(); ++i) {
    const auto label = label_of(i, cfg);
    const double qubit = label.q == QubitLevel::e ? 1.0 : -1.0;
    const double photons = (label.n_a + label.n_b) % 2 == 0 ? 1.0 : -1.0;
    parity(i, i) = qubit * photons;
  }
  return parity;
}

OperatorMatrix excitation_number(const SpaceConfig& cfg) {
  cfg.validate();
  OperatorMatrix n = OperatorMatrix::Zero(cfg.dimension(), cfg.dimension());
  for (Eigen::Index i = 0; i < cfg.dimension(); ++i) {
    const auto label = label_of(i, cfg);
    n(i, i) = label.n_a + label.n_b + (label.q == QubitLevel::e ? 1 : 0);
  }
  return n;
}

}  // namespace freqconv
