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


#include "freqconv/effcoupling.hpp"

#include <cmath>
#include <string>

#include "freqconv/errors.hpp"

namespace freqconv {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

double checked_ratio(double num, double den, double scale, const char* what) {
  if (!std::isfinite(den) || std::abs(den) <= 1e-15 * scale) {
    throw DomainError(std::string(what) + ": vanishing denominator");
  }
  return num / den;
}

/// Shared closed form of both Rabi two-photon processes.
double two_photon_rabi(double g_a, double g_b, double w_a, double w_b, const char* what) {
  const double ga2 = g_a * g_a;
  const double gb2 = g_b * g_b;
  const double d = w_a - w_b;
  const double t1 = 2.0 * w_b * w_b * (ga2 + d * d);
  const double t2 = gb2 * gb2;
  const double t3 = 3.0 * gb2 * w_b * (w_b - w_a);
  const double num = g_a * gb2 * (ga2 - 3.0 * gb2 + 4.0 * w_b * (w_a - 2.0 * w_b));
  return checked_ratio(num, kSqrt2 * (t1 + t2 + t3), std::abs(t1) + std::abs(t2) + std::abs(t3), what);
}

}  // namespace

double geff_single_photon(const ModelParams& p) {
  const double w_a = p.omega_a;
  const double w_b = p.omega_b;
  const double w_q = p.omega_q;
  const double scale = std::abs(w_a) + std::abs(w_q) + std::abs(w_b);
  if (std::abs(w_a - w_q) <= 1e-15 * scale) {
    throw DomainError("geff_single_photon: pole at omega_q = omega_a");
  }
  if (std::abs(w_b + w_q) <= 1e-15 * scale) {
    throw DomainError("geff_single_photon: pole at omega_b + omega_q = 0");
  }
  if (w_a == 0.0 || w_b == 0.0) throw DomainError("geff_single_photon: resonator frequencies must be nonzero");
  const double paths = 1.0 / (w_a - w_q) + 1.0 / w_b - 1.0 / w_a - 1.0 / (w_b + w_q);
  return 0.5 * p.g_a * p.g_b * std::sin(2.0 * p.theta) * paths;
}

double geff_two_photon_ge(double g_a, double g_b, double omega_a, double omega_b) {
  return two_photon_rabi(g_a, g_b, omega_a, omega_b, "geff_two_photon_ge");
}

double geff_two_photon_eg_rabi(double g_a, double g_b, double omega_a, double omega_b) {
  return two_photon_rabi(g_a, g_b, omega_a, omega_b, "geff_two_photon_eg_rabi");
}

double geff_two_photon_eg_jc(double g_a, double g_b, double omega_a, double omega_b) {
  const double d = omega_a - omega_b;
  const double den = g_a * g_a + d * d;
  if (!(den > 0.0)) throw DomainError("geff_two_photon_eg_jc: g_a^2 + (omega_a - omega_b)^2 must be > 0");
  return -kSqrt2 * g_a * g_b * g_b / den;
}

double geff_two_photon_leading_order(double g, double omega_a, double omega_b) {
  const double d = omega_a - omega_b;
  return checked_ratio(kSqrt2 * g * g * g * (omega_a - 2.0 * omega_b), omega_b * d * d,
                       std::abs(omega_b) * (omega_a * omega_a + omega_b * omega_b), "geff_two_photon_leading_order");
}

EffectiveTwoLevel adiabatic_eliminate(const OperatorMatrix& h_small, std::pair<Eigen::Index, Eigen::Index> kept,
                                      double frame_energy) {
  const Eigen::Index n = h_small.rows();
  if (h_small.cols() != n || n < 2) throw DomainError("adiabatic_eliminate: need a square matrix of size >= 2");
  if (!is_hermitian(h_small)) throw DomainError("adiabatic_eliminate: matrix is not Hermitian");
  const auto [k1, k2] = kept;
  if (k1 < 0 || k2 < 0 || k1 >= n || k2 >= n || k1 == k2) {
    throw DomainError("adiabatic_eliminate: kept indices must be distinct and in range");
  }

  OperatorMatrix shifted = h_small;
  shifted.diagonal().array() -= frame_energy;

  std::vector<Eigen::Index> elim;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i != k1 && i != k2) elim.push_back(i);
  }
  const Eigen::Index keep_idx[2] = {k1, k2};
  const auto m = static_cast<Eigen::Index>(elim.size());

  Eigen::Matrix2cd h_kk;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) h_kk(i, j) = shifted(keep_idx[i], keep_idx[j]);
  }
  if (m > 0) {
    OperatorMatrix d_ee(m, m);
    OperatorMatrix h_ek(m, 2);
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) d_ee(i, j) = shifted(elim[i], elim[j]);
      for (int j = 0; j < 2; ++j) h_ek(i, j) = shifted(elim[i], keep_idx[j]);
    }
    const Eigen::PartialPivLU<OperatorMatrix> lu(d_ee);
    if (!(lu.rcond() > 1e-13)) {
      throw EliminationError("adiabatic_eliminate: an eliminated level is resonant with the frame");
    }
    // v_E = -D_EE^{-1} H_EK v_K
    const OperatorMatrix response = lu.solve(h_ek);
    h_kk -= h_ek.adjoint() * response;
  }
  return {h_kk(0, 0).real(), h_kk(1, 1).real(), h_kk(0, 1).real()};
}

std::string_view to_string(ConversionProcess process) {
  switch (process) {
    case ConversionProcess::single_photon:
      return "single_photon";
    case ConversionProcess::two_photon_ge:
      return "two_photon_ge";
    case ConversionProcess::two_photon_eg:
      return "two_photon_eg";
  }
  return "unknown";
}

ConversionProcess parse_conversion_process(std::string_view text) {
  for (auto p : {ConversionProcess::single_photon, ConversionProcess::two_photon_ge, ConversionProcess::two_photon_eg}) {
    if (text == to_string(p)) return p;
  }
  throw DomainError("unknown conversion process '" + std::string(text) +
                    "' (expected single_photon, two_photon_ge or two_photon_eg)");
}

double nominal_resonance(ConversionProcess process, double omega_a, double omega_b) {
  switch (process) {
    case ConversionProcess::single_photon:
      return omega_a - omega_b;
    case ConversionProcess::two_photon_ge:
      return omega_a - 2.0 * omega_b;
    case ConversionProcess::two_photon_eg:
      return 2.0 * omega_b - omega_a;
  }
  return 0.0;
}

ProcessSetup process_setup(ConversionProcess process, ModelKind kind, const ModelParams& p) {
  using enum QubitLevel;
  ProcessSetup s;
  switch (process) {
    case ConversionProcess::single_photon:
      s.pair = {{1, 0, g}, {0, 1, e}};
      s.subspace = {{0, 0, g}, {0, 0, e}, {1, 0, g}, {0, 1, e}, {1, 1, g}, {1, 1, e}};
      s.kept = {2, 3};
      s.frame_energy = p.omega_a - 0.5 * p.omega_q;
      break;
    case ConversionProcess::two_photon_ge:
      s.pair = {{1, 0, g}, {0, 2, e}};
      s.subspace = {{0, 0, e}, {0, 1, g}, {1, 0, g}, {0, 2, e}, {1, 1, e}, {1, 2, g}};
      s.kept = {2, 3};
      s.frame_energy = p.omega_a - 0.5 * p.omega_q;
      break;
    case ConversionProcess::two_photon_eg:
      s.pair = {{1, 0, e}, {0, 2, g}};
      if (kind == ModelKind::jaynes_cummings) {
        s.subspace = {{0, 1, e}, {1, 0, e}, {0, 2, g}, {1, 1, g}};
        s.kept = {1, 2};
      } else {
        s.subspace = {{0, 0, g}, {0, 1, e}, {1, 0, e}, {0, 2, g}, {1, 1, g}, {1, 2, e}};
        s.kept = {2, 3};
      }
      s.frame_energy = p.omega_a + 0.5 * p.omega_q;
      break;
  }
  return s;
}

double geff_closed_form(ConversionProcess process, ModelKind kind, const ModelParams& p) {
  switch (process) {
    case ConversionProcess::single_photon: {
      if (kind == ModelKind::jaynes_cummings) return 0.0;
      ModelParams q = p;
      if (kind == ModelKind::quantum_rabi) q.theta = 0.0;
      return geff_single_photon(q);
    }
    case ConversionProcess::two_photon_ge:
      if (kind == ModelKind::jaynes_cummings) return 0.0;
      return geff_two_photon_ge(p.g_a, p.g_b, p.omega_a, p.omega_b);
    case ConversionProcess::two_photon_eg:
      if (kind == ModelKind::jaynes_cummings) return geff_two_photon_eg_jc(p.g_a, p.g_b, p.omega_a, p.omega_b);
      return geff_two_photon_eg_rabi(p.g_a, p.g_b, p.omega_a, p.omega_b);
  }
  return 0.0;
}

}  // namespace freqconv
