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

#include "freqconv/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "freqconv/csv.hpp"
#include "freqconv/errors.hpp"

namespace freqconv {

EigenSystem diagonalize(const OperatorMatrix& h) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw DomainError("diagonalize: matrix must be square and non-empty");
  }
  if (!is_hermitian(h)) {
    throw DomainError("diagonalize: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("diagonalize: eigensolver did not converge");
  }
  return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

LevelMatch identify_level(const EigenSystem& es, const BasisLabel& bare, const SpaceConfig& cfg) {
  const auto row = index_of(bare, cfg);
  LevelMatch best;
  best.overlap = -1.0;
  for (Eigen::Index j = 0; j < es.size(); ++j) {
    const double w = std::norm(es.vectors(row, j));
    // Strict comparison keeps the lower-energy level on ties.
    if (w > best.overlap) best = {j, w};
  }
  return best;
}

BranchPair identify_pair(const EigenSystem& es, const BasisLabel& first, const BasisLabel& second,
                         const SpaceConfig& cfg) {
  if (first == second) throw DomainError("identify_pair: labels must differ");
  if (es.size() < 2) throw DomainError("identify_pair: need at least two levels");
  const auto r1 = index_of(first, cfg);
  const auto r2 = index_of(second, cfg);
  Eigen::Index top = -1;
  Eigen::Index next = -1;
  double w_top = -1.0;
  double w_next = -1.0;
  for (Eigen::Index j = 0; j < es.size(); ++j) {
    const double w = std::norm(es.vectors(r1, j)) + std::norm(es.vectors(r2, j));
    if (w > w_top) {
      next = top;
      w_next = w_top;
      top = j;
      w_top = w;
    } else if (w > w_next) {
      next = j;
      w_next = w;
    }
  }
  return {std::min(top, next), std::max(top, next)};
}

SweepTable sweep_levels(ModelKind kind, const ModelParams& p, std::span<const double> omega_q_grid,
                        std::span<const BasisLabel> track, const SpaceConfig& cfg) {
  if (!std::is_sorted(omega_q_grid.begin(), omega_q_grid.end())) {
    throw DomainError("sweep_levels: grid must be sorted ascending");
  }
  for (const auto& label : track) index_of(label, cfg);

  const auto family = split_qubit_frequency(kind, p, cfg);
  SweepTable table;
  table.tracked_labels.assign(track.begin(), track.end());
  table.rows.reserve(omega_q_grid.size());
  for (double w : omega_q_grid) {
    p.with_omega_q(w).validate();
    const auto es = diagonalize(family.at(w));
    SweepRow row;
    row.omega_q = w;
    row.energies = es.energies;
    for (const auto& label : track) {
      const auto match = identify_level(es, label, cfg);
      row.tracked.push_back(match.index);
      row.overlaps.push_back(match.overlap);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_sweep_csv(const SweepTable& table, std::ostream& out) {
  const Eigen::Index levels = table.rows.empty() ? 0 : table.rows.front().energies.size();
  CsvWriter csv(out);
  std::vector<std::string> header{"omega_q"};
  for (Eigen::Index j = 0; j < levels; ++j) header.push_back("E_" + std::to_string(j));
  for (const auto& label : table.tracked_labels) {
    header.push_back("idx_" + std::to_string(label.n_a) + "_" + std::to_string(label.n_b) + "_" +
                     (label.q == QubitLevel::e ? "e" : "g"));
  }
  csv.header(header);
  for (const auto& row : table.rows) {
    csv.begin_row();
    csv.field(row.omega_q);
    for (Eigen::Index j = 0; j < row.energies.size(); ++j) csv.field(row.energies(j));
    for (auto idx : row.tracked) csv.field(static_cast<long long>(idx));
    csv.end_row();
  }
}

namespace {

struct GapSample {
  double gap;
  BranchPair branches;
};

GapSample gap_at(const QubitSweepHamiltonian& family, double omega_q,
                 const std::pair<BasisLabel, BasisLabel>& pair, const SpaceConfig& cfg) {
  const auto es = diagonalize(family.at(omega_q));
  const auto branches = identify_pair(es, pair.first, pair.second, cfg);
  return {es.energies(branches.hi) - es.energies(branches.lo), branches};
}

}  // namespace

double pair_gap(ModelKind kind, const ModelParams& p, const std::pair<BasisLabel, BasisLabel>& pair,
                const SpaceConfig& cfg) {
  const auto es = diagonalize(build_hamiltonian(kind, p, cfg));
  const auto branches = identify_pair(es, pair.first, pair.second, cfg);
  return es.energies(branches.hi) - es.energies(branches.lo);
}

AnticrossingResult locate_anticrossing(ModelKind kind, const ModelParams& p,
                                       const std::pair<BasisLabel, BasisLabel>& pair, SearchWindow window,
                                       const SpaceConfig& cfg, int scan_points) {
  if (!(window.hi > window.lo) || window.lo < 0.0) {
    throw DomainError("locate_anticrossing: window must satisfy 0 <= lo < hi");
  }
  if (scan_points < 3) throw DomainError("locate_anticrossing: need at least 3 scan points");
  const auto family = split_qubit_frequency(kind, p, cfg);
  index_of(pair.first, cfg);
  index_of(pair.second, cfg);

  const double step = (window.hi - window.lo) / (scan_points - 1);
  int best = 0;
  double best_gap = 0.0;
  for (int i = 0; i < scan_points; ++i) {
    const double gap = gap_at(family, window.lo + i * step, pair, cfg).gap;
    if (i == 0 || gap < best_gap) {
      best = i;
      best_gap = gap;
    }
  }
  if (best == 0 || best == scan_points - 1) {
    throw SearchError("no interior gap minimum between " + pair.first.to_string() + " and " +
                      pair.second.to_string() + " in [" + std::to_string(window.lo) + ", " +
                      std::to_string(window.hi) + "]");
  }

  // Golden-section refinement on the bracketing grid cells.
  constexpr double kInvPhi = 0.6180339887498949;
  constexpr double kRelTol = 1e-8;
  double a = window.lo + (best - 1) * step;
  double b = window.lo + (best + 1) * step;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = gap_at(family, x1, pair, cfg).gap;
  double f2 = gap_at(family, x2, pair, cfg).gap;
  while (b - a > kRelTol * std::max(std::abs(0.5 * (a + b)), 1e-300)) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = gap_at(family, x1, pair, cfg).gap;
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = gap_at(family, x2, pair, cfg).gap;
    }
  }
  const double star = 0.5 * (a + b);
  const auto at_star = gap_at(family, star, pair, cfg);
  return {star, at_star.gap, at_star.branches.lo, at_star.branches.hi};
}

}  // namespace freqconv
