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

#ifndef FREQCONV_SPECTRUM_HPP
#define FREQCONV_SPECTRUM_HPP

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "freqconv/fockspace.hpp"
#include "freqconv/models.hpp"

namespace freqconv {

/// Ascending energies with orthonormal eigenvectors stored column-wise.
struct EigenSystem {
  Eigen::VectorXd energies;
  OperatorMatrix vectors;

  Eigen::Index size() const { return energies.size(); }
  auto vector(Eigen::Index j) const { return vectors.col(j); }
};

/// Hermitian eigendecomposition. Throws DomainError for non-Hermitian input.
EigenSystem diagonalize(const OperatorMatrix& h);

struct LevelMatch {
  Eigen::Index index = 0;
  /// |<bare|v_index>|^2
  double overlap = 0.0;
};

/// Eigenvector with the largest bare-state weight; ties go to the lower energy.
LevelMatch identify_level(const EigenSystem& es, const BasisLabel& bare, const SpaceConfig& cfg);

/// The two eigenvectors carrying the most weight in span{first, second},
/// ordered by energy. Unlike two independent identify_level calls this stays
/// well defined at the centre of an anticrossing, where both hybridised
/// levels overlap each bare state by about one half.
struct BranchPair {
  Eigen::Index lo = 0;
  Eigen::Index hi = 0;
};

BranchPair identify_pair(const EigenSystem& es, const BasisLabel& first, const BasisLabel& second,
                         const SpaceConfig& cfg);

struct SweepRow {
  double omega_q = 0.0;
  Eigen::VectorXd energies;
  std::vector<Eigen::Index> tracked;
  std::vector<double> overlaps;
};

struct SweepTable {
  std::vector<BasisLabel> tracked_labels;
  std::vector<SweepRow> rows;
};

/// Eigenvalues at each grid point plus the level index of each tracked bare label.
/// The grid must be sorted ascending (DomainError otherwise).
SweepTable sweep_levels(ModelKind kind, const ModelParams& p, std::span<const double> omega_q_grid,
                        std::span<const BasisLabel> track, const SpaceConfig& cfg);

/// CSV: omega_q, E_0..E_{d-1}, then one index column per tracked label.
void write_sweep_csv(const SweepTable& table, std::ostream& out);

struct AnticrossingResult {
  double omega_q_star = 0.0;
  double delta_min = 0.0;
  Eigen::Index level_lo = 0;
  Eigen::Index level_hi = 0;

  double geff_numeric() const { return 0.5 * delta_min; }
};

struct SearchWindow {
  double lo = 0.0;
  double hi = 0.0;
};

/// Energy gap between the branches of `pair` at p.omega_q.
double pair_gap(ModelKind kind, const ModelParams& p, const std::pair<BasisLabel, BasisLabel>& pair,
                const SpaceConfig& cfg);

/// Minimum of the gap between the two branches of `pair` over the qubit frequency.
///
/// A coarse scan of `scan_points` equally spaced frequencies brackets the
/// minimum, then golden-section search refines it to a relative tolerance of
/// 1e-8 in omega_q. Throws SearchError when the coarse minimum sits on the
/// window edge.
AnticrossingResult locate_anticrossing(ModelKind kind, const ModelParams& p,
                                       const std::pair<BasisLabel, BasisLabel>& pair, SearchWindow window,
                                       const SpaceConfig& cfg, int scan_points = 201);

}  // namespace freqconv

#endif  // FREQCONV_SPECTRUM_HPP
