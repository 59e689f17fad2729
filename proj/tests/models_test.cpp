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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "freqconv/errors.hpp"
#include "test_util.hpp"

using namespace freqconv;
using freqconv::testing::max_abs;
using freqconv::testing::uniform;

namespace {

ModelParams random_params() {
  ModelParams p;
  p.omega_a = uniform(1.5, 5);
  p.omega_b = uniform(0.5, 3);
  p.omega_q = uniform(0.1, 2);
  p.g_a = uniform(0, 0.4);
  p.g_b = uniform(0, 0.4);
  p.theta = uniform(-std::numbers::pi, std::numbers::pi);
  return p;
}

}  // namespace

TEST(Models, kind_names_roundtrip) {
  for (auto kind : {ModelKind::generalized_rabi, ModelKind::quantum_rabi, ModelKind::jaynes_cummings}) {
    EXPECT_EQ(parse_model_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_model_kind("rabi"), DomainError);
}

TEST(Models, params_validation) {
  ModelParams p;
  EXPECT_NO_THROW(p.validate());
  EXPECT_THROW(p.with_omega_q(-0.1).validate(), DomainError);
  EXPECT_THROW(p.with_coupling(-0.1).validate(), DomainError);
  p.omega_a = std::nan("");
  EXPECT_THROW(p.validate(), DomainError);
}

TEST(Models, hermitian_for_random_parameters) {
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_params();
    for (auto kind : {ModelKind::generalized_rabi, ModelKind::quantum_rabi, ModelKind::jaynes_cummings}) {
      EXPECT_TRUE(is_hermitian(build_hamiltonian(kind, p, SpaceConfig{4, 5})));
    }
  }
}

TEST(Models, uncoupled_hamiltonian_is_bare_energies) {
  ModelParams p;
  p.theta = 0.7;
  const SpaceConfig cfg;
  const auto h = build_hamiltonian(ModelKind::generalized_rabi, p, cfg);
  EXPECT_EQ(max_abs(h - OperatorMatrix(h.diagonal().asDiagonal())), 0.0);
  for (Eigen::Index i = 0; i < cfg.dimension(); ++i) {
    const auto l = label_of(i, cfg);
    const double expected = 3.0 * l.n_a + 2.0 * l.n_b + (l.q == QubitLevel::e ? 0.5 : -0.5);
    EXPECT_DOUBLE_EQ(h(i, i).real(), expected);
  }
}

TEST(Models, quantum_rabi_ignores_theta) {
  auto p = ModelParams{}.with_coupling(0.2);
  p.theta = 1.1;
  auto p0 = p;
  p0.theta = 0.0;
  const SpaceConfig cfg;
  EXPECT_EQ(max_abs(build_hamiltonian(ModelKind::quantum_rabi, p, cfg) -
                    build_hamiltonian(ModelKind::generalized_rabi, p0, cfg)),
            0.0);
}

TEST(Models, matrix_elements) {
  auto p = ModelParams{}.with_coupling(0.15);
  p.theta = std::numbers::pi / 6;
  const SpaceConfig cfg;
  const auto h = build_hamiltonian(ModelKind::generalized_rabi, p, cfg);
  const auto at = [&](BasisLabel x, BasisLabel y) { return h(index_of(x, cfg), index_of(y, cfg)).real(); };
  using Q = QubitLevel;
  // transverse flip with one a photon
  EXPECT_NEAR(at({1, 0, Q::g}, {0, 0, Q::e}), 0.15 * std::cos(p.theta), 1e-15);
  // longitudinal term keeps the qubit state, sign follows sz
  EXPECT_NEAR(at({1, 0, Q::g}, {0, 0, Q::g}), -0.15 * std::sin(p.theta), 1e-15);
  EXPECT_NEAR(at({0, 2, Q::e}, {0, 1, Q::e}), 0.15 * std::sqrt(2.0) * std::sin(p.theta), 1e-15);
  // no direct resonator-resonator term
  EXPECT_EQ(at({1, 0, Q::g}, {0, 1, Q::g}), 0.0);
}

TEST(Models, jaynes_cummings_conserves_excitations) {
  for (int trial = 0; trial < 10; ++trial) {
    const SpaceConfig cfg{5, 4};
    const auto h = build_hamiltonian(ModelKind::jaynes_cummings, random_params(), cfg);
    const auto n = excitation_number(cfg);
    EXPECT_LT(max_abs(h * n - n * h), 1e-13);
  }
}

TEST(Models, quantum_rabi_conserves_parity) {
  for (int trial = 0; trial < 10; ++trial) {
    const SpaceConfig cfg{5, 4};
    const auto h = build_hamiltonian(ModelKind::quantum_rabi, random_params(), cfg);
    const auto parity = parity_operator(cfg);
    EXPECT_LT(max_abs(h * parity - parity * h), 1e-13);
  }
}

TEST(Models, longitudinal_coupling_breaks_parity) {
  auto p = ModelParams{}.with_coupling(0.15);
  p.theta = std::numbers::pi / 6;
  const SpaceConfig cfg;
  const auto h = build_hamiltonian(ModelKind::generalized_rabi, p, cfg);
  const auto parity = parity_operator(cfg);
  EXPECT_GT(max_abs(h * parity - parity * h), 0.1);
}

TEST(Models, qubit_sweep_family_matches_direct_build) {
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = random_params();
    const SpaceConfig cfg{4, 4};
    const auto family = split_qubit_frequency(ModelKind::generalized_rabi, p, cfg);
    for (double w : {0.0, 0.37, 1.9}) {
      EXPECT_LT(max_abs(family.at(w) - build_hamiltonian(ModelKind::generalized_rabi, p.with_omega_q(w), cfg)),
                1e-14);
    }
  }
}

TEST(Models, project_subspace_picks_elements) {
  const SpaceConfig cfg;
  auto p = ModelParams{}.with_coupling(0.1);
  p.theta = 0.4;
  const auto h = build_hamiltonian(ModelKind::generalized_rabi, p, cfg);
  const std::vector<BasisLabel> labels{{0, 1, QubitLevel::e}, {1, 0, QubitLevel::g}, {0, 0, QubitLevel::e}};
  const auto small = project_subspace(h, labels, cfg);
  ASSERT_EQ(small.rows(), 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(small(i, j), h(index_of(labels[i], cfg), index_of(labels[j], cfg)));
  }
  const std::vector<BasisLabel> dup{labels[0], labels[0]};
  EXPECT_THROW(project_subspace(h, dup, cfg), DomainError);
}

TEST(Models, project_subspace_of_everything_is_identity_map) {
  const SpaceConfig cfg{3, 4};
  const auto h = build_hamiltonian(ModelKind::quantum_rabi, ModelParams{}.with_coupling(0.2), cfg);
  std::vector<BasisLabel> all;
  for (Eigen::Index i = 0; i < cfg.dimension(); ++i) all.push_back(label_of(i, cfg));
  EXPECT_EQ(max_abs(project_subspace(h, all, cfg) - h), 0.0);
}
