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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "freqconv/dynamics.hpp"
#include "freqconv/effcoupling.hpp"
#include "freqconv/scenario.hpp"
#include "freqconv/spectrum.hpp"

using namespace freqconv;

namespace {

/// Time of the n_b maximum after tuning into resonance, in units of pi / (2 |g_eff|).
double transfer_time_ratio(const std::string& preset) {
  const auto s = load_preset(preset);
  const auto process = *s.process;
  const auto p = s.params.with_omega_q(nominal_resonance(process, s.params.omega_a, s.params.omega_b));
  const auto setup = process_setup(process, s.model, p);
  const auto found = locate_anticrossing(s.model, s.params, setup.pair, search_window(s, process), s.space);
  const double half_period = std::numbers::pi / (2 * std::abs(geff_closed_form(process, s.model, p)));

  const std::vector<ProtocolSegment> segments{{s.detuned_omega_q, s.lead_time},
                                              {found.omega_q_star, 1.2 * half_period}};
  ProtocolOptions options;
  options.sample_dt = 0.5;
  const auto run = run_protocol(segments, s.initial.value_or(setup.pair.first), s.model, s.params, s.space, {},
                                options);
  double best_t = 0.0;
  double best = -1.0;
  for (const auto& r : run.series.records) {
    if (r.t > s.lead_time && r.n_b > best) {
      best = r.n_b;
      best_t = r.t;
    }
  }
  return (best_t - s.lead_time) / half_period;
}

}  // namespace

TEST(TransferTime, single_photon) { EXPECT_NEAR(transfer_time_ratio("fig3b"), 1.0, 0.05); }

TEST(TransferTime, two_photon_ge) { EXPECT_NEAR(transfer_time_ratio("fig5b"), 1.0, 0.05); }

TEST(TransferTime, two_photon_eg) { EXPECT_NEAR(transfer_time_ratio("fig7b"), 1.0, 0.05); }
