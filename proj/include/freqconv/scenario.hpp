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


#ifndef FREQCONV_SCENARIO_HPP
#define FREQCONV_SCENARIO_HPP

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "freqconv/dynamics.hpp"
#include "freqconv/effcoupling.hpp"
#include "freqconv/fockspace.hpp"
#include "freqconv/models.hpp"
#include "freqconv/spectrum.hpp"

namespace freqconv {

// A scenario is one flat JSON object. Frequencies, rates and times are in
// units of the reference qubit frequency; omega_q_ref is the resting qubit
// frequency in those units (1 for every bundled preset).
//
// Required keys:
//   model, omega_a, omega_b, omega_q_ref, g_a, g_b, theta,
//   cutoff_a, cutoff_b, kappa_a, kappa_b, gamma, task
// Optional keys:
//   name                          output file prefix, [A-Za-z0-9_.-], default "scenario"
//   process                       single_photon | two_photon_ge | two_photon_eg
//   window_lo, window_hi          anticrossing search window (default nominal resonance +- 0.5)
//   omega_q_min, omega_q_max, omega_q_points, track      spectrum-sweep
//   g_min, g_max, g_points                               geff-compare
//   initial, detuned_omega_q, lead_time, resonant_omega_q,
//   resonant_time, tail_time                             protocol
//   target, omega_start, omega_end, sweep_time, segments adiabatic-sweep
//   sample_dt, dt                                        protocol and adiabatic-sweep
// resonant_omega_q, resonant_time and sweep_time also accept "auto".

enum class Task { spectrum_sweep, anticrossing, geff_compare, protocol, adiabatic_sweep };

std::string_view to_string(Task task);
/// Accepts "spectrum-sweep", "anticrossing", "geff-compare", "protocol",
/// "adiabatic-sweep". Throws DomainError.
Task parse_task(std::string_view text);

struct Scenario {
  std::string name = "scenario";
  ModelKind model = ModelKind::generalized_rabi;
  ModelParams params;
  SpaceConfig space;
  DecoherenceRates rates;
  Task task = Task::spectrum_sweep;
  std::optional<ConversionProcess> process;
  std::optional<SearchWindow> window;

  double omega_q_min = 0.0;
  double omega_q_max = 2.0;
  int omega_q_points = 201;
  std::vector<BasisLabel> track;

  double g_min = 0.01;
  double g_max = 0.2;
  int g_points = 20;

  std::optional<BasisLabel> initial;
  double detuned_omega_q = 0.8;
  double lead_time = 100.0;
  /// Empty means "auto": the numerical anticrossing location.
  std::optional<double> resonant_omega_q;
  /// Empty means "auto": pi / (2 |g_eff|) from the closed form.
  std::optional<double> resonant_time;
  double tail_time = 100.0;

  std::optional<BasisLabel> target;
  double omega_start = 0.8;
  double omega_end = 1.2;
  /// Empty means "auto": 50 pi / (2 |g_eff|).
  std::optional<double> sweep_time;
  int segments = 1000;

  double sample_dt = 1.0;
  double dt = 0.0;

  /// Applies the --cutoff override to both resonators.
  void override_cutoff(int cutoff);
  /// Throws ConfigError naming the offending key.
  void validate() const;
};

/// Throws ConfigError for malformed JSON, missing or unknown keys, wrongly
/// typed values and invariant violations.
Scenario parse_config(std::string_view text);

std::vector<std::string> preset_names();
/// Raw JSON text of a bundled preset. Throws ConfigError for unknown names.
std::string_view preset_text(std::string_view name);
Scenario load_preset(std::string_view name);

/// Anticrossing search window for `process`, honouring window_lo/window_hi.
SearchWindow search_window(const Scenario& s, ConversionProcess process);

/// Runs the scenario's task, writes CSV files into `out_dir` (created if
/// missing) and a manifest `<name>_manifest.txt` with one
/// "filename<TAB>sha256" line per CSV. Returns the CSV paths followed by the
/// manifest path. Progress lines go to `log` when it is non-null.
std::vector<std::filesystem::path> run_scenario(const Scenario& s, const std::filesystem::path& out_dir,
                                                std::ostream* log = nullptr);

/// Lower-case hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

}  // namespace freqconv

#endif  // FREQCONV_SCENARIO_HPP
