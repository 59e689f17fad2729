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


#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "freqconv/errors.hpp"
#include "freqconv/scenario.hpp"

namespace {

constexpr int kExitOther = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw freqconv::ConfigError("config", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frequency conversion in ultrastrong cavity QED: spectra, effective couplings and dynamics"};
  app.name("freqconv");
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string preset;
  std::string out_dir = ".";
  int cutoff = 0;
  bool quiet = false;
  auto* config_opt = app.add_option("--config", config_path, "Scenario JSON file");
  auto* preset_opt = app.add_option("--preset", preset, "Bundled scenario")
                         ->check(CLI::IsMember(freqconv::preset_names()));
  config_opt->excludes(preset_opt);
  app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  app.add_option("--cutoff", cutoff, "Fock cutoff for both resonators (overrides the config)")
      ->check(CLI::Range(2, 64));
  app.add_flag("--quiet", quiet, "Suppress progress output");

  struct Command {
    const char* name;
    freqconv::Task task;
    const char* help;
  };
  const Command commands[] = {
      {"spectrum", freqconv::Task::spectrum_sweep, "Eigenvalues over a qubit-frequency grid"},
      {"anticross", freqconv::Task::anticrossing, "Locate the anticrossing of the configured process"},
      {"geff", freqconv::Task::geff_compare, "Closed-form vs numerical splitting over a coupling grid"},
      {"protocol", freqconv::Task::protocol, "Rapid-tune conversion dynamics"},
      {"sweep", freqconv::Task::adiabatic_sweep, "Adiabatic qubit-frequency sweep"},
  };
  for (const auto& c : commands) app.add_subcommand(c.name, c.help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (config_path.empty() && preset.empty()) throw freqconv::ConfigError("", "give --config <path> or --preset <name>");
    auto scenario = preset.empty() ? freqconv::parse_config(read_file(config_path)) : freqconv::load_preset(preset);
    for (const auto& c : commands) {
      if (app.got_subcommand(c.name)) scenario.task = c.task;
    }
    if (cutoff != 0) scenario.override_cutoff(cutoff);
    scenario.validate();

    const auto outputs = freqconv::run_scenario(scenario, out_dir, quiet ? nullptr : &std::cout);
    if (!quiet) {
      for (const auto& path : outputs) std::cout << "wrote " << path.string() << "\n";
    }
    return 0;
  } catch (const freqconv::ConfigError& e) {
    std::cerr << "freqconv: config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const freqconv::NumericalError& e) {
    std::cerr << "freqconv: numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "freqconv: error: " << e.what() << "\n";
    return kExitOther;
  }
}
