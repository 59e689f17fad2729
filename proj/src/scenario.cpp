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


#include "freqconv/scenario.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "freqconv/csv.hpp"
#include "freqconv/errors.hpp"
#include "json.hpp"

namespace freqconv {

namespace {

using nlohmann::json;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "name",          "model",          "omega_a",         "omega_b",          "omega_q_ref",  "g_a",
      "g_b",           "theta",          "cutoff_a",        "cutoff_b",         "kappa_a",      "kappa_b",
      "gamma",         "task",           "process",         "window_lo",        "window_hi",    "omega_q_min",
      "omega_q_max",   "omega_q_points", "track",           "g_min",            "g_max",        "g_points",
      "initial",       "detuned_omega_q", "lead_time",      "resonant_omega_q", "resonant_time", "tail_time",
      "target",        "omega_start",    "omega_end",       "sweep_time",       "segments",     "sample_dt",
      "dt"};
  return keys;
}

const json* find(const json& obj, const std::string& key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const json& required(const json& obj, const std::string& key) {
  const auto* v = find(obj, key);
  if (v == nullptr) throw ConfigError(key, "missing required key");
  return *v;
}

double as_number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError(key, "expected a number, got " + v.dump());
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(key, "value must be finite");
  return d;
}

int as_int(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw ConfigError(key, "expected an integer, got " + v.dump());
  const auto n = v.get<long long>();
  if (n < -1000000000LL || n > 1000000000LL) throw ConfigError(key, "integer out of range");
  return static_cast<int>(n);
}

std::string as_string(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError(key, "expected a string, got " + v.dump());
  return v.get<std::string>();
}

std::optional<double> as_number_or_auto(const json& v, const std::string& key) {
  if (v.is_string()) {
    if (v.get<std::string>() == "auto") return std::nullopt;
    throw ConfigError(key, "expected a number or \"auto\", got " + v.dump());
  }
  return as_number(v, key);
}

BasisLabel as_label(const json& v, const std::string& key) {
  try {
    return BasisLabel::parse(as_string(v, key));
  } catch (const DomainError& e) {
    throw ConfigError(key, e.what());
  }
}

template <typename T, typename Parse>
T parse_enum(const json& v, const std::string& key, Parse parse) {
  try {
    return parse(as_string(v, key));
  } catch (const DomainError& e) {
    throw ConfigError(key, e.what());
  }
}

void set_number(const json& obj, const std::string& key, double& field) {
  if (const auto* v = find(obj, key)) field = as_number(*v, key);
}

void set_int(const json& obj, const std::string& key, int& field) {
  if (const auto* v = find(obj, key)) field = as_int(*v, key);
}

void set_auto(const json& obj, const std::string& key, std::optional<double>& field) {
  if (const auto* v = find(obj, key)) field = as_number_or_auto(*v, key);
}

void set_label(const json& obj, const std::string& key, std::optional<BasisLabel>& field) {
  if (const auto* v = find(obj, key)) field = as_label(*v, key);
}

void require(bool ok, const std::string& key, const std::string& what) {
  if (!ok) throw ConfigError(key, what);
}

void require_label(const std::optional<BasisLabel>& label, const std::string& key, const SpaceConfig& space) {
  if (label && !space.contains(*label)) throw ConfigError(key, label->to_string() + " lies outside the cutoffs");
}

struct OutputSet {
  std::filesystem::path dir;
  std::string prefix;
  std::vector<std::filesystem::path> paths;
  std::vector<std::pair<std::string, std::string>> manifest;

  void write(const std::string& suffix, const std::string& content) {
    const std::string filename = prefix + "_" + suffix;
    const auto path = dir / filename;
    std::ofstream out(path, std::ios::binary);
    out << content;
    out.close();
    if (!out) throw std::runtime_error("cannot write " + path.string());
    paths.push_back(path);
    manifest.emplace_back(filename, sha256_hex(content));
  }

  std::vector<std::filesystem::path> finish() {
    std::string text;
    for (const auto& [file, digest] : manifest) text += file + "\t" + digest + "\n";
    const auto path = dir / (prefix + "_manifest.txt");
    std::ofstream out(path, std::ios::binary);
    out << text;
    out.close();
    if (!out) throw std::runtime_error("cannot write " + path.string());
    paths.push_back(path);
    return paths;
  }
};

std::string fmt(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.6g", v);
  return buf.data();
}

ModelParams at_nominal(const Scenario& s, ConversionProcess process) {
  return s.params.with_omega_q(nominal_resonance(process, s.params.omega_a, s.params.omega_b));
}

double analytic_geff(const Scenario& s, ConversionProcess process, const ModelParams& p) {
  return geff_closed_form(process, s.model, p.with_omega_q(nominal_resonance(process, p.omega_a, p.omega_b)));
}

double half_period(double geff, const std::string& key) {
  if (geff == 0.0) throw ConfigError(key, "\"auto\" needs a nonzero closed-form coupling");
  return std::numbers::pi / (2.0 * std::abs(geff));
}

ConversionProcess need_process(const Scenario& s) {
  if (!s.process) throw ConfigError("process", "required for task " + std::string(to_string(s.task)));
  return *s.process;
}

void run_spectrum(const Scenario& s, OutputSet& out, std::ostream* log) {
  std::vector<double> grid(static_cast<std::size_t>(s.omega_q_points));
  for (int i = 0; i < s.omega_q_points; ++i) {
    grid[static_cast<std::size_t>(i)] =
        s.omega_q_min + (s.omega_q_max - s.omega_q_min) * i / static_cast<double>(s.omega_q_points - 1);
  }
  auto track = s.track;
  if (track.empty() && s.process) {
    const auto setup = process_setup(*s.process, s.model, at_nominal(s, *s.process));
    track = {setup.pair.first, setup.pair.second};
  }
  const auto table = sweep_levels(s.model, s.params, grid, track, s.space);
  std::ostringstream csv;
  write_sweep_csv(table, csv);
  out.write("spectrum.csv", csv.str());
  if (log) *log << "spectrum: " << grid.size() << " points, " << s.space.dimension() << " levels\n";
}

void run_anticrossing(const Scenario& s, OutputSet& out, std::ostream* log) {
  const auto process = need_process(s);
  const auto p = at_nominal(s, process);
  const auto setup = process_setup(process, s.model, p);
  const auto found = locate_anticrossing(s.model, s.params, setup.pair, search_window(s, process), s.space);
  const double analytic = std::abs(geff_closed_form(process, s.model, p));

  std::ostringstream text;
  CsvWriter csv(text);
  csv.header({"process", "omega_q_star", "delta_min", "geff_numeric", "geff_analytic", "level_lo", "level_hi"});
  csv.begin_row();
  csv.field(to_string(process));
  csv.field(found.omega_q_star);
  csv.field(found.delta_min);
  csv.field(found.geff_numeric());
  csv.field(analytic);
  csv.field(static_cast<long long>(found.level_lo));
  csv.field(static_cast<long long>(found.level_hi));
  csv.end_row();
  out.write("anticrossing.csv", text.str());
  if (log) {
    *log << "anticrossing: omega_q* = " << fmt(found.omega_q_star) << ", delta_min = " << fmt(found.delta_min)
         << ", 2 g_eff closed form = " << fmt(2.0 * analytic) << "\n";
  }
}

void run_geff(const Scenario& s, OutputSet& out, std::ostream* log) {
  const auto process = need_process(s);
  const bool with_jc = process == ConversionProcess::two_photon_eg;

  std::ostringstream text;
  CsvWriter csv(text);
  std::vector<std::string> header{"g", "analytic_value", "numeric_value", "omega_q_star"};
  if (with_jc) header.emplace_back("analytic_jc_value");
  csv.header(header);
  for (int i = 0; i < s.g_points; ++i) {
    const double g = s.g_points == 1 ? s.g_min : s.g_min + (s.g_max - s.g_min) * i / (s.g_points - 1.0);
    Scenario at_g = s;
    at_g.params = s.params.with_coupling(g);
    const auto p = at_nominal(at_g, process);
    const auto setup = process_setup(process, s.model, p);
    const auto found = locate_anticrossing(s.model, at_g.params, setup.pair, search_window(at_g, process), s.space);
    csv.begin_row();
    csv.field(g);
    csv.field(2.0 * std::abs(geff_closed_form(process, s.model, p)));
    csv.field(found.delta_min);
    csv.field(found.omega_q_star);
    if (with_jc) csv.field(2.0 * std::abs(geff_two_photon_eg_jc(g, g, p.omega_a, p.omega_b)));
    csv.end_row();
  }
  out.write("geff.csv", text.str());
  if (log) *log << "geff-compare: " << s.g_points << " coupling values\n";
}

ProtocolOptions protocol_options(const Scenario& s) {
  ProtocolOptions options;
  options.sample_dt = s.sample_dt;
  options.dt = s.dt;
  return options;
}

void write_run_files(const ProtocolRun& run, OutputSet& out) {
  std::ostringstream series;
  write_timeseries_csv(run.series, series);
  out.write("timeseries.csv", series.str());
}

void run_protocol_task(const Scenario& s, OutputSet& out, std::ostream* log) {
  const auto process = need_process(s);
  const auto p = at_nominal(s, process);
  const auto setup = process_setup(process, s.model, p);
  const double resonant_omega =
      s.resonant_omega_q ? *s.resonant_omega_q
                         : locate_anticrossing(s.model, s.params, setup.pair, search_window(s, process), s.space)
                               .omega_q_star;
  const double resonant_time =
      s.resonant_time ? *s.resonant_time : half_period(analytic_geff(s, process, s.params), "resonant_time");

  std::vector<ProtocolSegment> segments;
  if (s.lead_time > 0.0) segments.push_back({s.detuned_omega_q, s.lead_time});
  segments.push_back({resonant_omega, resonant_time});
  if (s.tail_time > 0.0) segments.push_back({s.detuned_omega_q, s.tail_time});

  const auto run = run_protocol(segments, s.initial.value_or(setup.pair.first), s.model, s.params, s.space,
                                s.rates, protocol_options(s));
  write_run_files(run, out);

  std::ostringstream text;
  CsvWriter csv(text);
  csv.header({"resonant_omega_q", "resonant_start", "resonant_time", "initial_overlap", "max_trace_drift",
              "min_eigenvalue"});
  csv.begin_row();
  csv.field(resonant_omega);
  csv.field(s.lead_time);
  csv.field(resonant_time);
  csv.field(run.initial_overlap);
  csv.field(run.series.max_trace_drift);
  csv.field(run.series.min_eigenvalue);
  csv.end_row();
  out.write("protocol.csv", text.str());
  if (log) {
    const auto& last = run.series.records.back();
    *log << "protocol: resonant omega_q = " << fmt(resonant_omega) << " for t = " << fmt(resonant_time)
         << "; final n_a = " << fmt(last.n_a) << ", n_b = " << fmt(last.n_b) << ", n_q = " << fmt(last.n_q)
         << "\n";
  }
}

void run_sweep_task(const Scenario& s, OutputSet& out, std::ostream* log) {
  const auto process = need_process(s);
  const auto setup = process_setup(process, s.model, at_nominal(s, process));
  SweepProfile profile;
  profile.omega_start = s.omega_start;
  profile.omega_end = s.omega_end;
  profile.duration =
      s.sweep_time ? *s.sweep_time : 50.0 * half_period(analytic_geff(s, process, s.params), "sweep_time");
  profile.segments = s.segments;

  const auto result = adiabatic_sweep(profile, s.initial.value_or(setup.pair.first),
                                      s.target.value_or(setup.pair.second), s.model, s.params, s.space, s.rates,
                                      protocol_options(s));
  write_run_files(result.run, out);

  std::ostringstream text;
  CsvWriter csv(text);
  csv.header({"fidelity", "sweep_time", "segments", "initial_overlap", "max_trace_drift", "min_eigenvalue"});
  csv.begin_row();
  csv.field(result.fidelity);
  csv.field(profile.duration);
  csv.field(static_cast<long long>(profile.segments));
  csv.field(result.run.initial_overlap);
  csv.field(result.run.series.max_trace_drift);
  csv.field(result.run.series.min_eigenvalue);
  csv.end_row();
  out.write("sweep.csv", text.str());
  if (log) *log << "adiabatic-sweep: fidelity = " << fmt(result.fidelity) << "\n";
}

}  // namespace

std::string_view to_string(Task task) {
  switch (task) {
    case Task::spectrum_sweep:
      return "spectrum-sweep";
    case Task::anticrossing:
      return "anticrossing";
    case Task::geff_compare:
      return "geff-compare";
    case Task::protocol:
      return "protocol";
    case Task::adiabatic_sweep:
      return "adiabatic-sweep";
  }
  return "unknown";
}

Task parse_task(std::string_view text) {
  for (auto task : {Task::spectrum_sweep, Task::anticrossing, Task::geff_compare, Task::protocol,
                    Task::adiabatic_sweep}) {
    if (text == to_string(task)) return task;
  }
  throw DomainError("unknown task '" + std::string(text) +
                    "' (expected spectrum-sweep, anticrossing, geff-compare, protocol or adiabatic-sweep)");
}

void Scenario::override_cutoff(int cutoff) {
  space.cutoff_a = cutoff;
  space.cutoff_b = cutoff;
}

void Scenario::validate() const {
  require(!name.empty() && name.front() != '.' &&
              std::all_of(name.begin(), name.end(),
                          [](char c) {
                            return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                                   c == '_' || c == '-' || c == '.';
                          }),
          "name", "must be nonempty, use only [A-Za-z0-9_.-] and not start with '.'");

  require(params.omega_a > 0.0, "omega_a", "must be > 0");
  require(params.omega_b > 0.0, "omega_b", "must be > 0");
  require(params.omega_q > 0.0, "omega_q_ref", "must be > 0");
  require(params.g_a >= 0.0, "g_a", "must be >= 0");
  require(params.g_b >= 0.0, "g_b", "must be >= 0");
  require(std::isfinite(params.theta), "theta", "must be finite");
  require(space.cutoff_a >= 2, "cutoff_a", "must be >= 2");
  require(space.cutoff_b >= 2, "cutoff_b", "must be >= 2");
  require(rates.kappa_a >= 0.0, "kappa_a", "must be >= 0");
  require(rates.kappa_b >= 0.0, "kappa_b", "must be >= 0");
  require(rates.gamma >= 0.0, "gamma", "must be >= 0");

  if (task != Task::spectrum_sweep && !process) {
    throw ConfigError("process", "required for task " + std::string(to_string(task)));
  }
  if (window) {
    require(window->lo >= 0.0, "window_lo", "must be >= 0");
    require(window->hi > window->lo, "window_hi", "must exceed window_lo");
  }

  require(omega_q_min >= 0.0, "omega_q_min", "must be >= 0");
  require(omega_q_max > omega_q_min, "omega_q_max", "must exceed omega_q_min");
  require(omega_q_points >= 2, "omega_q_points", "must be >= 2");
  for (const auto& label : track) require_label(label, "track", space);

  require(g_min > 0.0, "g_min", "must be > 0");
  require(g_max >= g_min, "g_max", "must be >= g_min");
  require(g_points >= 1, "g_points", "must be >= 1");

  require_label(initial, "initial", space);
  require(detuned_omega_q >= 0.0, "detuned_omega_q", "must be >= 0");
  require(lead_time >= 0.0, "lead_time", "must be >= 0");
  require(tail_time >= 0.0, "tail_time", "must be >= 0");
  require(!resonant_omega_q || *resonant_omega_q >= 0.0, "resonant_omega_q", "must be >= 0");
  require(!resonant_time || *resonant_time > 0.0, "resonant_time", "must be > 0");

  require_label(target, "target", space);
  require(omega_start >= 0.0, "omega_start", "must be >= 0");
  require(omega_end >= 0.0, "omega_end", "must be >= 0");
  require(!sweep_time || *sweep_time > 0.0, "sweep_time", "must be > 0");
  require(segments >= 100, "segments", "must be >= 100");

  require(sample_dt > 0.0, "sample_dt", "must be > 0");
  require(dt >= 0.0, "dt", "must be >= 0 (0 selects the stability bound)");
}

Scenario parse_config(std::string_view text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  if (!obj.is_object()) throw ConfigError("", "config must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    if (known_keys().count(key) == 0) throw ConfigError(key, "unknown key");
  }

  Scenario s;
  if (const auto* v = find(obj, "name")) s.name = as_string(*v, "name");
  s.model = parse_enum<ModelKind>(required(obj, "model"), "model", parse_model_kind);
  s.params.omega_a = as_number(required(obj, "omega_a"), "omega_a");
  s.params.omega_b = as_number(required(obj, "omega_b"), "omega_b");
  s.params.omega_q = as_number(required(obj, "omega_q_ref"), "omega_q_ref");
  s.params.g_a = as_number(required(obj, "g_a"), "g_a");
  s.params.g_b = as_number(required(obj, "g_b"), "g_b");
  s.params.theta = as_number(required(obj, "theta"), "theta");
  s.space.cutoff_a = as_int(required(obj, "cutoff_a"), "cutoff_a");
  s.space.cutoff_b = as_int(required(obj, "cutoff_b"), "cutoff_b");
  s.rates.kappa_a = as_number(required(obj, "kappa_a"), "kappa_a");
  s.rates.kappa_b = as_number(required(obj, "kappa_b"), "kappa_b");
  s.rates.gamma = as_number(required(obj, "gamma"), "gamma");
  s.task = parse_enum<Task>(required(obj, "task"), "task", parse_task);

  if (const auto* v = find(obj, "process")) {
    s.process = parse_enum<ConversionProcess>(*v, "process", parse_conversion_process);
  }
  const auto* lo = find(obj, "window_lo");
  const auto* hi = find(obj, "window_hi");
  if ((lo == nullptr) != (hi == nullptr)) {
    throw ConfigError(lo == nullptr ? "window_lo" : "window_hi", "window_lo and window_hi go together");
  }
  if (lo != nullptr) s.window = SearchWindow{as_number(*lo, "window_lo"), as_number(*hi, "window_hi")};

  set_number(obj, "omega_q_min", s.omega_q_min);
  set_number(obj, "omega_q_max", s.omega_q_max);
  set_int(obj, "omega_q_points", s.omega_q_points);
  if (const auto* v = find(obj, "track")) {
    if (!v->is_array()) throw ConfigError("track", "expected an array of labels like \"1,0,g\"");
    for (const auto& item : *v) s.track.push_back(as_label(item, "track"));
  }

  set_number(obj, "g_min", s.g_min);
  set_number(obj, "g_max", s.g_max);
  set_int(obj, "g_points", s.g_points);

  set_label(obj, "initial", s.initial);
  set_number(obj, "detuned_omega_q", s.detuned_omega_q);
  set_number(obj, "lead_time", s.lead_time);
  set_auto(obj, "resonant_omega_q", s.resonant_omega_q);
  set_auto(obj, "resonant_time", s.resonant_time);
  set_number(obj, "tail_time", s.tail_time);

  set_label(obj, "target", s.target);
  set_number(obj, "omega_start", s.omega_start);
  set_number(obj, "omega_end", s.omega_end);
  set_auto(obj, "sweep_time", s.sweep_time);
  set_int(obj, "segments", s.segments);

  set_number(obj, "sample_dt", s.sample_dt);
  set_number(obj, "dt", s.dt);

  s.validate();
  return s;
}

Scenario load_preset(std::string_view name) { return parse_config(preset_text(name)); }

SearchWindow search_window(const Scenario& s, ConversionProcess process) {
  if (s.window) return *s.window;
  const double centre = nominal_resonance(process, s.params.omega_a, s.params.omega_b);
  return {std::max(0.0, centre - 0.5), centre + 0.5};
}

std::vector<std::filesystem::path> run_scenario(const Scenario& s, const std::filesystem::path& out_dir,
                                                std::ostream* log) {
  s.validate();
  std::filesystem::create_directories(out_dir);
  OutputSet out{out_dir, s.name, {}, {}};
  switch (s.task) {
    case Task::spectrum_sweep:
      run_spectrum(s, out, log);
      break;
    case Task::anticrossing:
      run_anticrossing(s, out, log);
      break;
    case Task::geff_compare:
      run_geff(s, out, log);
      break;
    case Task::protocol:
      run_protocol_task(s, out, log);
      break;
    case Task::adiabatic_sweep:
      run_sweep_task(s, out, log);
      break;
  }
  return out.finish();
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0x0f]);
  }
  return out;
}

}  // namespace freqconv
