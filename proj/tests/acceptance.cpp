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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "freqconv/dynamics.hpp"
#include "freqconv/effcoupling.hpp"
#include "freqconv/models.hpp"
#include "freqconv/scenario.hpp"
#include "freqconv/spectrum.hpp"

using namespace freqconv;
namespace fs = std::filesystem;

namespace {

constexpr auto g = QubitLevel::g;
constexpr auto e = QubitLevel::e;

struct Verdict {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [fail]");
  }
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

struct Record {
  double t, n_a, n_b, n_q, omega_q;
};

std::vector<Record> read_timeseries(const fs::path& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  std::vector<Record> out;
  while (std::getline(in, line)) {
    Record r{};
    std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &r.t, &r.n_a, &r.n_b, &r.n_q, &r.omega_q);
    out.push_back(r);
  }
  return out;
}

/// Second line of a one-row CSV as numbers.
std::vector<double> read_summary(const fs::path& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  std::vector<double> out;
  std::istringstream row(line);
  for (std::string cell; std::getline(row, cell, ',');) out.push_back(std::stod(cell));
  return out;
}

struct ProtocolOutcome {
  std::vector<Record> series;
  double resonant_start = 0.0;
  double resonant_time = 0.0;
  double max_trace_drift = 0.0;
  double min_eigenvalue = 0.0;

  const Record& at(double t) const {
    const Record* best = &series.front();
    for (const auto& r : series) {
      if (std::abs(r.t - t) < std::abs(best->t - t)) best = &r;
    }
    return *best;
  }
};

ProtocolOutcome run_preset_protocol(const std::string& preset, const fs::path& dir) {
  const auto outputs = run_scenario(load_preset(preset), dir / preset);
  ProtocolOutcome out;
  out.series = read_timeseries(outputs.at(0));
  const auto summary = read_summary(outputs.at(1));
  out.resonant_start = summary.at(1);
  out.resonant_time = summary.at(2);
  out.max_trace_drift = summary.at(4);
  out.min_eigenvalue = summary.at(5);
  return out;
}

ModelParams params(double gg, double omega_a, double omega_b, double theta = 0.0) {
  auto p = ModelParams{}.with_coupling(gg);
  p.omega_a = omega_a;
  p.omega_b = omega_b;
  p.theta = theta;
  return p;
}

double numeric_splitting(ConversionProcess process, ModelKind kind, const ModelParams& p) {
  const double centre = nominal_resonance(process, p.omega_a, p.omega_b);
  const auto setup = process_setup(process, kind, p.with_omega_q(centre));
  return locate_anticrossing(kind, p, setup.pair, {centre - 0.5, centre + 0.5}, SpaceConfig{}).delta_min;
}

double relative(double value, double reference) { return (value - reference) / reference; }

struct Shared {
  fs::path dir;
  std::vector<double> drifts;
  std::vector<double> min_eigs;
};

Verdict criterion_1(Shared&) {
  Verdict v;
  const auto p = params(0.15, 3, 2, std::numbers::pi / 6);
  const double splitting = numeric_splitting(ConversionProcess::single_photon, ModelKind::generalized_rabi, p);
  const double closed = 2 * 3.2476e-3;
  v.check(std::abs(relative(splitting, closed)) <= 0.05,
          fmt("delta_min %.5e vs 2 g_eff %.5e (%+.2f%%)", splitting, closed, 100 * relative(splitting, closed)));
  return v;
}

Verdict geff_grid(ConversionProcess process, const ModelParams& base, std::initializer_list<double> grid,
                  double tolerance) {
  Verdict v;
  for (double gg : grid) {
    const auto p = base.with_coupling(gg);
    const double closed =
        2 * std::abs(geff_closed_form(process, ModelKind::quantum_rabi,
                                      p.with_omega_q(nominal_resonance(process, p.omega_a, p.omega_b))));
    const auto kind = p.theta == 0.0 ? ModelKind::quantum_rabi : ModelKind::generalized_rabi;
    const double analytic = process == ConversionProcess::single_photon
                                ? 2 * std::abs(geff_single_photon(p.with_omega_q(p.omega_a - p.omega_b)))
                                : closed;
    const double numeric = numeric_splitting(process, kind, p);
    v.check(std::abs(relative(numeric, analytic)) <= tolerance, fmt("g=%.2f %+.2f%%", gg, 100 * relative(numeric, analytic)));
  }
  return v;
}

Verdict criterion_2(Shared&) {
  return geff_grid(ConversionProcess::single_photon, params(0, 3, 2, std::numbers::pi / 6), {0.05, 0.10, 0.15, 0.20},
                   0.10);
}

Verdict criterion_3(Shared&) {
  return geff_grid(ConversionProcess::two_photon_ge, params(0, 5, 2), {0.1, 0.2, 0.3}, 0.10);
}

Verdict criterion_4(Shared&) {
  Verdict v;
  for (double gg : {0.02, 0.03}) {
    const double numeric = numeric_splitting(ConversionProcess::two_photon_eg, ModelKind::quantum_rabi, params(gg, 3, 2));
    const double jc = 2 * std::abs(geff_two_photon_eg_jc(gg, gg, 3, 2));
    v.check(std::abs(relative(numeric, jc)) <= 0.15, fmt("JC form g=%.2f %+.1f%%", gg, 100 * relative(numeric, jc)));
  }
  for (double gg : {0.10, 0.15}) {
    const double numeric = numeric_splitting(ConversionProcess::two_photon_eg, ModelKind::quantum_rabi, params(gg, 3, 2));
    const double rabi = 2 * std::abs(geff_two_photon_eg_rabi(gg, gg, 3, 2));
    v.check(std::abs(relative(numeric, rabi)) <= 0.15,
            fmt("Rabi form g=%.2f %+.1f%%", gg, 100 * relative(numeric, rabi)));
  }
  return v;
}

Verdict criterion_5(Shared& shared) {
  Verdict v;
  const auto run = run_preset_protocol("fig3b", shared.dir);
  shared.drifts.push_back(run.max_trace_drift);
  shared.min_eigs.push_back(run.min_eigenvalue);
  const auto& end = run.at(run.resonant_start + run.resonant_time);
  v.check(std::abs(run.resonant_time - 483.7) < 0.1, fmt("resonant time %.2f", run.resonant_time));
  v.check(end.n_a < 0.1, fmt("n_a %.4f < 0.1", end.n_a));
  v.check(end.n_b > 0.85, fmt("n_b %.4f > 0.85", end.n_b));
  return v;
}

Verdict criterion_6(Shared& shared) {
  Verdict v;
  const auto run = run_preset_protocol("fig5b", shared.dir);
  shared.drifts.push_back(run.max_trace_drift);
  shared.min_eigs.push_back(run.min_eigenvalue);
  const auto& end = run.at(run.resonant_start + run.resonant_time);
  double peak = 0.0;
  for (const auto& r : run.series) {
    if (r.t <= run.resonant_start + run.resonant_time) peak = std::max(peak, r.n_b);
  }
  v.check(peak > 1.6, fmt("n_b peak %.4f > 1.6", peak));
  v.check(end.n_b > 1.6, fmt("n_b %.4f at t=%.1f", end.n_b, end.t));
  v.check(end.n_a < 0.15, fmt("n_a %.4f < 0.15", end.n_a));
  return v;
}

Verdict criterion_7(Shared&) {
  Verdict v;
  struct Case {
    const char* name;
    ModelKind kind;
    ModelParams p;
    DecoherenceRates rates;
  };
  const Case cases[] = {
      {"fig2", ModelKind::generalized_rabi, params(0.15, 3, 2, std::numbers::pi / 6), {4e-5, 4e-5, 4e-5}},
      {"fig5", ModelKind::quantum_rabi, params(0.2, 5, 2), {2e-5, 2e-5, 2e-5}},
      {"fig7", ModelKind::quantum_rabi, params(0.125, 3, 2), {4e-5, 4e-5, 4e-5}},
  };
  const SpaceConfig cfg;
  for (const auto& c : cases) {
    const auto es = diagonalize(build_hamiltonian(c.kind, c.p, cfg));
    const SegmentLiouvillian l(es, dressed_dissipators(es, cfg, c.rates));
    const OperatorMatrix ground = es.vector(0) * es.vector(0).adjoint();
    const double norm = l.apply_bare(ground).cwiseAbs().maxCoeff();
    const std::vector<ProtocolSegment> segment{{c.p.omega_q, 1.0}};
    const auto run = run_protocol(segment, Eigen::Index{0}, c.kind, c.p, cfg, c.rates);
    bool exact_zero = true;
    for (const auto& r : run.series.records) exact_zero = exact_zero && r.n_a == 0.0 && r.n_b == 0.0;
    v.check(norm <= 1e-12 && exact_zero, std::string(c.name) + fmt(" |L(rho_gs)| %.1e, counts zero", norm));
  }
  return v;
}

Verdict criterion_8(Shared& shared) {
  Verdict v;
  struct Case {
    ConversionProcess process;
    ModelKind kind;
    ModelParams p;
  };
  const Case cases[] = {
      {ConversionProcess::single_photon, ModelKind::generalized_rabi, params(0.15, 3, 2, std::numbers::pi / 6)},
      {ConversionProcess::two_photon_ge, ModelKind::quantum_rabi, params(0.2, 5, 2)},
      {ConversionProcess::two_photon_eg, ModelKind::quantum_rabi, params(0.125, 3, 2)},
      {ConversionProcess::two_photon_eg, ModelKind::jaynes_cummings, params(0.125, 3, 2)},
  };
  const SpaceConfig cfg;
  double worst = 0.0;
  for (const auto& c : cases) {
    const auto q = c.p.with_omega_q(nominal_resonance(c.process, c.p.omega_a, c.p.omega_b));
    const auto setup = process_setup(c.process, c.kind, q);
    const auto small = project_subspace(build_hamiltonian(c.kind, q, cfg), setup.subspace, cfg);
    const double eliminated = adiabatic_eliminate(small, setup.kept, setup.frame_energy).coupling;
    worst = std::max(worst, std::abs(relative(eliminated, geff_closed_form(c.process, c.kind, q))));
  }
  v.check(worst <= 1e-12, fmt("elimination vs closed forms, worst relative %.1e", worst));

  // Small-coupling transfer in the truncated space against sin^2(g_eff t).
  const SpaceConfig small_space{3, 3};
  const auto p = params(0.02, 3, 2, std::numbers::pi / 6);
  const std::pair<BasisLabel, BasisLabel> pair{{1, 0, g}, {0, 1, e}};
  const auto found = locate_anticrossing(ModelKind::generalized_rabi, p, pair, {0.5, 1.5}, small_space);
  const double geff = std::abs(geff_single_photon(p.with_omega_q(1.0)));
  const double lead = 1.0;
  const double half_period = std::numbers::pi / (2 * geff);
  const std::vector<ProtocolSegment> segments{{0.9, lead}, {found.omega_q_star, half_period}};
  ProtocolOptions options;
  options.sample_dt = 50.0;
  const auto run = run_protocol(segments, pair.first, ModelKind::generalized_rabi, p, small_space, {}, options);
  shared.drifts.push_back(run.series.max_trace_drift);
  shared.min_eigs.push_back(run.series.min_eigenvalue);
  double deviation = 0.0;
  for (const auto& r : run.series.records) {
    if (r.t < lead) continue;
    deviation = std::max(deviation, std::abs(r.n_b - std::pow(std::sin(geff * (r.t - lead)), 2)));
  }
  v.check(deviation <= 0.02, fmt("g=0.02 transfer vs sin^2(g_eff t), max deviation %.4f", deviation));
  return v;
}

Verdict criterion_9(Shared& shared) {
  Verdict v;
  const SpaceConfig cfg;
  const auto rabi = build_hamiltonian(ModelKind::quantum_rabi, params(0.2, 5, 2), cfg);
  const auto parity = parity_operator(cfg);
  const double parity_commutator = (rabi * parity - parity * rabi).cwiseAbs().maxCoeff();
  const auto jc = build_hamiltonian(ModelKind::jaynes_cummings, params(0.125, 3, 2), cfg);
  const auto number = excitation_number(cfg);
  const double number_commutator = (jc * number - number * jc).cwiseAbs().maxCoeff();
  v.check(parity_commutator <= 1e-12, fmt("[H_Rabi, P] %.1e", parity_commutator));
  v.check(number_commutator <= 1e-12, fmt("[H_JC, N] %.1e", number_commutator));

  const auto fig7b = run_preset_protocol("fig7b", shared.dir);
  shared.drifts.push_back(fig7b.max_trace_drift);
  shared.min_eigs.push_back(fig7b.min_eigenvalue);
  double drift = 0.0;
  double min_eig = 1.0;
  for (double d : shared.drifts) drift = std::max(drift, d);
  for (double m : shared.min_eigs) min_eig = std::min(min_eig, m);
  v.check(drift <= 1e-8, fmt("trace drift %.1e over %.0f runs", drift, static_cast<double>(shared.drifts.size())));
  v.check(min_eig >= -1e-9, fmt("min eigenvalue %.1e", min_eig));
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Verdict(Shared&)> run;
  };
  const Criterion criteria[] = {
      {1, "single-photon anticrossing splitting", 30, criterion_1},
      {2, "single-photon coupling validity, g <= 0.2", 120, criterion_2},
      {3, "two-photon |1,0,g>-|0,2,e> validity, g <= 0.3", 120, criterion_3},
      {4, "two-photon |1,0,e>-|0,2,g> JC and Rabi forms", 120, criterion_4},
      {5, "rapid-tune single-photon conversion", 120, criterion_5},
      {6, "rapid-tune two-photon conversion", 300, criterion_6},
      {7, "dressed ground state is dark and stationary", 10, criterion_7},
      {8, "elimination oracles and small-coupling transfer", 60, criterion_8},
      {9, "conservation laws, trace and positivity", 60, criterion_9},
  };

  Shared shared;
  shared.dir = fs::temp_directory_path() / ("freqconv_acceptance_" + std::to_string(::getpid()));
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run(shared);
    } catch (const std::exception& ex) {
      v.pass = false;
      v.detail = std::string("exception: ") + ex.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.check(elapsed <= c.budget_s, fmt("%.1f s of %.0f s", elapsed, c.budget_s));
    failures += v.pass ? 0 : 1;
    std::printf("%s criterion %d: %s: %s\n", v.pass ? "PASS" : "FAIL", c.id, c.title, v.detail.c_str());
    std::fflush(stdout);
  }
  fs::remove_all(shared.dir);
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
