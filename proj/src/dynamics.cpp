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


#include "freqconv/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>

#include "freqconv/csv.hpp"
#include "freqconv/errors.hpp"

namespace freqconv {

namespace {

constexpr double kTraceDriftLimit = 1e-6;

OperatorMatrix strictly_upper(const OperatorMatrix& m) {
  OperatorMatrix out = m.triangularView<Eigen::StrictlyUpper>();
  return out;
}

OperatorMatrix in_eigenbasis(const OperatorMatrix& op, const EigenSystem& es) {
  return es.vectors.adjoint() * op * es.vectors;
}

struct CountingOperators {
  OperatorMatrix x_a;
  OperatorMatrix x_b;
  OperatorMatrix c;

  explicit CountingOperators(const SpaceConfig& cfg) {
    const OperatorMatrix a = lift(annihilator(cfg.cutoff_a), Slot::a, cfg);
    const OperatorMatrix b = lift(annihilator(cfg.cutoff_b), Slot::b, cfg);
    x_a = a + a.adjoint();
    x_b = b + b.adjoint();
    c = lift(qubit_operator(QubitOp::sigma_x), Slot::qubit, cfg);
  }
};

/// X^- X^+ in the eigenbasis.
OperatorMatrix dressed_number(const OperatorMatrix& op, const EigenSystem& es) {
  const OperatorMatrix plus = strictly_upper(in_eigenbasis(op, es));
  return plus.adjoint() * plus;
}

DressedDissipator channels_from(const EigenSystem& es, const CountingOperators& ops, const DecoherenceRates& rates) {
  DressedDissipator channels;
  const double largest = std::max({rates.kappa_a, rates.kappa_b, rates.gamma});
  if (largest == 0.0) return channels;
  const OperatorMatrix xa = in_eigenbasis(ops.x_a, es);
  const OperatorMatrix xb = in_eigenbasis(ops.x_b, es);
  const OperatorMatrix c = in_eigenbasis(ops.c, es);
  const double floor = 1e-13 * largest;
  for (Eigen::Index k = 1; k < es.size(); ++k) {
    for (Eigen::Index j = 0; j < k; ++j) {
      const double rate =
          rates.kappa_a * std::norm(xa(j, k)) + rates.kappa_b * std::norm(xb(j, k)) + rates.gamma * std::norm(c(j, k));
      if (rate > floor) channels.push_back({rate, j, k});
    }
  }
  return channels;
}

struct SegmentModel {
  SegmentLiouvillian liouvillian;
  OperatorMatrix count_a;
  OperatorMatrix count_b;
  OperatorMatrix count_q;
};

SegmentModel make_segment(ModelKind kind, const ModelParams& p, const SpaceConfig& cfg, const CountingOperators& ops,
                          const DecoherenceRates& rates) {
  auto es = diagonalize(build_hamiltonian(kind, p, cfg));
  auto channels = channels_from(es, ops, rates);
  OperatorMatrix na = dressed_number(ops.x_a, es);
  OperatorMatrix nb = dressed_number(ops.x_b, es);
  OperatorMatrix nq = dressed_number(ops.c, es);
  return {SegmentLiouvillian(std::move(es), std::move(channels)), std::move(na), std::move(nb), std::move(nq)};
}

double expectation(const OperatorMatrix& rho, const OperatorMatrix& op) {
  // Tr(rho op) = sum_mn rho_mn op_nm
  return rho.cwiseProduct(op.transpose()).sum().real();
}

double trace_drift(const OperatorMatrix& rho) { return std::abs(rho.trace().real() - 1.0); }

double min_eigenvalue(const OperatorMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(rho, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

long long step_count(double duration, double dt) {
  return std::max<long long>(1, static_cast<long long>(std::ceil(duration / dt - 1e-9)));
}

struct StepPlan {
  long long steps = 1;
  double h = 0.0;
  long long every = 1;
};

/// Steps no longer than dt; when the duration is a whole number of sample
/// intervals the step count is rounded up so samples fall on an exact grid.
StepPlan plan_steps(double duration, double dt, double sample_dt) {
  StepPlan plan;
  plan.steps = step_count(duration, dt);
  const double intervals = duration / sample_dt;
  const long long k = std::llround(intervals);
  if (k >= 1 && std::abs(intervals - static_cast<double>(k)) < 1e-9 * std::max(1.0, intervals)) {
    plan.steps = k * ((plan.steps + k - 1) / k);
    plan.every = plan.steps / k;
    plan.h = duration / static_cast<double>(plan.steps);
    return plan;
  }
  plan.h = duration / static_cast<double>(plan.steps);
  plan.every = std::max<long long>(1, std::llround(sample_dt / plan.h));
  return plan;
}

void validate_density(const OperatorMatrix& rho, Eigen::Index dim) {
  if (rho.rows() != dim || rho.cols() != dim) throw DomainError("density matrix has the wrong dimension");
  if (!is_hermitian(rho, 1e-10)) throw DomainError("density matrix is not Hermitian");
  if (trace_drift(rho) > 1e-10) throw DomainError("density matrix trace is not 1");
  if (min_eigenvalue(rho) < -1e-9) throw DomainError("density matrix is not positive semidefinite");
}

}  // namespace

void DecoherenceRates::validate() const {
  for (double r : {kappa_a, kappa_b, gamma}) {
    if (!std::isfinite(r) || r < 0.0) throw DomainError("decoherence rates must be finite and >= 0");
  }
}

OperatorMatrix positive_part(const OperatorMatrix& op, const EigenSystem& es) {
  if (op.rows() != es.size() || op.cols() != es.size()) {
    throw DomainError("positive_part: operator does not match the eigensystem");
  }
  return es.vectors * strictly_upper(in_eigenbasis(op, es)) * es.vectors.adjoint();
}

OperatorMatrix negative_part(const OperatorMatrix& op, const EigenSystem& es) {
  return positive_part(op, es).adjoint();
}

DressedDissipator dressed_dissipators(const EigenSystem& es, const SpaceConfig& cfg, const DecoherenceRates& rates) {
  rates.validate();
  if (es.size() != cfg.dimension()) throw DomainError("dressed_dissipators: eigensystem does not match the space");
  return channels_from(es, CountingOperators(cfg), rates);
}

double max_stable_step(const EigenSystem& es) {
  const double e_max = es.energies.cwiseAbs().maxCoeff();
  if (e_max == 0.0) return std::numeric_limits<double>::infinity();
  return 2.0 * std::numbers::pi / (50.0 * e_max);
}

SegmentLiouvillian::SegmentLiouvillian(EigenSystem es, DressedDissipator channels)
    : es_(std::move(es)), channels_(std::move(channels)) {
  const Eigen::Index d = es_.size();
  outflow_ = Eigen::VectorXd::Zero(d);
  for (const auto& c : channels_) {
    if (c.lower >= c.upper || c.upper >= d || c.lower < 0 || c.rate < 0.0) {
      throw DomainError("SegmentLiouvillian: malformed channel");
    }
    outflow_(c.upper) += c.rate;
  }
  coherence_.resize(d, d);
  for (Eigen::Index n = 0; n < d; ++n) {
    for (Eigen::Index m = 0; m < d; ++m) {
      coherence_(m, n) =
          std::complex<double>(-0.5 * (outflow_(m) + outflow_(n)), -(es_.energies(m) - es_.energies(n)));
    }
  }
}

void SegmentLiouvillian::apply(const OperatorMatrix& rho, OperatorMatrix& out) const {
  out = coherence_.cwiseProduct(rho);
  for (const auto& c : channels_) out(c.lower, c.lower) += c.rate * rho(c.upper, c.upper);
}

OperatorMatrix SegmentLiouvillian::apply_bare(const OperatorMatrix& rho_bare) const {
  OperatorMatrix out(es_.size(), es_.size());
  apply(to_eigenbasis(rho_bare), out);
  return to_bare(out);
}

OperatorMatrix SegmentLiouvillian::to_eigenbasis(const OperatorMatrix& rho_bare) const {
  return es_.vectors.adjoint() * rho_bare * es_.vectors;
}

OperatorMatrix SegmentLiouvillian::to_bare(const OperatorMatrix& rho_eig) const {
  return es_.vectors * rho_eig * es_.vectors.adjoint();
}

void SegmentLiouvillian::feed(const Eigen::VectorXd& populations, Eigen::VectorXd& out) const {
  out.setZero(populations.size());
  for (const auto& c : channels_) out(c.lower) += c.rate * populations(c.upper);
}

void SegmentLiouvillian::step(OperatorMatrix& rho, double dt) const {
  if (dt != cached_dt_) {
    factor_ = (coherence_ * dt).array().exp().matrix();
    half_decay_ = (-0.5 * dt * outflow_).array().exp().matrix();
    full_decay_ = (-dt * outflow_).array().exp().matrix();
    cached_dt_ = dt;
  }
  p_ = rho.diagonal().real();
  if (!channels_.empty()) {
    const auto a = half_decay_.array();
    const auto full = full_decay_.array();
    feed(p_, k1_);
    tmp_ = (a * (p_ + 0.5 * dt * k1_).array()).matrix();
    feed(tmp_, k2_);
    tmp_ = (a * p_.array() + 0.5 * dt * k2_.array()).matrix();
    feed(tmp_, k3_);
    tmp_ = (full * p_.array() + dt * a * k3_.array()).matrix();
    feed(tmp_, k4_);
    p_ = (full * p_.array() + (dt / 6.0) * (full * k1_.array() + 2.0 * a * (k2_ + k3_).array() + k4_.array()))
             .matrix();
  } else {
    p_ = (full_decay_.array() * p_.array()).matrix();
  }
  rho = factor_.cwiseProduct(rho);
  rho.diagonal() = p_.cast<std::complex<double>>();
  sym_ = 0.5 * (rho + rho.adjoint());
  rho.swap(sym_);
}

std::vector<DensitySample> propagate_segment(const OperatorMatrix& rho0, ModelKind kind, const ModelParams& p,
                                             const SpaceConfig& cfg, const DecoherenceRates& rates,
                                             double duration, double dt, double sample_dt) {
  rates.validate();
  if (!(duration > 0.0)) throw DomainError("propagate_segment: duration must be > 0");
  if (!(dt > 0.0)) throw DomainError("propagate_segment: dt must be > 0");
  if (!(sample_dt > 0.0)) throw DomainError("propagate_segment: sample_dt must be > 0");
  validate_density(rho0, cfg.dimension());

  const CountingOperators ops(cfg);
  const auto seg = make_segment(kind, p, cfg, ops, rates);
  const auto& liouvillian = seg.liouvillian;
  if (dt > max_stable_step(liouvillian.eigensystem()) * (1.0 + 1e-12)) {
    throw DomainError("propagate_segment: dt exceeds 2 pi / (50 max|E|)");
  }

  const auto [steps, h, every] = plan_steps(duration, dt, sample_dt);

  std::vector<DensitySample> samples;
  OperatorMatrix rho = liouvillian.to_eigenbasis(rho0);
  samples.push_back({0.0, rho0});
  for (long long s = 1; s <= steps; ++s) {
    liouvillian.step(rho, h);
    if (trace_drift(rho) > kTraceDriftLimit) {
      throw StepSizeError("propagate_segment: trace drift exceeded 1e-6; reduce dt");
    }
    if (s % every == 0 || s == steps) samples.push_back({h * static_cast<double>(s), liouvillian.to_bare(rho)});
  }
  return samples;
}

void write_timeseries_csv(const Timeseries& series, std::ostream& out) {
  CsvWriter csv(out);
  csv.header({"t", "n_a", "n_b", "n_q", "omega_q"});
  for (const auto& r : series.records) {
    csv.begin_row();
    csv.field(r.t);
    csv.field(r.n_a);
    csv.field(r.n_b);
    csv.field(r.n_q);
    csv.field(r.omega_q);
    csv.end_row();
  }
}

ProtocolRun run_protocol(std::span<const ProtocolSegment> segments, const InitialState& initial, ModelKind kind,
                         const ModelParams& p_base, const SpaceConfig& cfg, const DecoherenceRates& rates,
                         const ProtocolOptions& options) {
  if (segments.empty()) throw DomainError("run_protocol: no segments");
  if (!(options.sample_dt > 0.0)) throw DomainError("run_protocol: sample_dt must be > 0");
  if (options.dt < 0.0) throw DomainError("run_protocol: dt must be >= 0");
  rates.validate();
  for (const auto& s : segments) {
    if (!(s.duration > 0.0)) throw DomainError("run_protocol: segment durations must be > 0");
    p_base.with_omega_q(s.omega_q).validate();
  }

  const CountingOperators ops(cfg);
  ProtocolRun run;
  auto& series = run.series;
  series.min_eigenvalue = std::numeric_limits<double>::infinity();

  OperatorMatrix rho;
  OperatorMatrix previous_vectors;
  double t0 = 0.0;

  for (std::size_t si = 0; si < segments.size(); ++si) {
    const auto& segment = segments[si];
    const auto model = make_segment(kind, p_base.with_omega_q(segment.omega_q), cfg, ops, rates);
    const auto& liouvillian = model.liouvillian;
    const auto& es = liouvillian.eigensystem();

    auto record = [&](double t) {
      series.max_trace_drift = std::max(series.max_trace_drift, trace_drift(rho));
      if (options.check_positivity) series.min_eigenvalue = std::min(series.min_eigenvalue, min_eigenvalue(rho));
      series.records.push_back({t, expectation(rho, model.count_a), expectation(rho, model.count_b),
                                expectation(rho, model.count_q), segment.omega_q});
    };

    if (si == 0) {
      Eigen::Index start = 0;
      if (const auto* label = std::get_if<BasisLabel>(&initial)) {
        const auto match = identify_level(es, *label, cfg);
        if (match.overlap < 0.5) {
          throw IdentificationError("initial state " + label->to_string() +
                                    " has no dressed match with overlap >= 1/2 (best " +
                                    std::to_string(match.overlap) + ")");
        }
        start = match.index;
        run.initial_overlap = match.overlap;
      } else {
        start = std::get<Eigen::Index>(initial);
        if (start < 0 || start >= es.size()) throw DomainError("run_protocol: dressed index out of range");
      }
      rho = OperatorMatrix::Zero(es.size(), es.size());
      rho(start, start) = 1.0;
      record(0.0);
    } else {
      const OperatorMatrix overlap = previous_vectors.adjoint() * es.vectors;
      rho = overlap.adjoint() * rho * overlap;
    }

    const double bound = max_stable_step(es);
    double dt = bound;
    if (options.dt > 0.0) {
      if (options.dt > bound * (1.0 + 1e-12)) {
        throw DomainError("run_protocol: dt exceeds 2 pi / (50 max|E|) in segment " + std::to_string(si));
      }
      dt = options.dt;
    }
    if (!std::isfinite(dt)) dt = segment.duration;
    const auto [steps, h, every] = plan_steps(segment.duration, dt, options.sample_dt);

    for (long long s = 1; s <= steps; ++s) {
      liouvillian.step(rho, h);
      const double drift = trace_drift(rho);
      if (drift > kTraceDriftLimit) {
        throw StepSizeError("run_protocol: trace drift " + std::to_string(drift) + " in segment " +
                            std::to_string(si) + "; reduce dt");
      }
      series.max_trace_drift = std::max(series.max_trace_drift, drift);
      if (s % every == 0 || s == steps) record(t0 + h * static_cast<double>(s));
    }
    t0 += segment.duration;
    previous_vectors = es.vectors;
    if (si + 1 == segments.size()) run.final_eigensystem = es;
  }
  run.final_rho_eigen = std::move(rho);
  return run;
}

AdiabaticSweepResult adiabatic_sweep(const SweepProfile& profile, const InitialState& initial,
                                     const BasisLabel& target, ModelKind kind, const ModelParams& p_base,
                                     const SpaceConfig& cfg, const DecoherenceRates& rates,
                                     const ProtocolOptions& options) {
  if (profile.segments < 100) throw DomainError("adiabatic_sweep: need at least 100 segments");
  if (!(profile.duration > 0.0)) throw DomainError("adiabatic_sweep: duration must be > 0");
  index_of(target, cfg);

  std::vector<ProtocolSegment> segments;
  segments.reserve(static_cast<std::size_t>(profile.segments));
  const double piece = profile.duration / profile.segments;
  for (int i = 0; i < profile.segments; ++i) {
    const double frac = (i + 0.5) / profile.segments;
    segments.push_back({profile.omega_start + (profile.omega_end - profile.omega_start) * frac, piece});
  }

  AdiabaticSweepResult result;
  result.run = run_protocol(segments, initial, kind, p_base, cfg, rates, options);
  const auto match = identify_level(result.run.final_eigensystem, target, cfg);
  result.fidelity = std::abs(result.run.final_rho_eigen(match.index, match.index).real());
  return result;
}

}  // namespace freqconv
