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

#include "freqconv/fockspace.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "freqconv/errors.hpp"

namespace freqconv {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_count(std::string_view field, std::string_view whole) {
  field = trim(field);
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || value < 0) {
    throw DomainError("bad photon number in basis label '" + std::string(whole) + "'");
  }
  return value;
}

OperatorMatrix kron(const OperatorMatrix& x, const OperatorMatrix& y) {
  OperatorMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return out;
}

}  // namespace

std::string BasisLabel::to_string() const {
  return std::to_string(n_a) + "," + std::to_string(n_b) + "," + (q == QubitLevel::e ? "e" : "g");
}

BasisLabel BasisLabel::parse(std::string_view text) {
  const auto first = text.find(',');
  const auto second = first == std::string_view::npos ? first : text.find(',', first + 1);
  if (second == std::string_view::npos || text.find(',', second + 1) != std::string_view::npos) {
    throw DomainError("basis label must look like 'n_a,n_b,g|e', got '" + std::string(text) + "'");
  }
  BasisLabel label;
  label.n_a = parse_count(text.substr(0, first), text);
  label.n_b = parse_count(text.substr(first + 1, second - first - 1), text);
  const auto q = trim(text.substr(second + 1));
  if (q == "g") {
    label.q = QubitLevel::g;
  } else if (q == "e") {
    label.q = QubitLevel::e;
  } else {
    throw DomainError("qubit level must be 'g' or 'e' in '" + std::string(text) + "'");
  }
  return label;
}

bool SpaceConfig::contains(const BasisLabel& label) const {
  return label.n_a >= 0 && label.n_a < cutoff_a && label.n_b >= 0 && label.n_b < cutoff_b;
}

void SpaceConfig::validate() const {
  if (cutoff_a < 2 || cutoff_b < 2) {
    throw DomainError("Fock cutoffs must be >= 2 (got " + std::to_string(cutoff_a) + ", " +
                      std::to_string(cutoff_b) + ")");
  }
}

Eigen::Index index_of(const BasisLabel& label, const SpaceConfig& cfg) {
  if (!cfg.contains(label)) {
    throw DomainError("basis label " + label.to_string() + " outside cutoffs (" +
                      std::to_string(cfg.cutoff_a) + ", " + std::to_string(cfg.cutoff_b) + ")");
  }
  return (Eigen::Index{label.n_a} * cfg.cutoff_b + label.n_b) * 2 + static_cast<int>(label.q);
}

BasisLabel label_of(Eigen::Index index, const SpaceConfig& cfg) {
  if (index < 0 || index >= cfg.dimension()) {
    throw DomainError("basis index " + std::to_string(index) + " out of range");
  }
  BasisLabel label;
  label.q = static_cast<QubitLevel>(index % 2);
  const auto modes = index / 2;
  label.n_b = static_cast<int>(modes % cfg.cutoff_b);
  label.n_a = static_cast<int>(modes / cfg.cutoff_b);
  return label;
}

OperatorMatrix annihilator(int cutoff) {
  if (cutoff < 2) {
    throw DomainError("annihilator cutoff must be >= 2, got " + std::to_string(cutoff));
  }
  OperatorMatrix a = OperatorMatrix::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

OperatorMatrix qubit_operator(QubitOp which) {
  // Index 0 is |g>, index 1 is |e>.
  OperatorMatrix s = OperatorMatrix::Zero(2, 2);
  switch (which) {
    case QubitOp::sigma_x:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case QubitOp::sigma_z:
      s(0, 0) = -1.0;
      s(1, 1) = 1.0;
      break;
    case QubitOp::sigma_plus:
      s(1, 0) = 1.0;
      break;
    case QubitOp::sigma_minus:
      s(0, 1) = 1.0;
      break;
  }
  return s;
}

OperatorMatrix lift(const OperatorMatrix& op, Slot slot, const SpaceConfig& cfg) {
  cfg.validate();
  const Eigen::Index expected = slot == Slot::a ? cfg.cutoff_a : slot == Slot::b ? cfg.cutoff_b : 2;
  if (op.rows() != expected || op.cols() != expected) {
    throw DomainError("lift: operator is " + std::to_string(op.rows()) + "x" +
                      std::to_string(op.cols()) + ", slot needs " + std::to_string(expected));
  }
  const OperatorMatrix id_a = OperatorMatrix::Identity(cfg.cutoff_a, cfg.cutoff_a);
  const OperatorMatrix id_b = OperatorMatrix::Identity(cfg.cutoff_b, cfg.cutoff_b);
  const OperatorMatrix id_q = OperatorMatrix::Identity(2, 2);
  switch (slot) {
    case Slot::a:
      return kron(op, kron(id_b, id_q));
    case Slot::b:
      return kron(id_a, kron(op, id_q));
    case Slot::qubit:
      break;
  }
  return kron(id_a, kron(id_b, op));
}

bool is_hermitian(const OperatorMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return true;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

}  // namespace freqconv
