// Copyright 2026 The lrn-detect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "lrn/dense/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lrn/dense/kernels.hpp"
#include "lrn/errors.hpp"

namespace lrn::dense {

namespace {

int log2_exact(int d) {
  int k = 0;
  while ((1 << k) < d) ++k;
  if ((1 << k) != d) throw GeometryMismatch("local dimension " + std::to_string(d) + " is not a power of two");
  return k;
}

}  // namespace

DenseState make_state(int n, int d, Eigen::VectorXcd amplitudes) {
  if (n < 1 || d < 1) throw GeometryMismatch("state needs n >= 1 and d >= 1");
  if (static_cast<std::size_t>(amplitudes.size()) != kernels::ipow(d, n)) {
    throw GeometryMismatch("amplitude vector has length " + std::to_string(amplitudes.size()) + ", expected d^n");
  }
  const double norm = amplitudes.norm();
  if (!(norm > 1e-300)) throw ZeroState("state has zero norm");
  amplitudes /= norm;
  return DenseState{n, d, std::move(amplitudes)};
}

DenseState basis_state(int n, int d, std::size_t index) {
  const std::size_t dim = kernels::ipow(d, n);
  if (dim > kAmplitudeCap) throw SizeCap("d^n = " + std::to_string(dim) + " exceeds the amplitude cap");
  if (index >= dim) throw GeometryMismatch("basis index out of range");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return DenseState{n, d, std::move(v)};
}

Eigen::VectorXcd mps_amplitudes(const mps::MpsTensor& a, int n, bool parallel) {
  if (n < 1) throw GeometryMismatch("need at least one site");
  const double log_dim = n * std::log2(static_cast<double>(a.physical_dim()));
  if (log_dim > 24.0 + 1e-9) {
    throw SizeCap(std::to_string(a.physical_dim()) + "^" + std::to_string(n) + " amplitudes exceed 2^24");
  }
  return parallel ? kernels::parallel::materialize(a.matrices(), n) : kernels::serial::materialize(a.matrices(), n);
}

DenseState materialize_mps(const mps::MpsTensor& a, int n, bool parallel) {
  return make_state(n, a.physical_dim(), mps_amplitudes(a, n, parallel));
}

cplx overlap(const DenseState& a, const DenseState& b) {
  if (a.amplitudes.size() != b.amplitudes.size()) {
    throw DimensionMismatch("states have dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
  return a.amplitudes.dot(b.amplitudes);
}

double trace_distance_pure(const DenseState& a, const DenseState& b) {
  const double f = std::norm(overlap(a, b));
  return std::sqrt(std::clamp(1.0 - f, 0.0, 1.0));
}

DenseState as_qubits(const DenseState& s) {
  const int k = log2_exact(s.d);
  return DenseState{s.n_sites * k, 2, s.amplitudes};
}

std::vector<int> site_qubits(int site, int d) {
  const int k = log2_exact(d);
  std::vector<int> q(k);
  for (int j = 0; j < k; ++j) q[j] = site * k + j;
  return q;
}

}  // namespace lrn::dense
