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


#pragma once

#include <cstddef>
#include <span>

#include <Eigen/Dense>

#include "lrn/mps/tensor.hpp"

namespace lrn::dense {

inline constexpr std::size_t kAmplitudeCap = std::size_t{1} << 24;
inline constexpr std::size_t kDensityCap = std::size_t{1} << 12;

/// Pure state on n sites of dimension d, unit norm. Site 0 is the most
/// significant digit of the amplitude index.
struct DenseState {
  int n_sites = 0;
  int d = 2;
  Eigen::VectorXcd amplitudes;

  std::size_t dim() const { return static_cast<std::size_t>(amplitudes.size()); }
};

/// Normalizes `amplitudes`. Throws GeometryMismatch if the length is not
/// d^n and ZeroState if the norm vanishes.
DenseState make_state(int n, int d, Eigen::VectorXcd amplitudes);

/// |s_0 ... s_{n-1}> for the configuration with flat index `index`.
DenseState basis_state(int n, int d, std::size_t index = 0);

/// Unnormalized tr(A^{s_0} ... A^{s_{n-1}}). Throws SizeCap beyond 2^24.
Eigen::VectorXcd mps_amplitudes(const mps::MpsTensor& a, int n, bool parallel = true);

/// Throws SizeCap and ZeroState.
DenseState materialize_mps(const mps::MpsTensor& a, int n, bool parallel = true);

/// <a|b>. Throws DimensionMismatch.
cplx overlap(const DenseState& a, const DenseState& b);

/// sqrt(1 - |<a|b>|^2), clamped to [0, 1]. Throws DimensionMismatch.
double trace_distance_pure(const DenseState& a, const DenseState& b);

/// Reinterprets sites of dimension 2^k as k qubits each; site s becomes
/// qubits s*k .. s*k+k-1. Throws GeometryMismatch unless d is a power of two.
DenseState as_qubits(const DenseState& s);

/// Qubits carrying site `site` of a state with local dimension d = 2^k.
std::vector<int> site_qubits(int site, int d);

}  // namespace lrn::dense
