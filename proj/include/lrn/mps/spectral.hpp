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

#include <vector>

#include <Eigen/Dense>

#include "lrn/mps/tensor.hpp"

namespace lrn::mps {

inline constexpr double kDefaultSpectralTol = 1e-9;

/// Eigen-structure of a transfer operator.
///
/// `eigenvalues` holds the full spectrum by descending modulus. The
/// peripheral part (|lambda| within tol of the spectral radius, relative to
/// max(1, radius)) carries biorthonormal left/right eigenvectors:
/// left[m]^dagger * right[n] = delta_{mn}.
struct SpectralData {
  std::vector<cplx> eigenvalues;
  std::vector<cplx> peripheral;
  std::vector<Eigen::VectorXcd> left_vecs;
  std::vector<Eigen::VectorXcd> right_vecs;
  double spectral_radius = 0.0;
  double tol = kDefaultSpectralTol;

  /// Spectral projector onto the peripheral eigenvalues equal to `value`
  /// (within 1e-6 relative), as sum_m |R_m)(L_m|.
  Eigen::MatrixXcd peripheral_projector(cplx value) const;
};

/// Full eigendecomposition plus the biorthonormal peripheral eigenbasis.
/// Throws NonDiagonalizablePeripheral when a peripheral eigenvalue has a
/// nontrivial Jordan block.
SpectralData spectral(const TransferOperator& t, double tol = kDefaultSpectralTol);
SpectralData spectral(const Eigen::MatrixXcd& e, double tol = kDefaultSpectralTol);

struct CorrelationLength {
  double value = 0.0;     // +inf when multi_block
  bool multi_block = false;
  double abs_lambda2 = 0.0;  // |lambda_2| / radius, 0 when absent
};

/// xi = -1 / ln|lambda_2| with lambda normalised by the spectral radius.
CorrelationLength correlation_length(const SpectralData& s);

}  // namespace lrn::mps
