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

#include "lrn/mps/canonical.hpp"
#include "lrn/mps/tensor.hpp"
#include "lrn/mps/weights.hpp"

namespace lrn::mps {

inline MpsTensor placeholder_tensor() {
  return MpsTensor(std::vector<Eigen::MatrixXcd>{Eigen::MatrixXcd::Ones(1, 1)});
}

struct RgStepResult {
  /// d^2 x d' isometry from the effective site into the two-site space.
  Eigen::MatrixXcd v;
  /// Positive factor of the two-site map, written in the basis of its range.
  MpsTensor a_prime{placeholder_tensor()};
  Eigen::VectorXd singular_values;
  int rank = 0;
};

/// One coarse-graining step: B^{(ij)} = A^i A^j = sum_k V_{(ij),k} A'^k.
/// Throws RankTolerance when singular values cluster around the cutoff and
/// PhysicalDimCap when d^2 exceeds `cap`.
RgStepResult rg_step(const MpsTensor& a, double tau_rank = 1e-10, long cap = kDefaultPhysicalDimCap);

struct RgTraceRow {
  int step = 0;
  int block = 0;
  double abs_lambda2 = 0.0;
  int d_eff = 0;
  bool multi_block = false;
};

struct FixedPointBlock {
  int label = 0;                 // weight-class index
  std::vector<double> schmidt;   // diagonal fixed point, sums to one
  MpsTensor tensor{placeholder_tensor()};  // flowed block in the diagonal gauge
  /// Columns map the block's (l, r) site basis, index l * chi + r, into the
  /// flowed physical space.
  Eigen::MatrixXcd site_isometry;
};

struct FixedPointState {
  std::vector<FixedPointBlock> blocks;
  WeightSpectrum weights;
  /// (left, right) virtual-qudit dimensions per block; the site space is the
  /// direct sum of their tensor products.
  std::vector<std::pair<int, int>> site_structure;
  int blocking = 1;  // sites grouped by the canonical decomposition
  int steps = 0;     // RG steps taken; one site is blocking * 2^steps sites
  double last_lambda2 = 0.0;
  std::vector<RgTraceRow> trace;
  /// Isometry from the fixed-point site space into the flowed physical space.
  Eigen::MatrixXcd site_isometry;
  /// The flowed tensor (direct sum over classes) the isometry refers to.
  MpsTensor flowed{placeholder_tensor()};
};

struct RgOptions {
  double tol = 1e-12;
  int max_iter = 60;
  double tau_rank = 1e-10;
  double tau_orth = 1e-10;
  DecomposeOptions decompose;
};

/// Flows the class representatives of the canonical form to their fixed point.
/// Throws ConvergenceFailure carrying the last |lambda_2|.
FixedPointState rg_fixed_point(const MpsTensor& a, const RgOptions& opts = {});
FixedPointState rg_fixed_point(const MpsTensor& a, double tol, int max_iter);

/// Fixed-point site tensor T^{(l,r)} = sqrt(lambda_l) |l><r|.
MpsTensor fixed_point_site_tensor(const std::vector<double>& schmidt);

}  // namespace lrn::mps
