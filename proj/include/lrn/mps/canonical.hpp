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

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "lrn/mps/spectral.hpp"
#include "lrn/mps/tensor.hpp"
#include "lrn/mps/weights.hpp"

namespace lrn::mps {

struct NormalityWitness {
  bool normal = false;
  int peripheral_count = 0;
  /// Positive fixed points of X -> sum A X A^dagger and of its dual, trace one.
  /// Empty when the peripheral test already failed.
  Eigen::MatrixXcd right_fixed_point;
  Eigen::MatrixXcd left_fixed_point;
  /// Smallest eigenvalue divided by the largest, per fixed point.
  double right_min_ratio = 0.0;
  double left_min_ratio = 0.0;

  explicit operator bool() const { return normal; }
};

/// Normality test: one peripheral eigenvalue and full-rank fixed points of the
/// channel and its dual, found by power iteration from I/chi. Throws
/// ConvergenceFailure after max_iter iterations.
NormalityWitness is_normal(const MpsTensor& a, double tau = 1e-10, int max_iter = 10000);

/// ||sum_i A^i (x) conj(B^i)||_F < tau. Throws DimensionMismatch.
bool local_orthogonal(const MpsTensor& a, const MpsTensor& b, double tau = 1e-10);

struct GaugeRelation {
  double phase = 0.0;
  Eigen::MatrixXcd x;
};

/// Finds phi and invertible X with A = e^{i phi} X B X^{-1}, comparing the
/// tensors after scaling each to unit transfer spectral radius. Returns
/// nullopt when the bond dimensions differ or no such relation exists.
/// Throws NotNormalInput and DimensionMismatch.
std::optional<GaugeRelation> gauge_equivalent(const MpsTensor& a, const MpsTensor& b,
                                              double tau = 1e-8);

struct CanonicalBlock {
  cplx mu;            // |mu|^2 is the block's transfer spectral radius
  MpsTensor tensor;   // normal, unit spectral radius
  Eigen::MatrixXcd basis;  // isometry into the (blocked) bond space
  int leading_index = 0;
  bool dominant = false;  // |mu| = 1
};

enum class BlockRelation { kSelf, kGaugeEquivalent, kLocallyOrthogonal, kAsymptoticallyOrthogonal };

const char* to_string(BlockRelation r);

struct CanonicalForm {
  int blocking = 1;  // sites grouped before decomposition
  std::vector<CanonicalBlock> blocks;
  /// Unitary W with W^dagger A^i W block upper triangular; the diagonal
  /// blocks are mu_k times the block tensors.
  Eigen::MatrixXcd gauge;
  double residual = 0.0;  // strictly lower block mass of W^dagger A W

  /// Relations among dominant blocks, indexed like `blocks`.
  std::vector<std::vector<BlockRelation>> relations;
  /// Gauge phase of block j relative to its class representative.
  std::vector<double> relative_phase;
  /// Class label per block, -1 for subleading blocks.
  std::vector<int> class_of;
  /// Index into `blocks` of each class representative.
  std::vector<int> representatives;
  /// One entry per class, phases in units of the blocked site.
  WeightSpectrum weights;
};

struct DecomposeOptions {
  double tau_block = 1e-10;
  double tau_spec = kDefaultSpectralTol;
  int q_max = 8;
  long physical_dim_cap = kDefaultPhysicalDimCap;
};

/// Canonical form of the state family generated by `a`, blocking up to q_max
/// sites when the peripheral spectrum is periodic. Throws DecompositionFailure.
CanonicalForm canonical_decompose(const MpsTensor& a, const DecomposeOptions& opts = {});
CanonicalForm canonical_decompose(const MpsTensor& a, double tau_block);

}  // namespace lrn::mps
