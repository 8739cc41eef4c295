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

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace lrn {

using cplx = std::complex<double>;

namespace mps {

/// Local tensor A^i_{ab} of a translation-invariant MPS on a ring:
/// `d` matrices of size chi x chi. Immutable after construction.
class MpsTensor {
 public:
  /// Throws InvalidTensor unless there is at least one matrix, all are
  /// square of the same size >= 1, and every entry is finite.
  explicit MpsTensor(std::vector<Eigen::MatrixXcd> matrices);

  int physical_dim() const { return static_cast<int>(matrices_.size()); }
  int bond_dim() const { return static_cast<int>(matrices_.front().rows()); }

  const Eigen::MatrixXcd& operator[](int i) const { return matrices_[i]; }
  std::span<const Eigen::MatrixXcd> matrices() const { return matrices_; }

  MpsTensor scaled(cplx factor) const;
  /// X A^i X^{-1} for every i.
  MpsTensor gauged(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& x_inv) const;
  /// Frobenius norm of the stacked matrices.
  double norm() const;

 private:
  std::vector<Eigen::MatrixXcd> matrices_;
};

/// Matrix of the completely positive map X -> sum_i A^i X A^i^dagger in the
/// row-major vectorisation |X) = sum X_{ab} |a,b). Equals sum_i A^i (x) conj(A^i).
struct TransferOperator {
  Eigen::MatrixXcd matrix;
  int bond_dim = 0;
  std::shared_ptr<const MpsTensor> source;

  int dim() const { return static_cast<int>(matrix.rows()); }
};

TransferOperator transfer_matrix(const MpsTensor& a);

/// Mixed transfer operator sum_i A^i (x) conj(B^i). Throws DimensionMismatch
/// if the physical dimensions differ.
Eigen::MatrixXcd mixed_transfer(const MpsTensor& a, const MpsTensor& b);

inline constexpr long kDefaultPhysicalDimCap = 4096;

/// Groups q sites: B^{(i_1..i_q)} = A^{i_1} ... A^{i_q}, with the composite
/// index i_1 most significant. Throws PhysicalDimCap if d^q > cap.
MpsTensor block_tensor(const MpsTensor& a, int q, long cap = kDefaultPhysicalDimCap);

/// Direct sum of tensors sharing the same physical dimension.
MpsTensor direct_sum(std::span<const MpsTensor> blocks);

/// Compression W^dagger A^i W onto the columns of an isometry W.
MpsTensor compress(const MpsTensor& a, const Eigen::MatrixXcd& basis);

/// Row-major vectorisation |X) and its inverse, matching TransferOperator.
Eigen::VectorXcd vec(const Eigen::MatrixXcd& x);
Eigen::MatrixXcd unvec(const Eigen::VectorXcd& v, int chi);

/// Spectral radius of the transfer operator.
double transfer_spectral_radius(const MpsTensor& a);

/// Rescales so that the transfer operator has spectral radius one. Throws
/// InvalidTensor for a nilpotent transfer operator.
MpsTensor normalized(const MpsTensor& a);

}  // namespace mps
}  // namespace lrn
