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

#include "lrn/mps/tensor.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "lrn/errors.hpp"

namespace lrn::mps {

MpsTensor::MpsTensor(std::vector<Eigen::MatrixXcd> matrices) : matrices_(std::move(matrices)) {
  if (matrices_.empty()) throw InvalidTensor("tensor needs at least one matrix");
  const auto chi = matrices_.front().rows();
  if (chi < 1) throw InvalidTensor("bond dimension must be >= 1");
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    const auto& m = matrices_[i];
    if (m.rows() != chi || m.cols() != chi) {
      throw InvalidTensor("matrix " + std::to_string(i) + " is not " + std::to_string(chi) + "x" +
                          std::to_string(chi));
    }
    if (!m.allFinite()) throw InvalidTensor("matrix " + std::to_string(i) + " has non-finite entries");
  }
}

MpsTensor MpsTensor::scaled(cplx factor) const {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(matrices_.size());
  for (const auto& m : matrices_) out.push_back(factor * m);
  return MpsTensor(std::move(out));
}

MpsTensor MpsTensor::gauged(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& x_inv) const {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(matrices_.size());
  for (const auto& m : matrices_) out.push_back(x * m * x_inv);
  return MpsTensor(std::move(out));
}

double MpsTensor::norm() const {
  double s = 0.0;
  for (const auto& m : matrices_) s += m.squaredNorm();
  return std::sqrt(s);
}

namespace {

Eigen::MatrixXcd kron_conj_sum(const MpsTensor& a, const MpsTensor& b) {
  const int ca = a.bond_dim();
  const int cb = b.bond_dim();
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(ca * cb, ca * cb);
  for (int i = 0; i < a.physical_dim(); ++i) {
    const auto& ai = a[i];
    const Eigen::MatrixXcd bi = b[i].conjugate();
    for (int r = 0; r < ca; ++r) {
      for (int c = 0; c < ca; ++c) {
        const cplx v = ai(r, c);
        if (v == cplx(0.0)) continue;
        e.block(r * cb, c * cb, cb, cb) += v * bi;
      }
    }
  }
  return e;
}

}  // namespace

TransferOperator transfer_matrix(const MpsTensor& a) {
  TransferOperator t;
  t.matrix = kron_conj_sum(a, a);
  t.bond_dim = a.bond_dim();
  t.source = std::make_shared<const MpsTensor>(a);
  return t;
}

Eigen::MatrixXcd mixed_transfer(const MpsTensor& a, const MpsTensor& b) {
  if (a.physical_dim() != b.physical_dim()) {
    throw DimensionMismatch("physical dimensions " + std::to_string(a.physical_dim()) + " and " +
                            std::to_string(b.physical_dim()));
  }
  return kron_conj_sum(a, b);
}

MpsTensor block_tensor(const MpsTensor& a, int q, long cap) {
  if (q < 1) throw InvalidTensor("blocking order must be >= 1");
  long dq = 1;
  for (int k = 0; k < q; ++k) {
    dq *= a.physical_dim();
    if (dq > cap) {
      throw PhysicalDimCap("d^q exceeds cap " + std::to_string(cap) + " (d=" +
                           std::to_string(a.physical_dim()) + ", q=" + std::to_string(q) + ")");
    }
  }
  if (q == 1) return a;
  // Extend one site at a time; composite index = prev * d + new.
  std::vector<Eigen::MatrixXcd> cur(a.matrices().begin(), a.matrices().end());
  for (int k = 1; k < q; ++k) {
    std::vector<Eigen::MatrixXcd> next;
    next.reserve(cur.size() * a.physical_dim());
    for (const auto& left : cur) {
      for (const auto& right : a.matrices()) next.push_back(left * right);
    }
    cur = std::move(next);
  }
  return MpsTensor(std::move(cur));
}

MpsTensor direct_sum(std::span<const MpsTensor> blocks) {
  if (blocks.empty()) throw InvalidTensor("direct sum of zero blocks");
  const int d = blocks.front().physical_dim();
  int chi = 0;
  for (const auto& b : blocks) {
    if (b.physical_dim() != d) throw DimensionMismatch("direct sum needs equal physical dimension");
    chi += b.bond_dim();
  }
  std::vector<Eigen::MatrixXcd> out(d, Eigen::MatrixXcd::Zero(chi, chi));
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < d; ++i) out[i].block(off, off, b.bond_dim(), b.bond_dim()) = b[i];
    off += b.bond_dim();
  }
  return MpsTensor(std::move(out));
}

MpsTensor compress(const MpsTensor& a, const Eigen::MatrixXcd& basis) {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(a.physical_dim());
  for (const auto& m : a.matrices()) out.push_back(basis.adjoint() * m * basis);
  return MpsTensor(std::move(out));
}

Eigen::VectorXcd vec(const Eigen::MatrixXcd& x) {
  Eigen::VectorXcd v(x.size());
  const auto cols = x.cols();
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) v(r * cols + c) = x(r, c);
  }
  return v;
}

Eigen::MatrixXcd unvec(const Eigen::VectorXcd& v, int chi) {
  Eigen::MatrixXcd x(chi, chi);
  for (int r = 0; r < chi; ++r) {
    for (int c = 0; c < chi; ++c) x(r, c) = v(r * chi + c);
  }
  return x;
}

double transfer_spectral_radius(const MpsTensor& a) {
  const auto e = transfer_matrix(a).matrix;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(e, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

MpsTensor normalized(const MpsTensor& a) {
  const double rho = transfer_spectral_radius(a);
  if (!(rho > 1e-300)) throw InvalidTensor("transfer operator is nilpotent; the state family vanishes");
  return a.scaled(1.0 / std::sqrt(rho));
}

}  // namespace lrn::mps
