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


#include "lrn/dense/fixed_point.hpp"

#include <cmath>
#include <string>

#include "lrn/dense/kernels.hpp"
#include "lrn/errors.hpp"

namespace lrn::dense {

using Eigen::MatrixXcd;
using mps::MpsTensor;

namespace {

MatrixXcd unit(int chi, int r, int c) {
  MatrixXcd m = MatrixXcd::Zero(chi, chi);
  m(r, c) = 1.0;
  return m;
}

int padded_dim(int s) {
  int p = 2;
  while (p < s) p *= 2;
  return p;
}

// Block k of the fixed point as a tensor on the site space of dimension
// `site_dim`, zero outside the block's range.
MpsTensor embedded_block(const mps::FixedPointState& fp, int k, int site_dim) {
  int off = 0;
  for (int j = 0; j < k; ++j) off += static_cast<int>(fp.blocks[j].schmidt.size() * fp.blocks[j].schmidt.size());
  const MpsTensor t = mps::fixed_point_site_tensor(fp.blocks[k].schmidt);
  const int chi = t.bond_dim();
  std::vector<MatrixXcd> m(site_dim, MatrixXcd::Zero(chi, chi));
  for (int s = 0; s < t.physical_dim(); ++s) m[off + s] = t[s];
  return MpsTensor(std::move(m));
}

MpsTensor through_isometry(const MpsTensor& t, const MatrixXcd& u) {
  const int chi = t.bond_dim();
  std::vector<MatrixXcd> m(u.rows(), MatrixXcd::Zero(chi, chi));
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    for (int s = 0; s < t.physical_dim(); ++s) m[i] += u(i, s) * t[s];
  }
  return MpsTensor(std::move(m));
}

long blocked_length(const mps::FixedPointState& fp, int m) { return static_cast<long>(m) << fp.steps; }

template <typename BlockFn>
DenseState weighted_sum(const mps::FixedPointState& fp, int m, int d, BlockFn block) {
  const auto amps = fp.weights.amplitudes(blocked_length(fp, m));
  if (amps.size() != fp.blocks.size()) {
    throw InvalidWeight(std::to_string(amps.size()) + " weights for " + std::to_string(fp.blocks.size()) + " classes");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(kernels::ipow(d, m)));
  for (std::size_t k = 0; k < fp.blocks.size(); ++k) {
    if (std::abs(amps[k]) == 0.0) continue;
    Eigen::VectorXcd part = mps_amplitudes(block(static_cast<int>(k)), m);
    const double nrm = part.norm();
    if (nrm > 0.0) v += amps[k] * (part / nrm);
  }
  return make_state(m, d, std::move(v));
}

}  // namespace

MpsTensor ghz_tensor() { return MpsTensor({unit(2, 0, 0), unit(2, 1, 1)}); }

MpsTensor chi3_tensor(double phi) {
  MatrixXcd a1 = MatrixXcd::Zero(3, 3);
  a1(1, 1) = std::polar(1.0, phi);
  a1(2, 2) = std::polar(1.0, -phi);
  return MpsTensor({unit(3, 0, 0), a1});
}

MpsTensor four_block_tensor() {
  std::vector<MatrixXcd> m;
  for (int i = 0; i < 4; ++i) m.push_back(unit(4, i, i));
  return MpsTensor(std::move(m));
}

MpsTensor bell_link_tensor() {
  std::vector<MatrixXcd> m;
  for (int l = 0; l < 2; ++l) {
    for (int r = 0; r < 2; ++r) m.push_back(unit(2, l, r) / std::sqrt(2.0));
  }
  return MpsTensor(std::move(m));
}

MpsTensor product_tensor() { return MpsTensor({MatrixXcd::Ones(1, 1), MatrixXcd::Zero(1, 1)}); }

MpsTensor antiferromagnet_tensor() { return MpsTensor({unit(2, 0, 1), unit(2, 1, 0)}); }

mps::FixedPointState with_weights(mps::FixedPointState fp, std::span<const double> probabilities) {
  if (probabilities.size() != fp.blocks.size()) {
    throw InvalidWeight(std::to_string(probabilities.size()) + " probabilities for " +
                        std::to_string(fp.blocks.size()) + " classes");
  }
  fp.weights.blocks.clear();
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw InvalidWeight("negative probability " + std::to_string(p));
    total += p;
    fp.weights.blocks.push_back({mps::WeightTerm{cplx(std::sqrt(p), 0.0), 0.0}});
  }
  if (std::abs(total - 1.0) > 1e-9) throw InvalidWeight("probabilities sum to " + std::to_string(total));
  return fp;
}

int fixed_point_site_dim(const mps::FixedPointState& fp) {
  int s = 0;
  for (const auto& b : fp.blocks) s += static_cast<int>(b.schmidt.size() * b.schmidt.size());
  return s;
}

DenseState materialize_fixed_point(const mps::FixedPointState& fp, int m, bool pad_to_qubits) {
  const int s = fixed_point_site_dim(fp);
  const int d = pad_to_qubits ? padded_dim(s) : s;
  return weighted_sum(fp, m, d, [&](int k) { return embedded_block(fp, k, d); });
}

DenseState materialize_fixed_point_physical(const mps::FixedPointState& fp, int m) {
  const int s = fixed_point_site_dim(fp);
  return weighted_sum(fp, m, static_cast<int>(fp.site_isometry.rows()),
                      [&](int k) { return through_isometry(embedded_block(fp, k, s), fp.site_isometry); });
}

double materialization_overlap(const MpsTensor& original, const mps::FixedPointState& fp, int m) {
  const DenseState mine = materialize_fixed_point_physical(fp, m);
  DenseState ref;
  if (fp.steps == 0) {
    ref = materialize_mps(original, m * fp.blocking);
  } else {
    std::vector<int> offsets;
    int off = 0;
    for (const auto& b : fp.blocks) {
      offsets.push_back(off);
      off += static_cast<int>(b.schmidt.size());
    }
    ref = weighted_sum(fp, m, fp.flowed.physical_dim(), [&](int k) {
      const int chi = static_cast<int>(fp.blocks[k].schmidt.size());
      std::vector<MatrixXcd> mats;
      for (const auto& a : fp.flowed.matrices()) mats.push_back(a.block(offsets[k], offsets[k], chi, chi));
      return MpsTensor(std::move(mats));
    });
  }
  return std::abs(overlap(ref, mine));
}

}  // namespace lrn::dense
