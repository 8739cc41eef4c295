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

#include "lrn/mps/rg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "lrn/errors.hpp"
#include "lrn/mps/spectral.hpp"

namespace lrn::mps {

namespace {

using Eigen::MatrixXcd;

MpsTensor diagonal_block(const MpsTensor& a, int off, int size) {
  std::vector<MatrixXcd> out;
  out.reserve(a.physical_dim());
  for (const auto& m : a.matrices()) out.push_back(m.block(off, off, size, size));
  return MpsTensor(std::move(out));
}

MatrixXcd hermitize(const MatrixXcd& m) { return 0.5 * (m + m.adjoint()); }

MatrixXcd positive_from(const Eigen::VectorXcd& v, int chi) {
  MatrixXcd x = hermitize(unvec(v, chi));
  if (x.trace().real() < 0.0) x = -x;
  return x;
}

}  // namespace

RgStepResult rg_step(const MpsTensor& a, double tau_rank, long cap) {
  const int d = a.physical_dim();
  const int chi = a.bond_dim();
  if (static_cast<long>(d) * d > cap) {
    throw PhysicalDimCap("two-site dimension " + std::to_string(static_cast<long>(d) * d) + " exceeds cap " +
                         std::to_string(cap));
  }
  MatrixXcd m(d * d, chi * chi);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m.row(i * d + j) = vec(a[i] * a[j]).transpose();
  }
  Eigen::BDCSVD<MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  if (!(smax > 0.0)) throw InvalidTensor("two-site tensor vanishes");
  int r = 0;
  while (r < sv.size() && sv(r) > tau_rank * smax) ++r;
  if (r < sv.size()) {
    const double kept = sv(r - 1) / smax;
    const double dropped = sv(r) / smax;
    if (dropped > 0.0 && kept / dropped < 10.0 && kept < 100.0 * tau_rank) {
      std::ostringstream msg;
      msg << "singular values " << kept << " (kept) and " << dropped
          << " (dropped) cluster at the rank cutoff " << tau_rank;
      throw RankTolerance(msg.str());
    }
  }
  RgStepResult out;
  out.singular_values = sv;
  out.rank = r;
  out.v = svd.matrixU().leftCols(r);
  std::vector<MatrixXcd> next;
  next.reserve(r);
  for (int k = 0; k < r; ++k) {
    const Eigen::VectorXcd row = sv(k) * svd.matrixV().col(k).conjugate();
    next.push_back(unvec(row, chi));
  }
  out.a_prime = MpsTensor(std::move(next));
  return out;
}

MpsTensor fixed_point_site_tensor(const std::vector<double>& schmidt) {
  const int chi = static_cast<int>(schmidt.size());
  std::vector<MatrixXcd> out;
  out.reserve(chi * chi);
  for (int l = 0; l < chi; ++l) {
    for (int r = 0; r < chi; ++r) {
      MatrixXcd t = MatrixXcd::Zero(chi, chi);
      t(l, r) = std::sqrt(schmidt[l]);
      out.push_back(std::move(t));
    }
  }
  return MpsTensor(std::move(out));
}

FixedPointState rg_fixed_point(const MpsTensor& a, double tol, int max_iter) {
  RgOptions opts;
  opts.tol = tol;
  opts.max_iter = max_iter;
  return rg_fixed_point(a, opts);
}

FixedPointState rg_fixed_point(const MpsTensor& a, const RgOptions& opts) {
  const CanonicalForm cf = canonical_decompose(a, opts.decompose);
  std::vector<MpsTensor> reps;
  std::vector<int> offsets, chis;
  int off = 0;
  for (int r : cf.representatives) {
    reps.push_back(cf.blocks[r].tensor);
    offsets.push_back(off);
    chis.push_back(cf.blocks[r].tensor.bond_dim());
    off += chis.back();
  }
  const int nb = static_cast<int>(reps.size());
  MpsTensor cur = direct_sum(reps);

  FixedPointState fp;
  fp.blocking = cf.blocking;
  fp.weights = cf.weights;
  for (int step = 0;; ++step) {
    double worst = 0.0;
    for (int k = 0; k < nb; ++k) {
      const auto s = spectral(transfer_matrix(diagonal_block(cur, offsets[k], chis[k])));
      const auto xi = correlation_length(s);
      fp.trace.push_back({step, k, xi.abs_lambda2, cur.physical_dim(), xi.multi_block});
      worst = std::max(worst, xi.abs_lambda2);
    }
    double overlap = 0.0;
    for (int j = 0; j < nb; ++j) {
      for (int k = j + 1; k < nb; ++k) {
        overlap = std::max(overlap, mixed_transfer(diagonal_block(cur, offsets[j], chis[j]),
                                                   diagonal_block(cur, offsets[k], chis[k]))
                                        .norm());
      }
    }
    fp.last_lambda2 = worst;
    fp.steps = step;
    if (worst < opts.tol && overlap < opts.tau_orth) break;
    if (step >= opts.max_iter) {
      std::ostringstream msg;
      msg << "RG flow not converged after " << step << " steps; last |lambda_2| = " << worst
          << ", block overlap = " << overlap;
      throw ConvergenceFailure(msg.str());
    }
    cur = rg_step(cur, opts.tau_rank, opts.decompose.physical_dim_cap).a_prime;
  }

  const int dp = cur.physical_dim();
  int site_dim = 0;
  for (int c : chis) site_dim += c * c;
  fp.site_isometry = MatrixXcd::Zero(dp, site_dim);
  int col = 0;
  for (int k = 0; k < nb; ++k) {
    const int chi = chis[k];
    const MpsTensor blk = diagonal_block(cur, offsets[k], chi);
    const auto s = spectral(transfer_matrix(blk));
    const MatrixXcd x = positive_from(s.right_vecs.front(), chi);
    const MatrixXcd y = positive_from(s.left_vecs.front(), chi);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> ys(y);
    const MatrixXcd sq = ys.operatorSqrt();
    const MatrixXcd sq_inv = ys.operatorInverseSqrt();
    Eigen::SelfAdjointEigenSolver<MatrixXcd> xs(hermitize(sq * x * sq));
    // Descending Schmidt order.
    const MatrixXcd w = xs.eigenvectors().rowwise().reverse();
    Eigen::VectorXd lam = xs.eigenvalues().reverse();
    lam /= lam.sum();
    const MatrixXcd g = w.adjoint() * sq;
    const MatrixXcd g_inv = sq_inv * w;
    const MpsTensor hat = blk.gauged(g, g_inv);

    FixedPointBlock b;
    b.label = k;
    b.schmidt.assign(lam.data(), lam.data() + lam.size());
    b.tensor = hat;
    b.site_isometry = MatrixXcd(dp, chi * chi);
    for (int i = 0; i < dp; ++i) {
      for (int l = 0; l < chi; ++l) {
        for (int r = 0; r < chi; ++r) b.site_isometry(i, l * chi + r) = hat[i](l, r) / std::sqrt(lam(l));
      }
    }
    fp.site_isometry.middleCols(col, chi * chi) = b.site_isometry;
    col += chi * chi;
    fp.site_structure.emplace_back(chi, chi);
    fp.blocks.push_back(std::move(b));
  }
  fp.flowed = cur;
  return fp;
}

}  // namespace lrn::mps
