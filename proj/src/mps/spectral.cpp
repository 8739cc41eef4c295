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

#include "lrn/mps/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "lrn/errors.hpp"

namespace lrn::mps {

namespace {

// Peripheral eigenvalues closer than this (relative) are treated as one
// degenerate eigenvalue.
constexpr double kClusterTol = 1e-6;

// Columns spanning the numerical kernel of m, smallest singular values last.
Eigen::MatrixXcd kernel(const Eigen::MatrixXcd& m, int want, double scale, int& found) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = 1e-8 * std::max(1.0, scale);
  found = 0;
  for (int k = 0; k < sv.size(); ++k) {
    if (sv(k) < cutoff) ++found;
  }
  const int n = static_cast<int>(m.cols());
  const int take = std::min(want, n);
  return svd.matrixV().rightCols(take);
}

}  // namespace

Eigen::MatrixXcd SpectralData::peripheral_projector(cplx value) const {
  const int n = right_vecs.empty() ? 0 : static_cast<int>(right_vecs.front().size());
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t m = 0; m < peripheral.size(); ++m) {
    if (std::abs(peripheral[m] - value) <= kClusterTol * std::max(1.0, std::abs(value))) {
      p += right_vecs[m] * left_vecs[m].adjoint();
    }
  }
  return p;
}

SpectralData spectral(const TransferOperator& t, double tol) { return spectral(t.matrix, tol); }

SpectralData spectral(const Eigen::MatrixXcd& e, double tol) {
  if (!(tol > 0.0 && tol < 0.5)) throw OutOfRange("spectral tolerance must lie in (0, 0.5)");
  SpectralData out;
  out.tol = tol;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(e, false);
  std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::stable_sort(ev.begin(), ev.end(), [](cplx a, cplx b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (std::abs(ma - mb) > 1e-14 * std::max(1.0, ma)) return ma > mb;
    return std::arg(a) < std::arg(b);
  });
  out.eigenvalues = ev;
  out.spectral_radius = ev.empty() ? 0.0 : std::abs(ev.front());
  const double radius = out.spectral_radius;
  if (radius == 0.0) return out;

  for (const auto& l : ev) {
    if (radius - std::abs(l) <= tol * std::max(1.0, radius)) out.peripheral.push_back(l);
  }

  // Group the peripheral eigenvalues into degenerate clusters.
  std::vector<std::vector<cplx>> clusters;
  for (const auto& l : out.peripheral) {
    bool placed = false;
    for (auto& c : clusters) {
      if (std::abs(c.front() - l) <= kClusterTol * std::max(1.0, radius)) {
        c.push_back(l);
        placed = true;
        break;
      }
    }
    if (!placed) clusters.push_back({l});
  }

  const int n = static_cast<int>(e.rows());
  const double scale = e.norm();
  std::vector<cplx> ordered;
  for (const auto& c : clusters) {
    const cplx mean = std::accumulate(c.begin(), c.end(), cplx(0.0)) / static_cast<double>(c.size());
    const int mult = static_cast<int>(c.size());
    const Eigen::MatrixXcd shifted = e - mean * Eigen::MatrixXcd::Identity(n, n);
    int right_found = 0, left_found = 0;
    Eigen::MatrixXcd r = kernel(shifted, mult, scale, right_found);
    Eigen::MatrixXcd l = kernel(shifted.adjoint(), mult, scale, left_found);
    if (right_found < mult || left_found < mult) {
      std::ostringstream msg;
      msg << "peripheral eigenvalue " << mean << " has algebraic multiplicity " << mult
          << " but geometric multiplicity " << std::min(right_found, left_found)
          << "; block the tensor first";
      throw NonDiagonalizablePeripheral(msg.str());
    }
    const Eigen::MatrixXcd pairing = l.adjoint() * r;
    Eigen::JacobiSVD<Eigen::MatrixXcd> psvd(pairing);
    if (psvd.singularValues().minCoeff() < 1e-10) {
      throw NonDiagonalizablePeripheral("left/right peripheral eigenvectors cannot be paired");
    }
    r = r * pairing.inverse();
    for (int k = 0; k < mult; ++k) {
      ordered.push_back(c[k]);
      out.left_vecs.push_back(l.col(k));
      out.right_vecs.push_back(r.col(k));
    }
  }
  out.peripheral = ordered;
  return out;
}

CorrelationLength correlation_length(const SpectralData& s) {
  CorrelationLength c;
  if (s.peripheral.size() > 1) {
    c.multi_block = true;
    c.value = std::numeric_limits<double>::infinity();
    c.abs_lambda2 = 1.0;
    return c;
  }
  if (s.eigenvalues.size() < 2 || s.spectral_radius == 0.0) return c;
  const double l2 = std::abs(s.eigenvalues[1]) / s.spectral_radius;
  c.abs_lambda2 = l2;
  if (l2 < 1e-14) return c;
  c.value = -1.0 / std::log(l2);
  return c;
}

}  // namespace lrn::mps
