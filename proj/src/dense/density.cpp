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


#include "lrn/dense/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "lrn/dense/kernels.hpp"
#include "lrn/errors.hpp"

namespace lrn::dense {

namespace {

constexpr double kEigenFloor = 1e-12;
constexpr double kPsdTol = 1e-9;

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Eigen::VectorXd psd_eigenvalues(const Eigen::MatrixXcd& rho) {
  Eigen::VectorXd ev = hermitian_eigenvalues(rho);
  if (ev.size() > 0 && ev.minCoeff() < -kPsdTol) {
    throw NotPSD("eigenvalue " + std::to_string(ev.minCoeff()) + " below -1e-9");
  }
  return ev;
}

}  // namespace

Eigen::MatrixXcd reduced_density(const DenseState& psi, std::span<const int> region, bool parallel) {
  const std::size_t dim = kernels::ipow(psi.d, static_cast<int>(region.size()));
  if (dim > kDensityCap) throw SizeCap("reduced density of dimension " + std::to_string(dim) + " exceeds 2^12");
  return parallel ? kernels::parallel::reduced_density(psi.amplitudes, psi.n_sites, psi.d, region)
                  : kernels::serial::reduced_density(psi.amplitudes, psi.n_sites, psi.d, region);
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  const Eigen::VectorXd ev = psd_eigenvalues(rho);
  double s = 0.0;
  for (double mu : ev) {
    if (mu > kEigenFloor) s -= mu * std::log2(mu);
  }
  return std::max(s, 0.0);
}

double mutual_information(const DenseState& psi, std::span<const int> a, std::span<const int> b) {
  for (int x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) {
      throw OverlappingRegions("site " + std::to_string(x) + " is in both regions");
    }
  }
  std::vector<int> ab(a.begin(), a.end());
  ab.insert(ab.end(), b.begin(), b.end());
  const double i = von_neumann_entropy(reduced_density(psi, a)) + von_neumann_entropy(reduced_density(psi, b)) -
                   von_neumann_entropy(reduced_density(psi, ab));
  return std::max(i, 0.0);
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double trace_distance_mixed(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols() || rho.rows() != rho.cols()) {
    throw DimensionMismatch("density matrices have different shapes");
  }
  psd_eigenvalues(rho);
  psd_eigenvalues(sigma);
  return 0.5 * hermitian_eigenvalues(rho - sigma).cwiseAbs().sum();
}

FannesResult fannes_check(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma) {
  FannesResult r;
  r.delta = std::min(trace_distance_mixed(rho, sigma), 1.0);
  r.lhs = std::abs(von_neumann_entropy(rho) - von_neumann_entropy(sigma));
  const double qubits = std::log2(static_cast<double>(rho.rows()));
  r.bound = r.delta * qubits + binary_entropy(r.delta);
  r.slack = r.bound - r.lhs;
  r.holds = r.slack >= -1e-12;
  return r;
}

Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& rho, int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1 || rho.rows() != rho.cols() ||
      rho.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw BadFactorization("cannot split dimension " + std::to_string(rho.rows()) + " as " + std::to_string(dim_a) +
                           " x " + std::to_string(dim_b));
  }
  Eigen::MatrixXcd out(rho.rows(), rho.cols());
  for (int a = 0; a < dim_a; ++a) {
    for (int a2 = 0; a2 < dim_a; ++a2) {
      out.block(a * dim_b, a2 * dim_b, dim_b, dim_b) = rho.block(a2 * dim_b, a * dim_b, dim_b, dim_b);
    }
  }
  return out;
}

bool flatness_check(const Eigen::MatrixXcd& rho, int dim_a, int dim_b, double tau) {
  const Eigen::VectorXd ev = hermitian_eigenvalues(partial_transpose(rho, dim_a, dim_b));
  double lo = INFINITY, hi = 0.0;
  for (double mu : ev) {
    const double m = std::abs(mu);
    if (m > tau) {
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
  }
  return hi == 0.0 || hi - lo <= tau;
}

Proportionality proportionality(const Eigen::MatrixXcd& rho, int dim_a, int dim_b) {
  const Eigen::MatrixXcd x = partial_transpose(rho, dim_a, dim_b);
  const Eigen::MatrixXcd x2 = x * x;
  const Eigen::MatrixXcd x4 = x2 * x2;
  Proportionality p;
  const double den = x4.squaredNorm();
  p.nu = den > 0.0 ? (x4.adjoint() * x2).trace().real() / den : 0.0;
  const double base = x2.norm();
  p.residual = base > 0.0 ? (x2 - p.nu * x4).norm() / base : 0.0;
  return p;
}

}  // namespace lrn::dense
