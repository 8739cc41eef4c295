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

#include <span>

#include <Eigen/Dense>

#include "lrn/dense/state.hpp"

namespace lrn::dense {

/// Tr over the complement of `region`; rows follow the order of `region`.
/// Throws SizeCap when d^|region| exceeds 2^12.
Eigen::MatrixXcd reduced_density(const DenseState& psi, std::span<const int> region, bool parallel = true);

/// Entropy in bits over eigenvalues above 1e-12. Throws NotPSD.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

/// S(A) + S(B) - S(AB) in bits. Throws OverlappingRegions.
double mutual_information(const DenseState& psi, std::span<const int> a, std::span<const int> b);

double binary_entropy(double p);

/// Half the trace norm of rho - sigma. Throws DimensionMismatch and NotPSD.
double trace_distance_mixed(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma);

struct FannesResult {
  double delta = 0.0;
  double lhs = 0.0;    // |S(rho) - S(sigma)|
  double bound = 0.0;  // delta |R| + H_bin(delta)
  double slack = 0.0;  // bound - lhs
  bool holds = true;
};

/// Continuity bound with |R| = log2 of the matrix dimension. A slack down to
/// -1e-12 still counts as holding.
FannesResult fannes_check(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma);

/// Transpose over the first factor of a (dim_a * dim_b)-dimensional operator.
/// Throws BadFactorization.
Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& rho, int dim_a, int dim_b);

/// True iff every eigenvalue of the partial transpose with |mu| > tau has the
/// same modulus within tau.
bool flatness_check(const Eigen::MatrixXcd& rho, int dim_a, int dim_b, double tau = 1e-9);

/// Least-squares nu for X^2 ~ nu X^4 with X the partial transpose, and the
/// residual ||X^2 - nu X^4|| / ||X^2||.
struct Proportionality {
  double nu = 0.0;
  double residual = 0.0;
};

Proportionality proportionality(const Eigen::MatrixXcd& rho, int dim_a, int dim_b);

}  // namespace lrn::dense
