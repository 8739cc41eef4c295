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

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "lrn/dense/state.hpp"
#include "lrn/stabilizer/tableau.hpp"

namespace lrn::dense {

struct CliffordOp {
  stabilizer::Gate gate = stabilizer::Gate::kH;
  std::vector<int> targets;
};

/// Dense matrix of a Clifford gate; two-qubit gates take the first target as
/// the most significant qubit (the control for CNOT).
Eigen::MatrixXcd clifford_matrix(stabilizer::Gate g);

/// Each layer draws one of {I, H, S, X, Y, Z} per qubit and then CNOT or CZ
/// on a random set of disjoint pairs.
std::vector<CliffordOp> random_clifford_circuit(int n, int depth, std::uint64_t seed);

DenseState run_clifford_dense(int n, const std::vector<CliffordOp>& ops);
stabilizer::StabilizerTableau run_clifford_tableau(int n, const std::vector<CliffordOp>& ops);

/// P |psi> for a Pauli string on n qubits, qubit 0 most significant.
Eigen::VectorXcd apply_pauli(const stabilizer::PauliString& p, const Eigen::VectorXcd& v);

/// The stabilized state, from prod_k (I + g_k)/2 on the first computational
/// basis vector with nonzero projection. Throws SizeCap beyond 2^24.
DenseState tableau_to_dense(const stabilizer::StabilizerTableau& t);

}  // namespace lrn::dense
