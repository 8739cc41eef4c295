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

namespace lrn::dense {

/// Two-site gate on sites (a, b); u is d^2 x d^2 with site a most significant.
struct Gate2 {
  int a = 0;
  int b = 1;
  Eigen::MatrixXcd u;
};

/// Layer l acts on the pairs (i, i+1 mod n) with i = l mod 2, l mod 2 + 2, ...
struct BrickworkCircuit {
  int n_sites = 0;
  int depth = 0;
  int d = 2;
  std::vector<std::vector<Gate2>> layers;
};

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases of
/// R's diagonal absorbed into Q.
Eigen::MatrixXcd haar_unitary(int dim, std::uint64_t seed);

/// Pairs touched by layer `layer` on a ring of n sites (n even).
std::vector<std::pair<int, int>> layer_pairs(int n, int layer);

/// Throws GeometryMismatch for odd n or n < 2.
BrickworkCircuit random_brickwork(int n, int depth, std::uint64_t seed, int d = 2);
BrickworkCircuit identity_brickwork(int n, int depth, int d = 2);

/// Layers reversed, every gate replaced by its adjoint.
BrickworkCircuit adjoint(const BrickworkCircuit& q);

/// Applies the layers in order. Throws GeometryMismatch.
DenseState apply_brickwork(const DenseState& psi, const BrickworkCircuit& q, bool parallel = true);

/// Largest deviation from unitarity over all gates.
double unitarity_error(const BrickworkCircuit& q);

}  // namespace lrn::dense
