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
#include <vector>

#include "lrn/dense/state.hpp"
#include "lrn/mps/rg.hpp"
#include "lrn/mps/tensor.hpp"

namespace lrn::dense {

// Tensors with known canonical forms used across tests and experiments.

/// A^0 = |0><0|, A^1 = |1><1|.
mps::MpsTensor ghz_tensor();
/// A^0 = |0><0|, A^1 = diag(0, e^{i phi}, e^{-i phi}); the N-site state is
/// |0...0> + 2 cos(phi N) |1...1>.
mps::MpsTensor chi3_tensor(double phi);
/// d = 4, A^i = |i><i|: four locally orthogonal one-dimensional blocks.
mps::MpsTensor four_block_tensor();
/// Single block with A^{(l,r)} = |l><r| / sqrt(2): a chain of Bell links.
mps::MpsTensor bell_link_tensor();
/// d = 2, chi = 1, A^0 = 1, A^1 = 0.
mps::MpsTensor product_tensor();
/// A^0 = |0><1|, A^1 = |1><0|: period-two peripheral spectrum.
mps::MpsTensor antiferromagnet_tensor();

/// Replaces the weight spectrum by constant weights sqrt(p_k). Throws
/// InvalidWeight if the count differs from the number of classes or a
/// probability is negative, or if they do not sum to one.
mps::FixedPointState with_weights(mps::FixedPointState fp, std::span<const double> probabilities);

/// Dimension of the fixed-point site space, sum over classes of chi_k^2.
int fixed_point_site_dim(const mps::FixedPointState& fp);

/// Fixed point state on m sites: sum_k alpha_k / c |omega_k ... omega_k>,
/// weights evaluated at m * 2^steps blocked sites. With `pad_to_qubits` the
/// site space is embedded into the next power of two (at least 2).
DenseState materialize_fixed_point(const mps::FixedPointState& fp, int m, bool pad_to_qubits = false);

/// Same state mapped into the flowed physical space through the site
/// isometry.
DenseState materialize_fixed_point_physical(const mps::FixedPointState& fp, int m);

/// |<reference|fixed point>| for m fixed-point sites. The reference is the
/// original tensor on m * blocking sites when no RG step was taken, and the
/// flowed blocks with the same weights otherwise.
double materialization_overlap(const mps::MpsTensor& original, const mps::FixedPointState& fp, int m);

}  // namespace lrn::dense
