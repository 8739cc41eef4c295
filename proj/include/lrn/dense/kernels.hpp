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

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

// Low-level kernels on site-indexed amplitude vectors. A vector over n sites
// of local dimension d stores the configuration (s_0, ..., s_{n-1}) at
// sum_k s_k d^{n-1-k}: site 0 is the most significant digit.
//
// Every kernel exists twice with identical semantics: `serial` is the
// reference, `parallel` distributes the outer loop with OpenMP.

namespace lrn::dense::kernels {

/// Flat offsets of all configurations of `slots` (in the given order, first
/// slot most significant) and of the remaining slots (ascending).
struct SlotOffsets {
  std::vector<std::size_t> target;
  std::vector<std::size_t> rest;
};

SlotOffsets slot_offsets(int n, int d, std::span<const int> slots);

std::size_t ipow(std::size_t base, int e);

/// Index maps for a Kraus application: `in` over the acted-on slots and the
/// rest, `out` over the kept slots and the rest after dropping traced slots.
struct KrausPlan {
  SlotOffsets in;
  SlotOffsets out;
  std::size_t out_rows = 0;
};

KrausPlan plan_kraus(int n, int d, std::span<const int> slots, std::span<const int> kept);

namespace serial {

/// v <- (U acting on `slots`) v. U is d^k x d^k in the slot order given.
void apply_operator(Eigen::VectorXcd& v, int n, int d, std::span<const int> slots, const Eigen::MatrixXcd& u);

/// Amplitudes tr(A^{s_0} ... A^{s_{n-1}}), unnormalised.
Eigen::VectorXcd materialize(std::span<const Eigen::MatrixXcd> a, int n);

/// Psi with rows over `region` (given order) and columns over the rest.
Eigen::MatrixXcd gather(const Eigen::VectorXcd& v, int n, int d, std::span<const int> region);

/// Psi Psi^dagger for the gathered matrix.
Eigen::MatrixXcd reduced_density(const Eigen::VectorXcd& v, int n, int d, std::span<const int> region);

/// Applies the Kraus operators K_j (d^{|kept|} x d^{|slots|}) to every column
/// of phi (rows over n sites). The slots in `slots` but not in `kept` are
/// removed from the row index; the Kraus label is appended to the column
/// index as column * J + j. `kept` must be a subsequence of `slots`, and both
/// must be in ascending order.
Eigen::MatrixXcd apply_kraus(const Eigen::MatrixXcd& phi, int n, int d, std::span<const int> slots,
                             std::span<const int> kept, std::span<const Eigen::MatrixXcd> kraus);

}  // namespace serial

namespace parallel {

void apply_operator(Eigen::VectorXcd& v, int n, int d, std::span<const int> slots, const Eigen::MatrixXcd& u);
Eigen::VectorXcd materialize(std::span<const Eigen::MatrixXcd> a, int n);
Eigen::MatrixXcd gather(const Eigen::VectorXcd& v, int n, int d, std::span<const int> region);
Eigen::MatrixXcd reduced_density(const Eigen::VectorXcd& v, int n, int d, std::span<const int> region);
Eigen::MatrixXcd apply_kraus(const Eigen::MatrixXcd& phi, int n, int d, std::span<const int> slots,
                             std::span<const int> kept, std::span<const Eigen::MatrixXcd> kraus);

}  // namespace parallel

}  // namespace lrn::dense::kernels
