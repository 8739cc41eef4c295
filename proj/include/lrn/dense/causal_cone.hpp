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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lrn/dense/circuit.hpp"
#include "lrn/dense/partition.hpp"
#include "lrn/dense/state.hpp"

namespace lrn::dense {

/// Channel on the sites `support` = kept ++ traced, mapping operators on the
/// support to operators on `kept`. K_j = (I_kept (x) <j|_traced) G.
struct BoundaryChannel {
  std::string label;  // A_L, A_R, B_L or B_R
  std::vector<int> kept;
  std::vector<int> traced;
  std::vector<Gate2> gates;  // time order
  std::vector<Eigen::MatrixXcd> kraus;

  std::vector<int> support() const;
};

/// The circuit with bulk gates of A and B pulled out as U_A, U_B, gates that
/// cancel under the partial trace removed, and the remaining gates grouped
/// into boundary channels.
struct ReducedNetwork {
  Partition partition;
  int d = 2;
  std::vector<Gate2> bulk_a, bulk_b;
  Eigen::MatrixXcd u_a;  // over partition.a, inverse of the bulk gates of A
  Eigen::MatrixXcd u_b;
  std::vector<BoundaryChannel> channels;  // only groups with gates
  int cancelled = 0;
  /// Sub-regions of A and B untouched by any channel, and the traced sites
  /// outside every channel.
  std::vector<int> a_c, b_c, c;
};

/// Sites reachable from the gate (layer, index) through the later layers.
std::vector<int> forward_cone(const BrickworkCircuit& q, int layer, int index);

/// Throws PartitionTooSmall when a gate's forward cone spans three regions or
/// two boundary groups overlap, and GeometryMismatch if the sizes differ.
ReducedNetwork causal_cone_reduce(const BrickworkCircuit& q, const Partition& p);

/// Sum_j K_j X K_j^dagger for X over the channel support.
Eigen::MatrixXcd apply_channel(const BoundaryChannel& ch, const Eigen::MatrixXcd& x, int d);

/// max |sum_j K_j^dagger K_j - I|.
double cptp_error(const BoundaryChannel& ch);

/// Channels applied to |psi><psi| with identity on A_C, B_C and the trace over
/// C. Rows follow partition.a then partition.b.
Eigen::MatrixXcd sigma_direct(const ReducedNetwork& net, const DenseState& psi, bool parallel = true);

/// (U_A (x) U_B) rho_AB(Q psi) (U_A (x) U_B)^dagger, same row order.
Eigen::MatrixXcd sigma_reference(const ReducedNetwork& net, const BrickworkCircuit& q, const DenseState& psi);

}  // namespace lrn::dense
