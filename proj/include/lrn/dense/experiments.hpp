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
#include <string>
#include <vector>

#include <json.hpp>

#include "lrn/dense/partition.hpp"
#include "lrn/mps/rg.hpp"

namespace lrn::dense {

struct InvarianceReport {
  double before = 0.0;
  double after = 0.0;
  double shannon = 0.0;
  Partition partition;
  std::uint64_t seed = 0;
  int depth = 0;
  int n_qubits = 0;

  bool passed(double tol = 1e-8) const;
  nlohmann::json to_json() const;
};

/// Materializes the fixed point on n_qubits qubits (sites padded to a power
/// of two), applies a random depth-D brickwork circuit, and compares
/// I_{A,B} before and after with the Shannon entropy of the weights. Throws
/// SizeCap, PartitionTooSmall and GeometryMismatch.
InvarianceReport lemma_invariance_experiment(const mps::FixedPointState& fp, int n_qubits, int depth,
                                             std::uint64_t seed, int offset = 0);

/// One CSV row per report under the header
/// label,n_qubits,depth,seed,before,after,shannon,passed.
std::string csv_header();
std::string csv_row(const std::string& label, const InvarianceReport& r);

}  // namespace lrn::dense
