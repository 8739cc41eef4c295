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

#include <vector>

#include <json.hpp>

namespace lrn::dense {

/// Four contiguous arcs of a ring, in the order A, C1, B, C2. Each region
/// lists its sites in ring order.
struct Partition {
  int n = 0;
  std::vector<int> a, c1, b, c2;

  std::vector<int> c() const;   // C1 then C2
  std::vector<int> ab() const;  // A then B
  /// 0 = A, 1 = C1, 2 = B, 3 = C2.
  int region_of(int site) const;
};

/// Arcs of the given sizes starting at site `offset`. Throws
/// GeometryMismatch unless the sizes are positive and sum to n.
Partition make_partition(int n, int size_a, int size_c1, int size_b, int size_c2, int offset = 0);

/// Partition for a depth-D circuit: |A| = |B| = 2D + 2, the remaining sites
/// split between C1 and C2 with C2 taking the odd one. Throws
/// PartitionTooSmall when the ring cannot hold four regions of at least
/// 2D + 2 sites or when D < 1.
Partition build_partition(int n, int depth, int offset = 0);

/// Checks 4D+4 <= |A u B| <= 8D and every region >= 2D+2. Throws
/// PartitionTooSmall.
void validate_partition(const Partition& p, int depth);

nlohmann::json to_json(const Partition& p);

}  // namespace lrn::dense
