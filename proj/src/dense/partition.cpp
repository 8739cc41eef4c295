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


#include "lrn/dense/partition.hpp"

#include <string>

#include "lrn/errors.hpp"

namespace lrn::dense {

std::vector<int> Partition::c() const {
  std::vector<int> out = c1;
  out.insert(out.end(), c2.begin(), c2.end());
  return out;
}

std::vector<int> Partition::ab() const {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

int Partition::region_of(int site) const {
  const std::vector<int>* regions[4] = {&a, &c1, &b, &c2};
  for (int r = 0; r < 4; ++r) {
    for (int s : *regions[r]) {
      if (s == site) return r;
    }
  }
  throw GeometryMismatch("site " + std::to_string(site) + " is not in the partition");
}

Partition make_partition(int n, int size_a, int size_c1, int size_b, int size_c2, int offset) {
  if (size_a < 1 || size_c1 < 1 || size_b < 1 || size_c2 < 1 || size_a + size_c1 + size_b + size_c2 != n) {
    throw GeometryMismatch("region sizes must be positive and sum to " + std::to_string(n));
  }
  Partition p;
  p.n = n;
  int site = ((offset % n) + n) % n;
  auto take = [&](std::vector<int>& r, int k) {
    for (int j = 0; j < k; ++j) {
      r.push_back(site);
      site = (site + 1) % n;
    }
  };
  take(p.a, size_a);
  take(p.c1, size_c1);
  take(p.b, size_b);
  take(p.c2, size_c2);
  return p;
}

void validate_partition(const Partition& p, int depth) {
  const int ab = static_cast<int>(p.a.size() + p.b.size());
  const int need = 2 * depth + 2;
  if (ab < 4 * depth + 4 || ab > 8 * depth) {
    throw PartitionTooSmall("|A u B| = " + std::to_string(ab) + " outside [" + std::to_string(4 * depth + 4) + ", " +
                            std::to_string(8 * depth) + "]");
  }
  for (const auto* r : {&p.a, &p.c1, &p.b, &p.c2}) {
    if (static_cast<int>(r->size()) < need) {
      throw PartitionTooSmall("region of " + std::to_string(r->size()) + " sites, need " + std::to_string(need));
    }
  }
}

Partition build_partition(int n, int depth, int offset) {
  if (depth < 1) throw PartitionTooSmall("depth " + std::to_string(depth) + " admits no valid partition");
  const int a = 2 * depth + 2;
  const int c = n - 2 * a;
  if (c < 2 * a) {
    throw PartitionTooSmall(std::to_string(n) + " sites cannot hold four regions of " + std::to_string(a));
  }
  Partition p = make_partition(n, a, c / 2, a, c - c / 2, offset);
  validate_partition(p, depth);
  return p;
}

nlohmann::json to_json(const Partition& p) {
  return {{"n", p.n}, {"A", p.a}, {"C1", p.c1}, {"B", p.b}, {"C2", p.c2}};
}

}  // namespace lrn::dense
