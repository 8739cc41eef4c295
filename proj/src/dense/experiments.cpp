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


#include "lrn/dense/experiments.hpp"

#include <cmath>
#include <cstdio>

#include "lrn/criteria/theorems.hpp"
#include "lrn/dense/circuit.hpp"
#include "lrn/dense/density.hpp"
#include "lrn/dense/fixed_point.hpp"
#include "lrn/errors.hpp"

namespace lrn::dense {

bool InvarianceReport::passed(double tol) const {
  return std::abs(before - after) < tol && std::abs(before - shannon) < tol;
}

nlohmann::json InvarianceReport::to_json() const {
  return {{"before", before},   {"after", after}, {"shannon", shannon}, {"partition", dense::to_json(partition)},
          {"seed", seed},       {"depth", depth}, {"n_qubits", n_qubits}};
}

InvarianceReport lemma_invariance_experiment(const mps::FixedPointState& fp, int n_qubits, int depth,
                                             std::uint64_t seed, int offset) {
  const DenseState sites = materialize_fixed_point(fp, 1, true);
  const int per_site = static_cast<int>(std::lround(std::log2(static_cast<double>(sites.d))));
  if (n_qubits % per_site != 0) {
    throw GeometryMismatch(std::to_string(n_qubits) + " qubits do not split into sites of " +
                           std::to_string(per_site) + " qubits");
  }
  const int m = n_qubits / per_site;
  if (static_cast<double>(n_qubits) > std::log2(static_cast<double>(kAmplitudeCap)) + 1e-9) {
    throw SizeCap(std::to_string(n_qubits) + " qubits exceed the amplitude cap");
  }
  InvarianceReport r;
  r.seed = seed;
  r.depth = depth;
  r.n_qubits = n_qubits;
  r.partition = build_partition(n_qubits, depth, offset);
  const DenseState psi = as_qubits(materialize_fixed_point(fp, m, true));
  const BrickworkCircuit q = random_brickwork(n_qubits, depth, seed);
  const DenseState phi = apply_brickwork(psi, q);
  r.before = mutual_information(psi, r.partition.a, r.partition.b);
  r.after = mutual_information(phi, r.partition.a, r.partition.b);
  r.shannon = criteria::shannon_entropy(mps::evaluate_weights(fp.weights, static_cast<long>(m) << fp.steps));
  return r;
}

std::string csv_header() { return "label,n_qubits,depth,seed,before,after,shannon,passed"; }

std::string csv_row(const std::string& label, const InvarianceReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s,%d,%d,%llu,%.17g,%.17g,%.17g,%d", label.c_str(), r.n_qubits, r.depth,
                static_cast<unsigned long long>(r.seed), r.before, r.after, r.shannon, r.passed() ? 1 : 0);
  return buf;
}

}  // namespace lrn::dense
