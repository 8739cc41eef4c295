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


#include "lrn/dense/stabilizer_bridge.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "lrn/dense/kernels.hpp"
#include "lrn/errors.hpp"

namespace lrn::dense {

using stabilizer::Gate;

Eigen::MatrixXcd clifford_matrix(Gate g) {
  const cplx i(0.0, 1.0);
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd m;
  switch (g) {
    case Gate::kH:
      m.resize(2, 2);
      m << h, h, h, -h;
      break;
    case Gate::kS:
      m.resize(2, 2);
      m << 1, 0, 0, i;
      break;
    case Gate::kX:
      m.resize(2, 2);
      m << 0, 1, 1, 0;
      break;
    case Gate::kY:
      m.resize(2, 2);
      m << 0, -i, i, 0;
      break;
    case Gate::kZ:
      m.resize(2, 2);
      m << 1, 0, 0, -1;
      break;
    case Gate::kCnot:
      m = Eigen::MatrixXcd::Zero(4, 4);
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
      break;
    case Gate::kCz:
      m = Eigen::MatrixXcd::Identity(4, 4);
      m(3, 3) = -1.0;
      break;
  }
  return m;
}

std::vector<CliffordOp> random_clifford_circuit(int n, int depth, std::uint64_t seed) {
  static constexpr Gate kSingle[5] = {Gate::kH, Gate::kS, Gate::kX, Gate::kY, Gate::kZ};
  std::mt19937_64 rng(seed);
  std::vector<CliffordOp> ops;
  std::vector<int> perm(n);
  for (int l = 0; l < depth; ++l) {
    for (int q = 0; q < n; ++q) {
      const auto k = std::uniform_int_distribution<int>(0, 5)(rng);
      if (k < 5) ops.push_back({kSingle[k], {q}});
    }
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int j = 0; j + 1 < n; j += 2) {
      if (std::bernoulli_distribution(0.75)(rng)) {
        ops.push_back({std::bernoulli_distribution(0.5)(rng) ? Gate::kCnot : Gate::kCz, {perm[j], perm[j + 1]}});
      }
    }
  }
  return ops;
}

DenseState run_clifford_dense(int n, const std::vector<CliffordOp>& ops) {
  DenseState s = basis_state(n, 2);
  for (const auto& op : ops) kernels::serial::apply_operator(s.amplitudes, n, 2, op.targets, clifford_matrix(op.gate));
  return s;
}

stabilizer::StabilizerTableau run_clifford_tableau(int n, const std::vector<CliffordOp>& ops) {
  auto t = stabilizer::StabilizerTableau::zero_state(n);
  for (const auto& op : ops) t.apply_inplace(op.gate, op.targets);
  return t;
}

Eigen::VectorXcd apply_pauli(const stabilizer::PauliString& p, const Eigen::VectorXcd& v) {
  const int n = p.num_qubits();
  std::size_t xmask = 0, zmask = 0;
  int ys = 0;
  for (int q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    if (p.x(q)) xmask |= bit;
    if (p.z(q)) zmask |= bit;
    if (p.x(q) && p.z(q)) ++ys;
  }
  static const cplx kPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx global = kPow[(p.phase() + ys) % 4];
  Eigen::VectorXcd out(v.size());
  for (std::size_t b = 0; b < static_cast<std::size_t>(v.size()); ++b) {
    const double sign = (std::popcount(b & zmask) & 1) ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(b ^ xmask)) = global * sign * v(static_cast<Eigen::Index>(b));
  }
  return out;
}

DenseState tableau_to_dense(const stabilizer::StabilizerTableau& t) {
  const int n = t.num_qubits();
  const std::size_t dim = kernels::ipow(2, n);
  if (dim > kAmplitudeCap) throw SizeCap(std::to_string(n) + " qubits exceed the amplitude cap");
  for (std::size_t b = 0; b < dim; ++b) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(b)) = 1.0;
    for (const auto& g : t.generators()) v = 0.5 * (v + apply_pauli(g, v));
    if (v.norm() > 1e-6) return make_state(n, 2, std::move(v));
  }
  throw ZeroState("stabilizer group projects every basis state to zero");
}

}  // namespace lrn::dense
