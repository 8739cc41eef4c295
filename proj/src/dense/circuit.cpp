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


#include "lrn/dense/circuit.hpp"

#include <random>
#include <string>

#include "lrn/dense/kernels.hpp"
#include "lrn/errors.hpp"

namespace lrn::dense {

Eigen::MatrixXcd haar_unitary(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd z(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) z(i, j) = cplx(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const double m = std::abs(r(j, j));
    if (m > 0.0) q.col(j) *= r(j, j) / m;
  }
  return q;
}

std::vector<std::pair<int, int>> layer_pairs(int n, int layer) {
  if (n < 2 || n % 2 != 0) throw GeometryMismatch("brickwork needs an even number of sites, got " + std::to_string(n));
  std::vector<std::pair<int, int>> out;
  for (int i = layer % 2; i < n; i += 2) out.emplace_back(i, (i + 1) % n);
  return out;
}

BrickworkCircuit random_brickwork(int n, int depth, std::uint64_t seed, int d) {
  BrickworkCircuit q{n, depth, d, {}};
  std::mt19937_64 seeder(seed);
  for (int l = 0; l < depth; ++l) {
    std::vector<Gate2> layer;
    for (auto [a, b] : layer_pairs(n, l)) layer.push_back(Gate2{a, b, haar_unitary(d * d, seeder())});
    q.layers.push_back(std::move(layer));
  }
  return q;
}

BrickworkCircuit identity_brickwork(int n, int depth, int d) {
  BrickworkCircuit q{n, depth, d, {}};
  for (int l = 0; l < depth; ++l) {
    std::vector<Gate2> layer;
    for (auto [a, b] : layer_pairs(n, l)) layer.push_back(Gate2{a, b, Eigen::MatrixXcd::Identity(d * d, d * d)});
    q.layers.push_back(std::move(layer));
  }
  return q;
}

BrickworkCircuit adjoint(const BrickworkCircuit& q) {
  BrickworkCircuit out{q.n_sites, q.depth, q.d, {}};
  for (auto it = q.layers.rbegin(); it != q.layers.rend(); ++it) {
    std::vector<Gate2> layer;
    for (const auto& g : *it) layer.push_back(Gate2{g.a, g.b, g.u.adjoint()});
    out.layers.push_back(std::move(layer));
  }
  return out;
}

DenseState apply_brickwork(const DenseState& psi, const BrickworkCircuit& q, bool parallel) {
  if (psi.n_sites != q.n_sites || psi.d != q.d) {
    throw GeometryMismatch("circuit on " + std::to_string(q.n_sites) + " sites of dimension " + std::to_string(q.d) +
                           " applied to a state on " + std::to_string(psi.n_sites) + " sites of dimension " +
                           std::to_string(psi.d));
  }
  DenseState out = psi;
  for (const auto& layer : q.layers) {
    for (const auto& g : layer) {
      const int slots[2] = {g.a, g.b};
      if (parallel) {
        kernels::parallel::apply_operator(out.amplitudes, out.n_sites, out.d, slots, g.u);
      } else {
        kernels::serial::apply_operator(out.amplitudes, out.n_sites, out.d, slots, g.u);
      }
    }
  }
  return out;
}

double unitarity_error(const BrickworkCircuit& q) {
  double err = 0.0;
  for (const auto& layer : q.layers) {
    for (const auto& g : layer) {
      const auto dim = g.u.rows();
      err = std::max(err, (g.u.adjoint() * g.u - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff());
    }
  }
  return err;
}

}  // namespace lrn::dense
