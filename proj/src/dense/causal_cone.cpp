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


#include "lrn/dense/causal_cone.hpp"

#include <algorithm>
#include <string>

#include "lrn/dense/density.hpp"
#include "lrn/dense/kernels.hpp"
#include "lrn/errors.hpp"

namespace lrn::dense {

namespace {

constexpr int kA = 1, kC1 = 2, kB = 4, kC2 = 8;

int position(const std::vector<int>& list, int site) {
  const auto it = std::find(list.begin(), list.end(), site);
  return it == list.end() ? -1 : static_cast<int>(it - list.begin());
}

// Ordered product of `gates` as an operator on `sites` (first site most
// significant).
Eigen::MatrixXcd gate_product(const std::vector<int>& sites, const std::vector<Gate2>& gates, int d) {
  const int n = static_cast<int>(sites.size());
  const auto dim = static_cast<Eigen::Index>(kernels::ipow(d, n));
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(dim, dim);
  Eigen::VectorXcd col;
  for (const auto& gate : gates) {
    const int slots[2] = {position(sites, gate.a), position(sites, gate.b)};
    for (Eigen::Index c = 0; c < dim; ++c) {
      col = g.col(c);
      kernels::serial::apply_operator(col, n, d, slots, gate.u);
      g.col(c) = col;
    }
  }
  return g;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
  Eigen::MatrixXcd out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  }
  return out;
}

const char* group_label(int mask) {
  switch (mask) {
    case kA | kC2: return "A_L";
    case kA | kC1: return "A_R";
    case kB | kC1: return "B_L";
    case kB | kC2: return "B_R";
  }
  return nullptr;
}

}  // namespace

std::vector<int> BoundaryChannel::support() const {
  std::vector<int> s = kept;
  s.insert(s.end(), traced.begin(), traced.end());
  return s;
}

std::vector<int> forward_cone(const BrickworkCircuit& q, int layer, int index) {
  const auto& g = q.layers.at(layer).at(index);
  std::vector<char> in(q.n_sites, 0);
  in[g.a] = in[g.b] = 1;
  for (std::size_t l = layer + 1; l < q.layers.size(); ++l) {
    for (const auto& h : q.layers[l]) {
      if (in[h.a] || in[h.b]) in[h.a] = in[h.b] = 1;
    }
  }
  std::vector<int> out;
  for (int s = 0; s < q.n_sites; ++s) {
    if (in[s]) out.push_back(s);
  }
  return out;
}

ReducedNetwork causal_cone_reduce(const BrickworkCircuit& q, const Partition& p) {
  if (q.n_sites != p.n) {
    throw GeometryMismatch("circuit has " + std::to_string(q.n_sites) + " sites, partition " + std::to_string(p.n));
  }
  ReducedNetwork net;
  net.partition = p;
  net.d = q.d;
  const int bit[4] = {kA, kC1, kB, kC2};
  std::vector<int> region(p.n);
  for (int s = 0; s < p.n; ++s) region[s] = bit[p.region_of(s)];

  const char* order[4] = {"A_L", "A_R", "B_L", "B_R"};
  std::vector<std::vector<Gate2>> groups(4);
  for (std::size_t l = 0; l < q.layers.size(); ++l) {
    for (std::size_t i = 0; i < q.layers[l].size(); ++i) {
      const Gate2& g = q.layers[l][i];
      int mask = 0;
      for (int s : forward_cone(q, static_cast<int>(l), static_cast<int>(i))) mask |= region[s];
      if (mask == kA) {
        net.bulk_a.push_back(g);
      } else if (mask == kB) {
        net.bulk_b.push_back(g);
      } else if ((mask & (kA | kB)) == 0) {
        ++net.cancelled;
      } else if (const char* label = group_label(mask)) {
        groups[std::find_if(order, order + 4, [&](const char* o) { return std::string(o) == label; }) - order]
            .push_back(g);
      } else {
        throw PartitionTooSmall("gate on sites (" + std::to_string(g.a) + ", " + std::to_string(g.b) + ") in layer " +
                                std::to_string(l) + " reaches three regions");
      }
    }
  }

  const std::vector<int> ab = p.ab();
  const std::vector<int> cc = p.c();
  std::vector<char> covered(p.n, 0);
  for (int k = 0; k < 4; ++k) {
    if (groups[k].empty()) continue;
    BoundaryChannel ch;
    ch.label = order[k];
    ch.gates = groups[k];
    std::vector<char> touched(p.n, 0);
    for (const auto& g : ch.gates) touched[g.a] = touched[g.b] = 1;
    for (int s : ab) {
      if (touched[s]) ch.kept.push_back(s);
    }
    for (int s : cc) {
      if (touched[s]) ch.traced.push_back(s);
    }
    for (int s : ch.support()) {
      if (covered[s]) throw PartitionTooSmall("boundary channels overlap at site " + std::to_string(s));
      covered[s] = 1;
    }
    const Eigen::MatrixXcd g = gate_product(ch.support(), ch.gates, q.d);
    const auto traced_dim = static_cast<Eigen::Index>(kernels::ipow(q.d, static_cast<int>(ch.traced.size())));
    const auto kept_dim = g.rows() / traced_dim;
    for (Eigen::Index j = 0; j < traced_dim; ++j) {
      Eigen::MatrixXcd k(kept_dim, g.cols());
      for (Eigen::Index r = 0; r < kept_dim; ++r) k.row(r) = g.row(r * traced_dim + j);
      ch.kraus.push_back(std::move(k));
    }
    net.channels.push_back(std::move(ch));
  }

  net.u_a = gate_product(p.a, net.bulk_a, q.d).adjoint();
  net.u_b = gate_product(p.b, net.bulk_b, q.d).adjoint();
  for (int s : p.a) {
    if (!covered[s]) net.a_c.push_back(s);
  }
  for (int s : p.b) {
    if (!covered[s]) net.b_c.push_back(s);
  }
  for (int s : cc) {
    if (!covered[s]) net.c.push_back(s);
  }
  return net;
}

Eigen::MatrixXcd apply_channel(const BoundaryChannel& ch, const Eigen::MatrixXcd& x, int d) {
  const auto kept_dim = static_cast<Eigen::Index>(kernels::ipow(d, static_cast<int>(ch.kept.size())));
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(kept_dim, kept_dim);
  for (const auto& k : ch.kraus) out += k * x * k.adjoint();
  return out;
}

double cptp_error(const BoundaryChannel& ch) {
  if (ch.kraus.empty()) return 0.0;
  const auto dim = ch.kraus.front().cols();
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& k : ch.kraus) s += k.adjoint() * k;
  return (s - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd sigma_direct(const ReducedNetwork& net, const DenseState& psi, bool parallel) {
  const Partition& p = net.partition;
  if (psi.n_sites != p.n || psi.d != net.d) throw GeometryMismatch("state does not match the reduced network");
  std::vector<int> rows = p.ab();
  for (const auto& ch : net.channels) rows.insert(rows.end(), ch.traced.begin(), ch.traced.end());
  if (kernels::ipow(psi.d, static_cast<int>(rows.size())) > kDensityCap) {
    throw SizeCap("channel inputs span " + std::to_string(rows.size()) + " sites");
  }
  Eigen::MatrixXcd phi = parallel ? kernels::parallel::gather(psi.amplitudes, psi.n_sites, psi.d, rows)
                                  : kernels::serial::gather(psi.amplitudes, psi.n_sites, psi.d, rows);
  for (const auto& ch : net.channels) {
    std::vector<int> slots, kept;
    for (int s : ch.support()) slots.push_back(position(rows, s));
    for (int s : ch.kept) kept.push_back(position(rows, s));
    if (!std::is_sorted(slots.begin(), slots.end())) throw GeometryMismatch("channel support out of row order");
    const int n = static_cast<int>(rows.size());
    phi = parallel ? kernels::parallel::apply_kraus(phi, n, psi.d, slots, kept, ch.kraus)
                   : kernels::serial::apply_kraus(phi, n, psi.d, slots, kept, ch.kraus);
    for (int s : ch.traced) rows.erase(rows.begin() + position(rows, s));
  }
  return phi * phi.adjoint();
}

Eigen::MatrixXcd sigma_reference(const ReducedNetwork& net, const BrickworkCircuit& q, const DenseState& psi) {
  const DenseState out = apply_brickwork(psi, q);
  const std::vector<int> ab = net.partition.ab();
  const Eigen::MatrixXcd rho = reduced_density(out, ab);
  const Eigen::MatrixXcd u = kron(net.u_a, net.u_b);
  return u * rho * u.adjoint();
}

}  // namespace lrn::dense
