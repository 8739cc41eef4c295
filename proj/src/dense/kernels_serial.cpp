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

#include <algorithm>
#include <string>

#include "lrn/dense/kernels.hpp"
#include "lrn/errors.hpp"

namespace lrn::dense::kernels {

std::size_t ipow(std::size_t base, int e) {
  std::size_t r = 1;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

namespace {

// Offsets of all configurations of `sites`, the first site most significant.
std::vector<std::size_t> configuration_offsets(int d, std::span<const int> sites,
                                               const std::vector<std::size_t>& stride) {
  std::vector<std::size_t> out = {0};
  out.reserve(ipow(d, static_cast<int>(sites.size())));
  for (int s : sites) {
    const std::size_t prev = out.size();
    out.resize(prev * d);
    for (std::size_t i = prev; i-- > 0;) {
      for (int v = d - 1; v >= 0; --v) out[i * d + v] = out[i] + v * stride[s];
    }
  }
  return out;
}

}  // namespace

SlotOffsets slot_offsets(int n, int d, std::span<const int> slots) {
  std::vector<char> used(n, 0);
  for (int s : slots) {
    if (s < 0 || s >= n || used[s]) throw GeometryMismatch("slot " + std::to_string(s) + " invalid or repeated");
    used[s] = 1;
  }
  std::vector<std::size_t> stride(n);
  for (int k = 0; k < n; ++k) stride[k] = ipow(d, n - 1 - k);
  std::vector<int> rest;
  for (int s = 0; s < n; ++s) {
    if (!used[s]) rest.push_back(s);
  }
  return {configuration_offsets(d, slots, stride), configuration_offsets(d, rest, stride)};
}

KrausPlan plan_kraus(int n, int d, std::span<const int> slots, std::span<const int> kept) {
  KrausPlan p;
  p.in = slot_offsets(n, d, slots);
  std::vector<char> dropped(n, 0);
  for (int s : slots) dropped[s] = 1;
  for (int s : kept) {
    if (std::find(slots.begin(), slots.end(), s) == slots.end()) {
      throw GeometryMismatch("kept slot " + std::to_string(s) + " is not acted on");
    }
    dropped[s] = 0;
  }
  std::vector<int> pos(n, -1);
  int n_out = 0;
  for (int s = 0; s < n; ++s) {
    if (!dropped[s]) pos[s] = n_out++;
  }
  std::vector<int> kept_out;
  for (int s : kept) kept_out.push_back(pos[s]);
  p.out = slot_offsets(n_out, d, kept_out);
  p.out_rows = ipow(d, n_out);
  return p;
}

namespace serial {

void apply_operator(Eigen::VectorXcd& v, int n, int d, std::span<const int> slots, const Eigen::MatrixXcd& u) {
  const auto off = slot_offsets(n, d, slots);
  const auto dim = static_cast<Eigen::Index>(off.target.size());
  if (u.rows() != dim || u.cols() != dim) throw GeometryMismatch("operator does not match the slot count");
  Eigen::VectorXcd x(dim), y(dim);
  for (std::size_t r : off.rest) {
    for (Eigen::Index g = 0; g < dim; ++g) x(g) = v(r + off.target[g]);
    y.noalias() = u * x;
    for (Eigen::Index g = 0; g < dim; ++g) v(r + off.target[g]) = y(g);
  }
}

Eigen::VectorXcd materialize(std::span<const Eigen::MatrixXcd> a, int n) {
  const int d = static_cast<int>(a.size());
  const std::size_t total = ipow(d, n);
  Eigen::VectorXcd out(static_cast<Eigen::Index>(total));
  const auto chi = a.front().rows();
  Eigen::MatrixXcd prod(chi, chi);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx, div = total / d;
    prod = a[rem / div];
    rem %= div;
    for (int k = 1; k < n; ++k) {
      div /= d;
      prod = prod * a[rem / div];
      rem %= div;
    }
    out(static_cast<Eigen::Index>(idx)) = prod.trace();
  }
  return out;
}

Eigen::MatrixXcd gather(const Eigen::VectorXcd& v, int n, int d, std::span<const int> region) {
  const auto off = slot_offsets(n, d, region);
  Eigen::MatrixXcd psi(off.target.size(), off.rest.size());
  for (std::size_t c = 0; c < off.rest.size(); ++c) {
    for (std::size_t r = 0; r < off.target.size(); ++r) psi(r, c) = v(off.target[r] + off.rest[c]);
  }
  return psi;
}

Eigen::MatrixXcd reduced_density(const Eigen::VectorXcd& v, int n, int d, std::span<const int> region) {
  const Eigen::MatrixXcd psi = gather(v, n, d, region);
  return psi * psi.adjoint();
}

Eigen::MatrixXcd apply_kraus(const Eigen::MatrixXcd& phi, int n, int d, std::span<const int> slots,
                             std::span<const int> kept, std::span<const Eigen::MatrixXcd> kraus) {
  const auto p = plan_kraus(n, d, slots, kept);
  const auto in_dim = static_cast<Eigen::Index>(p.in.target.size());
  const auto out_dim = static_cast<Eigen::Index>(p.out.target.size());
  const auto nk = static_cast<Eigen::Index>(kraus.size());
  for (const auto& k : kraus) {
    if (k.rows() != out_dim || k.cols() != in_dim) throw GeometryMismatch("Kraus operator has the wrong shape");
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(p.out_rows, phi.cols() * nk);
  Eigen::VectorXcd x(in_dim), y(out_dim);
  for (std::size_t r = 0; r < p.in.rest.size(); ++r) {
    for (Eigen::Index c = 0; c < phi.cols(); ++c) {
      for (Eigen::Index g = 0; g < in_dim; ++g) x(g) = phi(p.in.rest[r] + p.in.target[g], c);
      for (Eigen::Index j = 0; j < nk; ++j) {
        y.noalias() = kraus[j] * x;
        for (Eigen::Index a = 0; a < out_dim; ++a) out(p.out.rest[r] + p.out.target[a], c * nk + j) = y(a);
      }
    }
  }
  return out;
}

}  // namespace serial

}  // namespace lrn::dense::kernels
