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
#include <complex>
#include <cstdint>
#include <vector>

#include <omp.h>

#include "lrn/dense/kernels.hpp"
#include "lrn/errors.hpp"

namespace lrn::dense::kernels {

using cplx = std::complex<double>;

namespace parallel {

void apply_operator(Eigen::VectorXcd& v, int n, int d, std::span<const int> slots, const Eigen::MatrixXcd& u) {
  const auto off = slot_offsets(n, d, slots);
  const auto dim = static_cast<std::size_t>(off.target.size());
  if (static_cast<std::size_t>(u.rows()) != dim || static_cast<std::size_t>(u.cols()) != dim) {
    throw GeometryMismatch("operator does not match the slot count");
  }
  const auto count = static_cast<std::int64_t>(off.rest.size());
  const std::size_t* target = off.target.data();
  const cplx* um = u.data();  // column major
  cplx* vp = v.data();
#pragma omp parallel
  {
    std::vector<cplx> x(dim);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      cplx* base = vp + off.rest[i];
      for (std::size_t g = 0; g < dim; ++g) x[g] = base[target[g]];
      for (std::size_t g = 0; g < dim; ++g) {
        cplx acc = 0.0;
        for (std::size_t h = 0; h < dim; ++h) acc += um[g + h * dim] * x[h];
        base[target[g]] = acc;
      }
    }
  }
}

namespace {

// Amplitudes out[begin, end) by walking the index digits and keeping the
// prefix products A^{s_0} ... A^{s_k}. A prefix whose product is exactly zero
// zeroes the whole subtree below it.
void materialize_range(std::span<const Eigen::MatrixXcd> a, int n, std::int64_t begin, std::int64_t end,
                       Eigen::VectorXcd& out) {
  const int d = static_cast<int>(a.size());
  std::vector<std::int64_t> span(n);
  for (int k = 0; k < n; ++k) span[k] = static_cast<std::int64_t>(ipow(d, n - 1 - k));
  std::vector<int> digit(n);
  std::int64_t rem = begin;
  for (int k = 0; k < n; ++k) {
    digit[k] = static_cast<int>(rem / span[k]);
    rem %= span[k];
  }
  std::vector<Eigen::MatrixXcd> prefix(n, Eigen::MatrixXcd(a.front().rows(), a.front().cols()));
  std::int64_t idx = begin;
  int from = 0;
  while (idx < end) {
    int level = n - 1;  // position to advance
    bool zero = false;
    for (int k = from; k < n; ++k) {
      if (k == 0) {
        prefix[0] = a[digit[0]];
      } else {
        prefix[k].noalias() = prefix[k - 1] * a[digit[k]];
      }
      if (prefix[k].cwiseAbs2().maxCoeff() == 0.0) {
        zero = true;
        level = k;
        break;
      }
    }
    const std::int64_t next = std::min(end, (idx / span[level] + 1) * span[level]);
    if (zero) {
      out.segment(idx, next - idx).setZero();
    } else {
      out(idx) = prefix[n - 1].trace();
    }
    idx = next;
    for (int k = level + 1; k < n; ++k) digit[k] = 0;
    int j = level;
    while (j >= 0 && ++digit[j] == d) digit[j--] = 0;
    from = std::max(j, 0);
  }
}

}  // namespace

Eigen::VectorXcd materialize(std::span<const Eigen::MatrixXcd> a, int n) {
  const int d = static_cast<int>(a.size());
  const auto total = static_cast<std::int64_t>(ipow(d, n));
  Eigen::VectorXcd out(total);
  const std::int64_t chunk = std::max<std::int64_t>(1, total / 256);
  const std::int64_t chunks = (total + chunk - 1) / chunk;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < chunks; ++c) {
    materialize_range(a, n, c * chunk, std::min(total, (c + 1) * chunk), out);
  }
  return out;
}

Eigen::MatrixXcd gather(const Eigen::VectorXcd& v, int n, int d, std::span<const int> region) {
  const auto off = slot_offsets(n, d, region);
  Eigen::MatrixXcd psi(off.target.size(), off.rest.size());
  const auto cols = static_cast<std::int64_t>(off.rest.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < off.target.size(); ++r) psi(r, c) = v(off.target[r] + off.rest[c]);
  }
  return psi;
}

Eigen::MatrixXcd reduced_density(const Eigen::VectorXcd& v, int n, int d, std::span<const int> region) {
  const Eigen::MatrixXcd psi = gather(v, n, d, region);
  const Eigen::Index rows = psi.rows(), cols = psi.cols();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(rows, rows);
#pragma omp parallel
  {
    const Eigen::Index threads = omp_get_num_threads(), t = omp_get_thread_num();
    const Eigen::Index chunk = (cols + threads - 1) / threads;
    const Eigen::Index start = std::min(cols, t * chunk), width = std::min(chunk, cols - start);
    Eigen::MatrixXcd local = Eigen::MatrixXcd::Zero(rows, rows);
    if (width > 0) local.selfadjointView<Eigen::Lower>().rankUpdate(psi.middleCols(start, width));
#pragma omp critical
    rho += local;
  }
  return rho.selfadjointView<Eigen::Lower>();
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
  const auto count = static_cast<std::int64_t>(p.in.rest.size());
#pragma omp parallel
  {
    Eigen::VectorXcd x(in_dim), y(out_dim);
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < count; ++r) {
      for (Eigen::Index c = 0; c < phi.cols(); ++c) {
        for (Eigen::Index g = 0; g < in_dim; ++g) x(g) = phi(p.in.rest[r] + p.in.target[g], c);
        for (Eigen::Index j = 0; j < nk; ++j) {
          y.noalias() = kraus[j] * x;
          for (Eigen::Index a = 0; a < out_dim; ++a) out(p.out.rest[r] + p.out.target[a], c * nk + j) = y(a);
        }
      }
    }
  }
  return out;
}

}  // namespace parallel

}  // namespace lrn::dense::kernels
