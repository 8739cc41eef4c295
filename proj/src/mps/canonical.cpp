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

#include "lrn/mps/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "lrn/errors.hpp"

namespace lrn::mps {

namespace {

using Eigen::MatrixXcd;

constexpr double kSupportTol = 1e-8;
constexpr double kDominantTol = 1e-9;

MatrixXcd hermitize(const MatrixXcd& m) { return 0.5 * (m + m.adjoint()); }

MatrixXcd apply_channel(const MpsTensor& a, const MatrixXcd& x, bool dual) {
  MatrixXcd y = MatrixXcd::Zero(x.rows(), x.cols());
  for (const auto& m : a.matrices()) y += dual ? MatrixXcd(m.adjoint() * x * m) : MatrixXcd(m * x * m.adjoint());
  return y;
}

// Power iteration X <- E(X) / tr E(X) from I/chi. Returns false for a channel
// that annihilates the identity.
bool power_fixed_point(const MpsTensor& a, bool dual, int max_iter, MatrixXcd& out) {
  const int chi = a.bond_dim();
  MatrixXcd x = MatrixXcd::Identity(chi, chi) / static_cast<double>(chi);
  double last = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    MatrixXcd y = hermitize(apply_channel(a, x, dual));
    const double tr = y.trace().real();
    if (!(tr > 1e-300)) return false;
    y /= tr;
    last = (y - x).norm();
    x = std::move(y);
    if (last < 1e-12) {
      out = std::move(x);
      return true;
    }
  }
  std::ostringstream msg;
  msg << (dual ? "dual" : "primal") << " fixed point did not converge in " << max_iter
      << " iterations (last step " << last << ")";
  throw ConvergenceFailure(msg.str());
}

double min_eig_ratio(const MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
  const auto& ev = es.eigenvalues();
  const double mx = ev.maxCoeff();
  return mx > 0.0 ? ev.minCoeff() / mx : 0.0;
}

// Splits the bond space into the support of a PSD matrix and its kernel.
bool split_support(const MatrixXcd& h, MatrixXcd& support, MatrixXcd& kernel) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(hermitize(h));
  const auto& ev = es.eigenvalues();
  const double mx = ev.cwiseAbs().maxCoeff();
  if (!(mx > 0.0)) return false;
  std::vector<int> sup, ker;
  for (int k = 0; k < ev.size(); ++k) (ev(k) > kSupportTol * mx ? sup : ker).push_back(k);
  if (sup.empty() || ker.empty()) return false;
  support.resize(h.rows(), static_cast<Eigen::Index>(sup.size()));
  kernel.resize(h.rows(), static_cast<Eigen::Index>(ker.size()));
  for (std::size_t k = 0; k < sup.size(); ++k) support.col(k) = es.eigenvectors().col(sup[k]);
  for (std::size_t k = 0; k < ker.size(); ++k) kernel.col(k) = es.eigenvectors().col(ker[k]);
  return true;
}

enum class LeafKind { kNormal, kPeriodic, kNilpotent };

struct Leaf {
  LeafKind kind;
  MatrixXcd basis;
  int period = 1;
};

double lower_mass(const MpsTensor& t, const MatrixXcd& s, const MatrixXcd& k) {
  double m = 0.0;
  for (const auto& a : t.matrices()) m += (k.adjoint() * a * s).squaredNorm();
  return std::sqrt(m);
}

void decompose(const MpsTensor& full, const MatrixXcd& basis, const DecomposeOptions& opts,
               std::vector<Leaf>& out);

void split_and_recurse(const MpsTensor& full, const MatrixXcd& basis, const MpsTensor& t,
                       const MatrixXcd& s, const MatrixXcd& k, const DecomposeOptions& opts,
                       std::vector<Leaf>& out, const char* what) {
  const double mass = lower_mass(t, s, k);
  if (mass >= opts.tau_block * std::max(1.0, t.norm())) {
    std::ostringstream msg;
    msg << "support of the " << what << " is not invariant (leakage " << mass << ", tau_block "
        << opts.tau_block << ")";
    throw DecompositionFailure(msg.str());
  }
  decompose(full, basis * s, opts, out);
  decompose(full, basis * k, opts, out);
}

void decompose(const MpsTensor& full, const MatrixXcd& basis, const DecomposeOptions& opts,
               std::vector<Leaf>& out) {
  const MpsTensor t = compress(full, basis);
  const int m = t.bond_dim();
  const MatrixXcd e = transfer_matrix(t).matrix;
  SpectralData s;
  try {
    s = spectral(e, opts.tau_spec);
  } catch (const NonDiagonalizablePeripheral& err) {
    throw DecompositionFailure(std::string("peripheral spectrum is defective: ") + err.what());
  }
  const double rho = s.spectral_radius;
  if (rho < 1e-12) {
    out.push_back({LeafKind::kNilpotent, basis, 1});
    return;
  }

  const MatrixXcd proj = s.peripheral_projector(cplx(rho, 0.0));
  const Eigen::VectorXcd id = vec(MatrixXcd::Identity(m, m));
  const MatrixXcd x = hermitize(unvec(proj * id, m));
  const MatrixXcd y = hermitize(unvec(proj.adjoint() * id, m));

  MatrixXcd sup, ker;
  if (split_support(x, sup, ker)) {
    split_and_recurse(full, basis, t, sup, ker, opts, out, "right fixed point");
    return;
  }
  if (split_support(y, sup, ker)) {
    // The kernel of the dual fixed point is the invariant subspace.
    split_and_recurse(full, basis, t, ker, sup, opts, out, "left fixed point");
    return;
  }

  std::vector<int> fixed;
  for (std::size_t j = 0; j < s.peripheral.size(); ++j) {
    if (std::abs(s.peripheral[j] - rho) <= 1e-6 * std::max(1.0, rho)) fixed.push_back(static_cast<int>(j));
  }

  if (fixed.size() > 1) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> xs(x);
    const MatrixXcd x_half = xs.operatorSqrt();
    const MatrixXcd x_inv_half = xs.operatorInverseSqrt();
    double best = -1.0;
    MatrixXcd best_g;
    for (int j : fixed) {
      const MatrixXcd mj = unvec(s.right_vecs[j], m);
      for (const MatrixXcd& h : {MatrixXcd(0.5 * (mj + mj.adjoint())),
                                 MatrixXcd((mj - mj.adjoint()) / cplx(0.0, 2.0))}) {
        MatrixXcd g = hermitize(x_inv_half * h * x_inv_half);
        const double nrm = g.norm();
        if (nrm == 0.0) continue;
        g /= nrm;
        Eigen::SelfAdjointEigenSolver<MatrixXcd> gs(g, Eigen::EigenvaluesOnly);
        const double spread = gs.eigenvalues().maxCoeff() - gs.eigenvalues().minCoeff();
        if (spread > best) {
          best = spread;
          best_g = g;
        }
      }
    }
    if (best < 1e-6) {
      throw DecompositionFailure("fixed-point space is degenerate but has no Hermitian element independent of the positive fixed point");
    }
    Eigen::SelfAdjointEigenSolver<MatrixXcd> gs(best_g, Eigen::EigenvaluesOnly);
    const double c_min = gs.eigenvalues().minCoeff();
    const MatrixXcd z =
        hermitize(x_half * (best_g - c_min * MatrixXcd::Identity(m, m)) * x_half);
    if (!split_support(z, sup, ker)) {
      throw DecompositionFailure("positive fixed point with a kernel could not be separated");
    }
    split_and_recurse(full, basis, t, sup, ker, opts, out, "extremal fixed point");
    return;
  }

  const int p = static_cast<int>(s.peripheral.size());
  if (p > 1) {
    for (const auto& l : s.peripheral) {
      if (std::abs(std::pow(l / rho, p) - 1.0) > 1e-6) {
        std::ostringstream msg;
        msg << "irreducible block has peripheral eigenvalue " << l / rho << " that is not a " << p
            << "-th root of unity";
        throw DecompositionFailure(msg.str());
      }
    }
    out.push_back({LeafKind::kPeriodic, basis, p});
    return;
  }
  out.push_back({LeafKind::kNormal, basis, 1});
}

int leading_row(const MatrixXcd& basis) {
  for (int r = 0; r < basis.rows(); ++r) {
    if (basis.row(r).norm() > 1e-6) return r;
  }
  return static_cast<int>(basis.rows());
}

}  // namespace

const char* to_string(BlockRelation r) {
  switch (r) {
    case BlockRelation::kSelf: return "self";
    case BlockRelation::kGaugeEquivalent: return "gauge_equivalent";
    case BlockRelation::kLocallyOrthogonal: return "locally_orthogonal";
    case BlockRelation::kAsymptoticallyOrthogonal: return "asymptotically_orthogonal";
  }
  return "unknown";
}

NormalityWitness is_normal(const MpsTensor& a, double tau, int max_iter) {
  NormalityWitness w;
  const auto t = transfer_matrix(a);
  try {
    const auto s = spectral(t);
    w.peripheral_count = static_cast<int>(s.peripheral.size());
  } catch (const NonDiagonalizablePeripheral&) {
    w.peripheral_count = -1;
    return w;
  }
  if (w.peripheral_count != 1) return w;
  if (!power_fixed_point(a, false, max_iter, w.right_fixed_point)) return w;
  if (!power_fixed_point(a, true, max_iter, w.left_fixed_point)) return w;
  w.right_min_ratio = min_eig_ratio(w.right_fixed_point);
  w.left_min_ratio = min_eig_ratio(w.left_fixed_point);
  w.normal = w.right_min_ratio > tau && w.left_min_ratio > tau;
  return w;
}

bool local_orthogonal(const MpsTensor& a, const MpsTensor& b, double tau) {
  return mixed_transfer(a, b).norm() < tau;
}

std::optional<GaugeRelation> gauge_equivalent(const MpsTensor& a, const MpsTensor& b, double tau) {
  if (a.physical_dim() != b.physical_dim()) {
    throw DimensionMismatch("physical dimensions " + std::to_string(a.physical_dim()) + " and " +
                            std::to_string(b.physical_dim()));
  }
  const auto wa = is_normal(a);
  if (!wa) throw NotNormalInput("first tensor is not normal");
  const auto wb = is_normal(b);
  if (!wb) throw NotNormalInput("second tensor is not normal");
  if (a.bond_dim() != b.bond_dim()) return std::nullopt;

  const MpsTensor an = normalized(a);
  const MpsTensor bn = normalized(b);
  const int chi = a.bond_dim();
  Eigen::ComplexEigenSolver<MatrixXcd> es(mixed_transfer(an, bn));
  Eigen::Index top = 0;
  es.eigenvalues().cwiseAbs().maxCoeff(&top);
  const cplx lambda = es.eigenvalues()(top);
  if (std::abs(lambda) < 1.0 - 1e-6) return std::nullopt;

  MatrixXcd x = unvec(es.eigenvectors().col(top), chi) * wb.right_fixed_point.inverse();
  Eigen::FullPivLU<MatrixXcd> lu(x);
  if (!lu.isInvertible()) return std::nullopt;
  const MatrixXcd x_inv = lu.inverse();
  const double phase = std::arg(lambda);
  const cplx u = std::polar(1.0, phase);
  double err = 0.0;
  for (int i = 0; i < a.physical_dim(); ++i) err += (an[i] - u * x * bn[i] * x_inv).squaredNorm();
  if (std::sqrt(err) > tau * std::max(1.0, an.norm())) return std::nullopt;

  // Fix the free scale: Frobenius norm sqrt(chi), largest entry real positive.
  Eigen::Index r = 0, c = 0;
  x.cwiseAbs().maxCoeff(&r, &c);
  x *= std::sqrt(static_cast<double>(chi)) / x.norm() * std::polar(1.0, -std::arg(x(r, c)));
  return GaugeRelation{phase, x};
}

CanonicalForm canonical_decompose(const MpsTensor& a, double tau_block) {
  DecomposeOptions opts;
  opts.tau_block = tau_block;
  return canonical_decompose(a, opts);
}

CanonicalForm canonical_decompose(const MpsTensor& a, const DecomposeOptions& opts) {
  MpsTensor a0 = a;
  try {
    a0 = normalized(a);
  } catch (const InvalidTensor& err) {
    throw DecompositionFailure(err.what());
  }
  const int chi = a0.bond_dim();

  int q = 1;
  std::vector<Leaf> leaves;
  MpsTensor blocked = a0;
  for (;;) {
    blocked = block_tensor(a0, q, opts.physical_dim_cap);
    leaves.clear();
    decompose(blocked, MatrixXcd::Identity(chi, chi), opts, leaves);
    int period = 1;
    for (const auto& l : leaves) {
      if (l.kind == LeafKind::kPeriodic) period = std::lcm(period, l.period);
    }
    if (period == 1) break;
    if (q * period > opts.q_max) {
      std::ostringstream msg;
      msg << "periodic peripheral spectrum needs blocking " << q * period << " > q_max " << opts.q_max;
      throw DecompositionFailure(msg.str());
    }
    q *= period;
  }

  CanonicalForm cf;
  cf.blocking = q;
  cf.gauge = MatrixXcd(chi, chi);
  std::vector<int> offsets;
  int off = 0;
  for (const auto& l : leaves) {
    offsets.push_back(off);
    cf.gauge.middleCols(off, l.basis.cols()) = l.basis;
    off += static_cast<int>(l.basis.cols());
  }
  offsets.push_back(off);
  double resid = 0.0;
  for (const auto& m : blocked.matrices()) {
    const MatrixXcd g = cf.gauge.adjoint() * m * cf.gauge;
    for (std::size_t r = 0; r < leaves.size(); ++r) {
      for (std::size_t c = 0; c < r; ++c) {
        resid += g.block(offsets[r], offsets[c], offsets[r + 1] - offsets[r], offsets[c + 1] - offsets[c])
                     .squaredNorm();
      }
    }
  }
  cf.residual = std::sqrt(resid);
  if (cf.residual >= opts.tau_block * std::max(1.0, blocked.norm())) {
    std::ostringstream msg;
    msg << "residual lower-block mass " << cf.residual << " exceeds tau_block " << opts.tau_block;
    throw DecompositionFailure(msg.str());
  }

  for (const auto& l : leaves) {
    if (l.kind != LeafKind::kNormal) continue;
    const MpsTensor t = compress(blocked, l.basis);
    const double rho = transfer_spectral_radius(t);
    double theta = 0.0;
    for (const auto& m : t.matrices()) {
      const cplx tr = m.trace();
      if (std::abs(tr) > 1e-12) {
        theta = std::arg(tr);
        break;
      }
    }
    const cplx mu = std::polar(std::sqrt(rho), theta);
    CanonicalBlock b{mu, t.scaled(1.0 / mu), l.basis, leading_row(l.basis), rho >= 1.0 - kDominantTol};
    cf.blocks.push_back(std::move(b));
  }
  std::stable_sort(cf.blocks.begin(), cf.blocks.end(),
                   [](const CanonicalBlock& x, const CanonicalBlock& y) { return x.leading_index < y.leading_index; });

  const int nb = static_cast<int>(cf.blocks.size());
  cf.class_of.assign(nb, -1);
  cf.relative_phase.assign(nb, 0.0);
  for (int j = 0; j < nb; ++j) {
    if (!cf.blocks[j].dominant) continue;
    for (std::size_t k = 0; k < cf.representatives.size(); ++k) {
      const int r = cf.representatives[k];
      if (auto g = gauge_equivalent(cf.blocks[j].tensor, cf.blocks[r].tensor)) {
        cf.class_of[j] = static_cast<int>(k);
        cf.relative_phase[j] = g->phase;
        break;
      }
    }
    if (cf.class_of[j] < 0) {
      cf.class_of[j] = static_cast<int>(cf.representatives.size());
      cf.representatives.push_back(j);
    }
  }

  cf.relations.assign(nb, std::vector<BlockRelation>(nb, BlockRelation::kAsymptoticallyOrthogonal));
  for (int j = 0; j < nb; ++j) {
    for (int k = 0; k < nb; ++k) {
      auto& rel = cf.relations[j][k];
      if (j == k) {
        rel = BlockRelation::kSelf;
      } else if (cf.class_of[j] >= 0 && cf.class_of[j] == cf.class_of[k]) {
        rel = BlockRelation::kGaugeEquivalent;
      } else if (local_orthogonal(cf.blocks[j].tensor, cf.blocks[k].tensor)) {
        rel = BlockRelation::kLocallyOrthogonal;
      } else if (cf.blocks[j].dominant && cf.blocks[k].dominant) {
        Eigen::ComplexEigenSolver<MatrixXcd> es(mixed_transfer(cf.blocks[j].tensor, cf.blocks[k].tensor), false);
        if (es.eigenvalues().cwiseAbs().maxCoeff() >= 1.0 - 1e-6) {
          throw DecompositionFailure("dominant blocks " + std::to_string(j) + " and " + std::to_string(k) +
                                     " overlap but are not gauge-equivalent");
        }
      }
    }
  }

  cf.weights.blocks.resize(cf.representatives.size());
  for (int j = 0; j < nb; ++j) {
    if (cf.class_of[j] < 0) continue;
    cf.weights.blocks[cf.class_of[j]].push_back(
        {cplx(1.0, 0.0), wrap_phase(std::arg(cf.blocks[j].mu) + cf.relative_phase[j])});
  }
  return cf;
}

}  // namespace lrn::mps
