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
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <doctest.h>

#include "lrn/criteria/theorems.hpp"
#include "lrn/dense/causal_cone.hpp"
#include "lrn/dense/circuit.hpp"
#include "lrn/dense/density.hpp"
#include "lrn/dense/experiments.hpp"
#include "lrn/dense/fixed_point.hpp"
#include "lrn/dense/kernels.hpp"
#include "lrn/dense/partition.hpp"
#include "lrn/dense/stabilizer_bridge.hpp"
#include "lrn/dense/state.hpp"
#include "lrn/errors.hpp"
#include "lrn/mps/rg.hpp"
#include "test_util.hpp"

using namespace lrn;
using namespace lrn::dense;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

DenseState ghz_family(int n, double p) {
  VectorXcd v = VectorXcd::Zero(Eigen::Index{1} << n);
  v(0) = std::sqrt(p);
  v(v.size() - 1) = std::sqrt(1.0 - p);
  return make_state(n, 2, v);
}

DenseState random_state(int n, int d, std::mt19937_64& rng) {
  return make_state(n, d, lrn::testing::random_vector(static_cast<Eigen::Index>(kernels::ipow(d, n)), rng));
}

}  // namespace

TEST_SUITE("state") {
  TEST_CASE("materialize the reference tensors") {
    const auto prod = materialize_mps(product_tensor(), 5);
    CHECK(std::abs(prod.amplitudes(0) - 1.0) < 1e-14);

    const auto ghz = materialize_mps(ghz_tensor(), 4);
    CHECK(std::abs(ghz.amplitudes(0) - std::sqrt(0.5)) < 1e-14);
    CHECK(std::abs(ghz.amplitudes(15) - std::sqrt(0.5)) < 1e-14);
    CHECK(std::abs(ghz.amplitudes.norm() - 1.0) < 1e-14);

    const auto chi3 = materialize_mps(chi3_tensor(std::numbers::pi / 3.0), 3);
    CHECK(std::abs(chi3.amplitudes(0) - 1.0 / std::sqrt(5.0)) < 1e-12);
    CHECK(std::abs(chi3.amplitudes(7) + 2.0 / std::sqrt(5.0)) < 1e-12);
    CHECK(chi3.amplitudes.segment(1, 6).norm() < 1e-12);
  }

  TEST_CASE("caps and zero states") {
    CHECK_THROWS_AS(materialize_mps(ghz_tensor(), 25), SizeCap);
    CHECK_THROWS_AS(materialize_mps(antiferromagnet_tensor(), 3), ZeroState);
    CHECK_THROWS_AS(make_state(2, 2, VectorXcd::Zero(3)), GeometryMismatch);
  }

  TEST_CASE("trace distance between pure states") {
    const auto a = basis_state(2, 2, 0), b = basis_state(2, 2, 3);
    CHECK(trace_distance_pure(a, a) == doctest::Approx(0.0));
    CHECK(trace_distance_pure(a, b) == doctest::Approx(1.0));
    CHECK(trace_distance_pure(a, ghz_family(2, 0.5)) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  }

  TEST_CASE("qubit reinterpretation keeps amplitudes") {
    std::mt19937_64 rng(3);
    const auto s = random_state(3, 4, rng);
    const auto q = as_qubits(s);
    CHECK(q.n_sites == 6);
    CHECK(q.d == 2);
    CHECK((q.amplitudes - s.amplitudes).norm() == 0.0);
    CHECK(site_qubits(2, 4) == std::vector<int>{4, 5});
  }
}

TEST_SUITE("density") {
  TEST_CASE("reduced densities of small states") {
    const int r12[2] = {1, 2};
    const MatrixXcd rho = reduced_density(materialize_mps(ghz_tensor(), 4), r12);
    MatrixXcd expected = MatrixXcd::Zero(4, 4);
    expected(0, 0) = expected(3, 3) = 0.5;
    CHECK((rho - expected).norm() < 1e-14);

    const int r0[1] = {0};
    const MatrixXcd bell = reduced_density(ghz_family(2, 0.5), r0);
    CHECK((bell - 0.5 * MatrixXcd::Identity(2, 2)).norm() < 1e-14);
    CHECK(von_neumann_entropy(reduced_density(basis_state(3, 2, 5), r12)) == doctest::Approx(0.0));
  }

  TEST_CASE("mutual information of the GHZ family") {
    const int a[2] = {1, 2}, b[2] = {5, 6};
    CHECK(mutual_information(ghz_family(8, 0.5), a, b) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mutual_information(ghz_family(8, 0.3), a, b) == doctest::Approx(binary_entropy(0.3)).epsilon(1e-12));
    CHECK(binary_entropy(0.3) == doctest::Approx(0.8813).epsilon(1e-4));
    CHECK_THROWS_AS(mutual_information(ghz_family(8, 0.3), a, a), OverlappingRegions);
  }

  TEST_CASE("entropy rejects non-PSD input") {
    MatrixXcd m = MatrixXcd::Identity(2, 2);
    m(1, 1) = -0.5;
    CHECK_THROWS_AS(von_neumann_entropy(m), NotPSD);
  }

  TEST_CASE("Fannes bound") {
    MatrixXcd rho = MatrixXcd::Zero(2, 2), sigma = 0.5 * MatrixXcd::Identity(2, 2);
    rho(0, 0) = 1.0;
    const auto f = fannes_check(rho, sigma);
    CHECK(f.delta == doctest::Approx(0.5));
    CHECK(f.lhs == doctest::Approx(1.0));
    CHECK(f.bound == doctest::Approx(1.5));
    CHECK(f.holds);
    CHECK(fannes_check(rho, rho).delta == doctest::Approx(0.0));

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      const int dim = 1 << (1 + static_cast<int>(rng() % 3));
      const auto r = fannes_check(lrn::testing::random_density(dim, rng), lrn::testing::random_density(dim, rng));
      CHECK(r.slack >= -1e-12);
    }
    CHECK_THROWS_AS(trace_distance_mixed(rho, MatrixXcd::Identity(4, 4) / 4.0), DimensionMismatch);
  }

  TEST_CASE("trace distance contracts under partial trace") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
      const auto psi = random_state(5, 2, rng), phi = random_state(5, 2, rng);
      std::vector<int> region;
      for (int q = 0; q < 5; ++q) {
        if (rng() & 1) region.push_back(q);
      }
      if (region.empty()) region.push_back(0);
      const double mixed = trace_distance_mixed(reduced_density(psi, region), reduced_density(phi, region));
      CHECK(mixed <= trace_distance_pure(psi, phi) + 1e-12);
    }
  }

  TEST_CASE("partial transpose") {
    std::mt19937_64 rng(9);
    const MatrixXcd rho = lrn::testing::random_density(6, rng);
    const MatrixXcd pt = partial_transpose(rho, 2, 3);
    CHECK((partial_transpose(pt, 2, 3) - rho).norm() < 1e-14);
    CHECK(std::abs(pt.trace() - rho.trace()) < 1e-14);
    // Product operators transpose only the first factor.
    const MatrixXcd a = lrn::testing::random_matrix(2, 2, rng), b = lrn::testing::random_matrix(3, 3, rng);
    CHECK((partial_transpose(lrn::testing::kron(a, b), 2, 3) - lrn::testing::kron(a.transpose(), b)).norm() < 1e-12);
    CHECK_THROWS_AS(partial_transpose(rho, 4, 2), BadFactorization);
  }

  TEST_CASE("flatness agrees with proportionality") {
    CHECK(flatness_check(MatrixXcd::Identity(4, 4) / 4.0, 2, 2));
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 50; ++trial) {
      const MatrixXcd rho = lrn::testing::random_density(4, rng);
      const bool flat = flatness_check(rho, 2, 2);
      CHECK(flat == (proportionality(rho, 2, 2).residual < 1e-8));
    }
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 4 + static_cast<int>(rng() % 5);
      const auto psi = run_clifford_dense(n, random_clifford_circuit(n, 12, rng()));
      const int ab[4] = {0, 1, n - 2, n - 1};
      const MatrixXcd rho = reduced_density(psi, ab);
      CHECK(flatness_check(rho, 4, 4));
      CHECK(proportionality(rho, 4, 4).residual < 1e-8);
    }
  }
}

TEST_SUITE("kernels") {
  TEST_CASE("serial and parallel kernels agree") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const int d = 2 + static_cast<int>(rng() % 2), n = 4 + static_cast<int>(rng() % 3);
      const VectorXcd v = lrn::testing::random_vector(static_cast<Eigen::Index>(kernels::ipow(d, n)), rng);
      const std::vector<int> slots = {static_cast<int>(rng() % n), (static_cast<int>(rng() % (n - 1)) + 1) % n};
      if (slots[0] == slots[1]) continue;
      const MatrixXcd u = lrn::testing::random_matrix(d * d, d * d, rng);
      VectorXcd s = v, p = v;
      kernels::serial::apply_operator(s, n, d, slots, u);
      kernels::parallel::apply_operator(p, n, d, slots, u);
      CHECK((s - p).norm() < 1e-12);
      CHECK((kernels::serial::reduced_density(v, n, d, slots) - kernels::parallel::reduced_density(v, n, d, slots))
                .norm() < 1e-12);

      const auto a = lrn::testing::random_tensor(d, 2, rng());
      CHECK((kernels::serial::materialize(a.matrices(), n) - kernels::parallel::materialize(a.matrices(), n)).norm() <
            1e-10);

      const MatrixXcd phi = lrn::testing::random_matrix(static_cast<int>(v.size()), 2, rng);
      const std::vector<int> sorted = {std::min(slots[0], slots[1]), std::max(slots[0], slots[1])};
      const std::vector<int> kept = {sorted[0]};
      const std::vector<MatrixXcd> kraus = {lrn::testing::random_matrix(d, d * d, rng),
                                            lrn::testing::random_matrix(d, d * d, rng)};
      CHECK((kernels::serial::apply_kraus(phi, n, d, sorted, kept, kraus) -
             kernels::parallel::apply_kraus(phi, n, d, sorted, kept, kraus))
                .norm() < 1e-12);
    }
  }

  TEST_CASE("apply_operator matches a Kronecker product") {
    std::mt19937_64 rng(12);
    const MatrixXcd u = lrn::testing::random_matrix(4, 4, rng);
    const VectorXcd v = lrn::testing::random_vector(8, rng);
    VectorXcd w = v;
    const int slots[2] = {1, 2};
    kernels::serial::apply_operator(w, 3, 2, slots, u);
    CHECK((w - lrn::testing::kron(MatrixXcd::Identity(2, 2), u) * v).norm() < 1e-12);
  }
}

TEST_SUITE("circuit") {
  TEST_CASE("brickwork circuits are unitary and invertible") {
    std::mt19937_64 rng(13);
    for (int depth = 0; depth <= 3; ++depth) {
      const auto q = random_brickwork(8, depth, 100 + depth);
      CHECK(unitarity_error(q) < 1e-12);
      const auto psi = random_state(8, 2, rng);
      const auto out = apply_brickwork(psi, q);
      CHECK(std::abs(out.amplitudes.norm() - 1.0) < 1e-12);
      CHECK((apply_brickwork(out, adjoint(q)).amplitudes - psi.amplitudes).norm() < 1e-10);
      CHECK((apply_brickwork(psi, identity_brickwork(8, depth)).amplitudes - psi.amplitudes).norm() < 1e-14);
    }
    CHECK((random_brickwork(6, 2, 5).layers[1][0].u - random_brickwork(6, 2, 5).layers[1][0].u).norm() == 0.0);
    CHECK_THROWS_AS(apply_brickwork(basis_state(6, 2), random_brickwork(8, 1, 1)), GeometryMismatch);
  }

  TEST_CASE("permutation gates fix the all-zero state") {
    BrickworkCircuit q = identity_brickwork(6, 1);
    MatrixXcd cnot = MatrixXcd::Zero(4, 4);
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
    for (auto& g : q.layers[0]) g.u = cnot;
    CHECK(std::abs(apply_brickwork(basis_state(6, 2), q).amplitudes(0) - 1.0) < 1e-14);
  }

  TEST_CASE("layer pairs tile the ring") {
    CHECK(layer_pairs(6, 0) == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}, {4, 5}});
    CHECK(layer_pairs(6, 1) == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}, {5, 0}});
  }
}

TEST_SUITE("partition") {
  TEST_CASE("built partitions satisfy the size constraints") {
    for (int depth = 1; depth <= 3; ++depth) {
      for (int n = 8 * (depth + 1); n <= 8 * (depth + 1) + 5; ++n) {
        for (int offset = 0; offset < 3; ++offset) {
          const auto p = build_partition(n, depth, offset);
          CHECK(p.a.size() == static_cast<std::size_t>(2 * depth + 2));
          CHECK(p.b.size() == p.a.size());
          CHECK(p.c1.size() >= p.a.size());
          CHECK(p.c2.size() >= p.a.size());
          std::vector<int> seen(n, 0);
          for (const auto* r : {&p.a, &p.c1, &p.b, &p.c2}) {
            for (int s : *r) ++seen[s];
          }
          CHECK(std::count(seen.begin(), seen.end(), 1) == n);
          CHECK_NOTHROW(validate_partition(p, depth));
        }
      }
      CHECK_THROWS_AS(build_partition(8 * (depth + 1) - 1, depth), PartitionTooSmall);
    }
    CHECK_THROWS_AS(validate_partition(make_partition(16, 2, 6, 2, 6), 1), PartitionTooSmall);
  }
}

TEST_SUITE("causal cone") {
  TEST_CASE("depth zero leaves the reduced state unchanged") {
    std::mt19937_64 rng(14);
    const auto psi = random_state(8, 2, rng);
    const auto p = make_partition(8, 2, 2, 2, 2);
    const auto q = identity_brickwork(8, 0);
    const auto net = causal_cone_reduce(q, p);
    CHECK(net.channels.empty());
    CHECK((sigma_direct(net, psi) - reduced_density(psi, p.ab())).norm() < 1e-12);
  }

  TEST_CASE("reduced network reproduces the circuit") {
    std::mt19937_64 rng(15);
    for (int offset = 0; offset < 2; ++offset) {
      for (int seed = 0; seed < 3; ++seed) {
        const auto psi = random_state(16, 2, rng);
        const auto q = random_brickwork(16, 1, 1000 + seed);
        const auto p = build_partition(16, 1, offset);
        const auto net = causal_cone_reduce(q, p);
        CHECK((sigma_direct(net, psi) - sigma_reference(net, q, psi)).norm() < 1e-10);
        for (const auto& ch : net.channels) {
          CHECK(cptp_error(ch) < 1e-12);
          const int dim = 1 << ch.support().size();
          for (int k = 0; k < 10; ++k) {
            const MatrixXcd x = lrn::testing::random_density(dim, rng);
            CHECK(std::abs(apply_channel(ch, x, 2).trace() - 1.0) < 1e-12);
          }
        }
      }
    }
  }

  TEST_CASE("forward cones grow by one site per layer") {
    const auto q = random_brickwork(12, 2, 1);
    const auto cone = forward_cone(q, 0, 1);
    CHECK(cone == std::vector<int>{1, 2, 3, 4});
  }
}

TEST_SUITE("fixed point") {
  TEST_CASE("materialization overlaps the flowed state") {
    const mps::MpsTensor fixtures[] = {ghz_tensor(), chi3_tensor(std::numbers::pi / 3.0), product_tensor(),
                                        bell_link_tensor(), lrn::testing::random_tensor(2, 2, 21)};
    for (const auto& a : fixtures) {
      const auto fp = mps::rg_fixed_point(a);
      for (int m = 2; m <= 4; ++m) CHECK(materialization_overlap(a, fp, m) >= 1.0 - 1e-8);
    }
  }

  TEST_CASE("weights are validated") {
    const auto fp = mps::rg_fixed_point(ghz_tensor());
    const double bad[2] = {0.5, 0.6};
    CHECK_THROWS_AS(with_weights(fp, bad), InvalidWeight);
  }
}

TEST_SUITE("invariance") {
  TEST_CASE("mutual information survives shallow circuits") {
    const auto ghz = mps::rg_fixed_point(ghz_tensor());
    for (double p : {0.5, 0.3}) {
      const double probs[2] = {p, 1.0 - p};
      const auto r = lemma_invariance_experiment(with_weights(ghz, probs), 16, 1, 77);
      CHECK(r.before == doctest::Approx(binary_entropy(p)).epsilon(1e-9));
      CHECK(r.passed());
    }
  }

  TEST_CASE("a single block carries no mutual information") {
    const auto r = lemma_invariance_experiment(mps::rg_fixed_point(bell_link_tensor()), 16, 1, 3);
    CHECK(std::abs(r.before) < 1e-9);
    CHECK(std::abs(r.after) < 1e-9);
    CHECK(r.passed());
  }

  TEST_CASE("counterexample weights give one bit") {
    const auto w = criteria::counterexample_weights(criteria::counterexample_root());
    const auto r = lemma_invariance_experiment(with_weights(mps::rg_fixed_point(four_block_tensor()), w), 16, 1, 5);
    CHECK(r.shannon == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(r.passed());
  }
}
