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
#include <random>

#include <doctest.h>

#include "lrn/dense/density.hpp"
#include "lrn/dense/stabilizer_bridge.hpp"
#include "lrn/errors.hpp"
#include "lrn/stabilizer/pauli.hpp"
#include "lrn/stabilizer/tableau.hpp"

using namespace lrn;
using namespace lrn::stabilizer;
using Eigen::MatrixXcd;

namespace {

// Dense matrix of a Pauli string built from 2x2 factors.
MatrixXcd dense_pauli(const PauliString& p) {
  const std::complex<double> i(0, 1);
  MatrixXcd out = MatrixXcd::Identity(1, 1);
  for (int q = 0; q < p.num_qubits(); ++q) {
    MatrixXcd s(2, 2);
    if (p.x(q) && p.z(q)) {
      s << 0, -i, i, 0;
    } else if (p.x(q)) {
      s << 0, 1, 1, 0;
    } else if (p.z(q)) {
      s << 1, 0, 0, -1;
    } else {
      s = MatrixXcd::Identity(2, 2);
    }
    MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r)
      for (Eigen::Index c = 0; c < out.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = out(r, c) * s;
    out = next;
  }
  static const std::complex<double> kPow[4] = {1.0, i, -1.0, -i};
  return kPow[p.phase()] * out;
}

PauliString random_pauli(int n, std::mt19937_64& rng) {
  PauliString p(n);
  for (int q = 0; q < n; ++q) {
    p.set_x(q, rng() & 1);
    p.set_z(q, rng() & 1);
  }
  p.set_phase(static_cast<int>(rng() % 4));
  return p;
}

// Dense operator of a gate acting on `targets` of n qubits, built column by
// column from basis states. Qubit 0 is the most significant bit.
MatrixXcd embed(Gate g, const std::vector<int>& targets, int n) {
  const MatrixXcd u = dense::clifford_matrix(g);
  const int k = static_cast<int>(targets.size());
  MatrixXcd out = MatrixXcd::Zero(1 << n, 1 << n);
  for (int b = 0; b < (1 << n); ++b) {
    int local = 0;
    for (int tq : targets) local = local * 2 + ((b >> (n - 1 - tq)) & 1);
    for (int o = 0; o < (1 << k); ++o) {
      int bb = b;
      for (int j = 0; j < k; ++j) {
        const int bit = (o >> (k - 1 - j)) & 1;
        const int pos = n - 1 - targets[j];
        bb = (bb & ~(1 << pos)) | (bit << pos);
      }
      out(bb, b) += u(o, local);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("pauli") {
  TEST_CASE("products match dense matrix products") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 4);
      const PauliString a = random_pauli(n, rng), b = random_pauli(n, rng);
      PauliString c = a;
      c *= b;
      CHECK((dense_pauli(c) - dense_pauli(a) * dense_pauli(b)).norm() < 1e-12);
      const MatrixXcd comm = dense_pauli(a) * dense_pauli(b) - dense_pauli(b) * dense_pauli(a);
      CHECK(a.commutes(b) == (comm.norm() < 1e-12));
    }
  }

  TEST_CASE("parse and print") {
    CHECK(PauliString::parse("-iXYZI").str() == "-iXYZI");
    CHECK(PauliString::parse("\xE2\x88\x92ZZ").str() == "-ZZ");
    CHECK(PauliString::parse("X_Z").str() == "+XIZ");
    CHECK_THROWS_AS(PauliString::parse("XQ"), ParseError);
    CHECK_THROWS_AS(PauliString::parse("+"), ParseError);
  }

  TEST_CASE("words spanning more than 64 qubits") {
    PauliString a(130), b(130);
    a.set_x(100, true);
    b.set_z(100, true);
    CHECK_FALSE(a.commutes(b));
    a *= b;
    CHECK(a.x(100));
    CHECK(a.z(100));
  }
}

TEST_SUITE("tableau") {
  TEST_CASE("conjugation rules agree with dense gates") {
    std::mt19937_64 rng(2);
    const Gate gates[] = {Gate::kH, Gate::kS, Gate::kCnot, Gate::kCz, Gate::kX, Gate::kY, Gate::kZ};
    const int n = 3;
    for (Gate g : gates) {
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> targets = {static_cast<int>(rng() % n)};
        if (arity(g) == 2) {
          int b = static_cast<int>(rng() % (n - 1));
          if (b >= targets[0]) ++b;
          targets.push_back(b);
        }
        const auto before = dense::run_clifford_tableau(n, dense::random_clifford_circuit(n, 4, rng()));
        const auto after = apply_gate(before, g, targets);
        const MatrixXcd u = embed(g, targets, n);
        for (int q = 0; q < n; ++q) {
          const MatrixXcd expected = u * dense_pauli(before.generators()[q]) * u.adjoint();
          CHECK((dense_pauli(after.generators()[q]) - expected).norm() < 1e-12);
        }
      }
    }
  }

  TEST_CASE("generator validation") {
    CHECK_THROWS_AS(StabilizerTableau::parse("+XX\n+XX\n"), DependentGenerators);
    CHECK_THROWS_AS(StabilizerTableau::parse("+XI\n+ZI\n"), DependentGenerators);
    CHECK_THROWS_AS(StabilizerTableau::parse("+iXX\n+ZZ\n"), DependentGenerators);
    CHECK_THROWS_AS(StabilizerTableau::parse("+XX\n"), DependentGenerators);
    CHECK_NOTHROW(StabilizerTableau::parse("# bell\n+XX\n\n-YY\n"));
  }

  TEST_CASE("targets are range checked") {
    auto t = StabilizerTableau::zero_state(2);
    CHECK_THROWS_AS(t.h(2), TargetOutOfRange);
    CHECK_THROWS_AS(t.cnot(0, 0), TargetOutOfRange);
    const int bad[1] = {5};
    CHECK_THROWS_AS(entropy(t, bad), TargetOutOfRange);
  }

  TEST_CASE("canonical form is unique for the group") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 6);
      const auto t = dense::run_clifford_tableau(n, dense::random_clifford_circuit(n, 8, rng()));
      // Multiply rows together to obtain another generating set of the group.
      auto gens = t.generators();
      for (int k = 0; k < n; ++k) {
        const int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        if (a != b) gens[a] *= gens[b];
      }
      std::shuffle(gens.begin(), gens.end(), rng);
      const auto u = StabilizerTableau::from_generators(gens);
      CHECK(canonicalize(t) == canonicalize(u));
      CHECK(StabilizerTableau::parse(t.str()) == t);
    }
  }

  TEST_CASE("entropy and mutual information of a Bell pair") {
    const auto t = StabilizerTableau::parse("+XX\n+ZZ\n");
    const int a[1] = {0}, b[1] = {1};
    CHECK(entropy(t, a) == 1);
    CHECK(mutual_information(t, a, b) == 2);
    CHECK_THROWS_AS(mutual_information(t, a, a), OverlappingRegions);
  }

  TEST_CASE("tableau entropies match the dense oracle") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const auto ops = dense::random_clifford_circuit(n, 1 + static_cast<int>(rng() % 24), rng());
      const auto t = dense::run_clifford_tableau(n, ops);
      const auto psi = dense::run_clifford_dense(n, ops);
      CHECK(std::abs(std::abs(dense::overlap(dense::tableau_to_dense(t), psi)) - 1.0) < 1e-10);
      for (int q = 0; q < n; ++q) {
        const int r[1] = {q};
        CHECK(std::abs(entropy(t, r) - dense::von_neumann_entropy(dense::reduced_density(psi, r))) < 1e-9);
      }
    }
  }
}
