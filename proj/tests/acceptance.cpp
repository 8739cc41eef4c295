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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lrn/criteria/theorems.hpp"
#include "lrn/dense/causal_cone.hpp"
#include "lrn/dense/circuit.hpp"
#include "lrn/dense/density.hpp"
#include "lrn/dense/experiments.hpp"
#include "lrn/dense/fixed_point.hpp"
#include "lrn/dense/partition.hpp"
#include "lrn/dense/stabilizer_bridge.hpp"
#include "lrn/dense/state.hpp"
#include "lrn/errors.hpp"
#include "lrn/mps/rg.hpp"
#include "lrn/stabilizer/tableau.hpp"
#include "test_util.hpp"

using namespace lrn;
using Eigen::MatrixXcd;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

mps::WeightSpectrum constant_weights(const std::vector<double>& probs) {
  mps::WeightSpectrum w;
  for (double p : probs) w.blocks.push_back({mps::WeightTerm{{std::sqrt(p), 0.0}, 0.0}});
  return w;
}

std::vector<int> sample_region(int n, int max_size, std::vector<char>& used, std::mt19937_64& rng) {
  const int size = 1 + static_cast<int>(rng() % max_size);
  std::vector<int> r;
  for (int tries = 0; tries < 4 * n && static_cast<int>(r.size()) < size; ++tries) {
    const int q = static_cast<int>(rng() % n);
    if (!used[q]) {
      used[q] = 1;
      r.push_back(q);
    }
  }
  return r;
}

void ghz_grid(Outcome& o) {
  int certified = 0;
  for (int k = 0; k <= 100; ++k) {
    const double p = k / 100.0;
    const auto label = criteria::ghz_classify(criteria::ExactWeight::rational(k, 100));
    const auto v = criteria::theorem1_check(constant_weights({p, 1.0 - p}));
    const bool lrn_label = label == criteria::GhzLabel::kLrn;
    const bool lrn_check = v.status == criteria::Status::kLrnCertified;
    const bool expected = k != 0 && k != 50 && k != 100;
    o.require(lrn_label == lrn_check, "disagreement at |alpha|^2 = " + std::to_string(p));
    o.require(lrn_label == expected, "wrong label at |alpha|^2 = " + std::to_string(p));
    certified += lrn_check;
  }
  o.detail << certified << "/101 certified";
}

void counterexample(Outcome& o) {
  const double t = criteria::counterexample_root();
  const double h = criteria::shannon_entropy(criteria::counterexample_weights(t));
  o.require(std::abs(t - 0.023) < 1e-3, "root away from 0.023");
  o.require(std::abs(h - 1.0) < 1e-6, "H(t*) != 1");

  const std::vector<criteria::ExactWeight> w = {
      criteria::ExactWeight::rational(1, 10),
      criteria::ExactWeight::root({1, 10}, {1, 3}, 4),
      criteria::ExactWeight::from_float(t),
      criteria::ExactWeight::from_float(1.0 - 0.1 - std::pow(3.0, -0.25) / 10.0 - t),
  };
  const auto v = criteria::theorem2_check(w);
  o.require(v.status == criteria::Status::kExactSrnExcluded, "rationality check did not exclude");
  o.require(v.evidence.value("offending_ratio", "") == "3^(1/2)", "ratio is not 3^(1/2)");

  // Six sites of local dimension 4 are twelve qubits; A and B are sites 0 and 3.
  const auto probs = criteria::counterexample_weights(t);
  const auto fp = dense::with_weights(mps::rg_fixed_point(dense::four_block_tensor()), probs);
  const auto psi = dense::as_qubits(dense::materialize_fixed_point(fp, 6, true));
  const int ab[4] = {0, 1, 6, 7};
  o.require(psi.n_sites == 12, "state is not on 12 qubits");
  o.require(!dense::flatness_check(dense::reduced_density(psi, ab), 4, 4, 1e-9), "counterexample is flat");

  std::mt19937_64 rng(2026);
  int flat = 0;
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const auto state = dense::run_clifford_dense(n, dense::random_clifford_circuit(n, 1 + rng() % 24, rng()));
    std::vector<char> used(n, 0);
    const auto a = sample_region(n, std::max(1, n / 2 - 1), used, rng);
    const auto b = sample_region(n, 2, used, rng);
    if (b.empty()) {
      ++flat;
      continue;
    }
    std::vector<int> region = a;
    region.insert(region.end(), b.begin(), b.end());
    flat += dense::flatness_check(dense::reduced_density(state, region), 1 << a.size(), 1 << b.size(), 1e-9);
  }
  o.require(flat == 100, "a stabilizer state failed flatness");
  o.detail << "t* = " << t << ", ratio " << v.evidence.value("offending_ratio", "") << ", stabilizer flat " << flat
           << "/100";
}

void stabilizer_oracle(Outcome& o) {
  std::mt19937_64 rng(11);
  int samples = 0;
  for (int k = 0; k < 1000; ++k) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const int depth = 1 + static_cast<int>(rng() % 24);
    const auto ops = dense::random_clifford_circuit(n, depth, rng());
    const auto t = dense::run_clifford_tableau(n, ops);
    const auto psi = dense::run_clifford_dense(n, ops);
    for (int s = 0; s < 3; ++s) {
      std::vector<char> used(n, 0);
      const auto a = sample_region(n, std::min(n, 3), used, rng);
      const auto b = sample_region(n, std::min(n, 3), used, rng);
      const double sa = dense::von_neumann_entropy(dense::reduced_density(psi, a));
      o.require(std::abs(stabilizer::entropy(t, a) - sa) < 1e-9, "entropy mismatch at n = " + std::to_string(n));
      if (!b.empty()) {
        const double mi = dense::mutual_information(psi, a, b);
        o.require(std::abs(stabilizer::mutual_information(t, a, b) - mi) < 1e-9,
                  "mutual information mismatch at n = " + std::to_string(n));
      }
      ++samples;
    }
  }
  o.detail << "1000 circuits, " << samples << " region samples";
}

void invariance(Outcome& o) {
  struct Fixture {
    std::string label;
    mps::FixedPointState fp;
  };
  std::vector<Fixture> fixtures;
  const auto ghz = mps::rg_fixed_point(dense::ghz_tensor());
  for (int k = 0; k <= 20; ++k) {
    const double probs[2] = {k / 20.0, 1.0 - k / 20.0};
    fixtures.push_back({"ghz " + std::to_string(k) + "/20", dense::with_weights(ghz, probs)});
  }
  for (double phi : {std::numbers::pi / 2.0, std::numbers::pi / 3.0, 2.0 * std::numbers::pi / 5.0}) {
    fixtures.push_back({"chi3 " + std::to_string(phi), mps::rg_fixed_point(dense::chi3_tensor(phi))});
  }
  fixtures.push_back({"counterexample", dense::with_weights(mps::rg_fixed_point(dense::four_block_tensor()),
                                                            criteria::counterexample_weights(
                                                                criteria::counterexample_root()))});
  const int n_cases = static_cast<int>(fixtures.size()) * 20;
  std::vector<dense::InvarianceReport> reports(n_cases);
  std::vector<std::string> errors(n_cases);
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < n_cases; ++c) {
    try {
      reports[c] = dense::lemma_invariance_experiment(fixtures[c / 20].fp, 16, 1, 500 + c % 20, c % 2);
    } catch (const std::exception& e) {
      errors[c] = e.what();
    }
  }
  double worst = 0.0;
  for (int c = 0; c < n_cases; ++c) {
    const std::string where = fixtures[c / 20].label + " seed " + std::to_string(500 + c % 20);
    o.require(errors[c].empty(), where + ": " + errors[c]);
    if (!errors[c].empty()) continue;
    const auto& r = reports[c];
    o.require(std::abs(r.before - r.after) < 1e-8, where + " changed I");
    o.require(std::abs(r.before - r.shannon) < 1e-8, where + " I != H");
    bool valid = true;
    try {
      dense::validate_partition(r.partition, 1);
    } catch (const PartitionTooSmall&) {
      valid = false;
    }
    o.require(valid, where + " partition invalid");
    worst = std::max({worst, std::abs(r.before - r.after), std::abs(r.before - r.shannon)});
  }
  o.detail << fixtures.size() << " fixtures x 20 seeds, max deviation " << worst;
}

void causal_cone(Outcome& o) {
  double worst_sigma = 0.0, worst_cptp = 0.0;
  int channels = 0;
  for (int seed = 0; seed < 10; ++seed) {
    std::mt19937_64 rng(900 + seed);
    const auto psi = dense::make_state(16, 2, lrn::testing::random_vector(1 << 16, rng));
    const auto q = dense::random_brickwork(16, 1, 300 + seed);
    const auto net = dense::causal_cone_reduce(q, dense::build_partition(16, 1, seed % 2));
    worst_sigma = std::max(worst_sigma, (dense::sigma_direct(net, psi) - dense::sigma_reference(net, q, psi)).norm());
    for (const auto& ch : net.channels) {
      worst_cptp = std::max(worst_cptp, dense::cptp_error(ch));
      ++channels;
    }
  }
  o.require(worst_sigma < 1e-10, "sigma mismatch");
  o.require(worst_cptp < 1e-12, "channel not CPTP");
  o.detail << "10 seeds, " << channels << " channels, max sigma error " << worst_sigma << ", max CPTP error "
           << worst_cptp;
}

void mps_structure(Outcome& o) {
  double worst_block = 0.0;
  for (int d = 1; d <= 3; ++d) {
    for (int chi = 1; chi <= 4; ++chi) {
      for (int q = 1; q <= 4; ++q) {
        const auto a = mps::normalized(lrn::testing::random_tensor(d, chi, 100 * d + 10 * chi + q));
        MatrixXcd power = MatrixXcd::Identity(chi * chi, chi * chi);
        const MatrixXcd e = lrn::testing::naive_transfer(a);
        for (int k = 0; k < q; ++k) power = power * e;
        worst_block =
            std::max(worst_block, (lrn::testing::naive_transfer(mps::block_tensor(a, q)) - power).norm());
      }
    }
  }
  o.require(worst_block < 1e-10, "blocking is not a homomorphism");

  double worst_square = 0.0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto a = mps::normalized(lrn::testing::random_tensor(2 + s % 2, 2 + s % 2, 40 + s));
    const auto before = lrn::testing::sorted_eigenvalues(lrn::testing::naive_transfer(a));
    const auto after = lrn::testing::sorted_eigenvalues(lrn::testing::naive_transfer(mps::rg_step(a).a_prime));
    for (std::size_t k = 0; k < before.size(); ++k) {
      worst_square = std::max(worst_square, std::abs(std::abs(after[k]) - std::norm(before[k])));
    }
  }
  o.require(worst_square < 1e-8, "spectrum does not square");

  const mps::MpsTensor fixtures[] = {dense::ghz_tensor(),
                                     dense::chi3_tensor(std::numbers::pi / 3.0),
                                     dense::four_block_tensor(),
                                     dense::bell_link_tensor(),
                                     dense::product_tensor(),
                                     dense::antiferromagnet_tensor(),
                                     lrn::testing::random_tensor(2, 2, 7)};
  double worst_overlap = 1.0;
  int checked = 0;
  for (const auto& a : fixtures) {
    const auto fp = mps::rg_fixed_point(a);
    for (int m = 1; m * fp.blocking <= 10; ++m) {
      const double dim = std::pow(std::max(dense::fixed_point_site_dim(fp), fp.flowed.physical_dim()), m);
      if (dim > static_cast<double>(dense::kAmplitudeCap)) break;
      worst_overlap = std::min(worst_overlap, dense::materialization_overlap(a, fp, m));
      ++checked;
    }
  }
  o.require(worst_overlap >= 1.0 - 1e-8, "materialization overlap too small");

  double worst_ratio = 0.0;
  for (double phi : {std::numbers::pi / 2.0, std::numbers::pi / 3.0, 2.0 * std::numbers::pi / 5.0}) {
    const auto a = dense::chi3_tensor(phi);
    for (int n = 1; n <= 10; ++n) {
      const auto amps = dense::mps_amplitudes(a, n);
      const auto ratio = amps(amps.size() - 1) / amps(0);
      worst_ratio = std::max(worst_ratio, std::abs(ratio - 2.0 * std::cos(phi * n)));
    }
  }
  o.require(worst_ratio < 1e-10, "chi3 amplitude ratio differs from 2 cos(phi N)");
  o.detail << "blocking " << worst_block << ", squaring " << worst_square << ", min overlap " << worst_overlap
           << " over " << checked << " sizes, ratio " << worst_ratio;
}

void fannes(Outcome& o) {
  std::mt19937_64 rng(77);
  double min_slack = 1e300;
  for (int k = 0; k < 1000; ++k) {
    const int dim = 1 << (1 + static_cast<int>(rng() % 3));
    const auto r = dense::fannes_check(lrn::testing::random_density(dim, rng), lrn::testing::random_density(dim, rng));
    min_slack = std::min(min_slack, r.slack);
  }
  o.require(min_slack >= -1e-12, "Fannes bound violated");
  o.detail << "1000 pairs, min slack " << min_slack;
}

void typicality(Outcome& o) {
  double prev = 0.0;
  for (int n = 20; n <= 40; ++n) {
    const double r = criteria::typicality_log_ratio(n);
    o.require(r < 0.0, "non-negative at N = " + std::to_string(n));
    if (n > 20) o.require(r < prev, "not decreasing at N = " + std::to_string(n));
    prev = r;
  }
  o.detail << "log-ratio at N = 40: " << prev;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"GHZ-family classification", ghz_grid},
      {"counterexample state", counterexample},
      {"stabilizer quantization", stabilizer_oracle},
      {"invariance under shallow circuits", invariance},
      {"causal-cone reduction", causal_cone},
      {"MPS structure", mps_structure},
      {"Fannes inequality", fannes},
      {"typicality calculator", typicality},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, body] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", index++, name, secs, o.detail.str().c_str());
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
