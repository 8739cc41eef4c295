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


#include "lrn/cli/verify.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "lrn/criteria/theorems.hpp"
#include "lrn/dense/causal_cone.hpp"
#include "lrn/dense/density.hpp"
#include "lrn/dense/experiments.hpp"
#include "lrn/dense/fixed_point.hpp"
#include "lrn/dense/stabilizer_bridge.hpp"
#include "lrn/errors.hpp"
#include "lrn/stabilizer/tableau.hpp"

namespace lrn::cli {

using nlohmann::json;

namespace {

constexpr double kInvarianceTol = 1e-8;
constexpr double kSigmaTol = 1e-10;
constexpr double kCptpTol = 1e-12;
constexpr double kOracleTol = 1e-9;

// Runs `body(k)` for k in [0, n) on up to `jobs` threads and keeps the
// non-null results in case order.
template <typename Body>
std::vector<json> run_cases(int n, int jobs, Body body) {
  std::vector<json> out(n);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (int k = 0; k < n; ++k) {
    try {
      out[k] = body(k);
    } catch (const Error& e) {
      out[k] = {{"case", k}, {"error", e.kind()}, {"message", e.what()}};
    }
  }
  std::vector<json> failures;
  for (auto& f : out) {
    if (!f.is_null()) failures.push_back(std::move(f));
  }
  return failures;
}

Eigen::VectorXcd random_vector(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
  for (auto& z : v) z = cplx(g(rng), g(rng));
  return v;
}

Eigen::MatrixXcd random_density(int dim, std::mt19937_64& rng) {
  const int rank = std::uniform_int_distribution<int>(1, dim)(rng);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd m(dim, rank);
  for (int j = 0; j < rank; ++j) {
    for (int i = 0; i < dim; ++i) m(i, j) = cplx(g(rng), g(rng));
  }
  Eigen::MatrixXcd rho = m * m.adjoint();
  return rho / rho.trace().real();
}

std::vector<int> random_region(int n, int max_size, std::mt19937_64& rng, const std::vector<int>& avoid = {}) {
  std::vector<int> pool;
  for (int q = 0; q < n; ++q) {
    if (std::find(avoid.begin(), avoid.end(), q) == avoid.end()) pool.push_back(q);
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  const int k = std::uniform_int_distribution<int>(1, std::min<int>(max_size, static_cast<int>(pool.size())))(rng);
  pool.resize(k);
  return pool;
}

struct Fixture {
  std::string label;
  mps::FixedPointState fp;
};

std::vector<Fixture> invariance_fixtures() {
  std::vector<Fixture> f;
  const auto ghz = mps::rg_fixed_point(dense::ghz_tensor());
  for (double p : {0.3, 0.5}) {
    const double probs[2] = {p, 1.0 - p};
    f.push_back({"ghz_p" + std::to_string(p).substr(0, 3), dense::with_weights(ghz, probs)});
  }
  f.push_back({"chi3_pi_3", mps::rg_fixed_point(dense::chi3_tensor(std::numbers::pi / 3.0))});
  const auto w = criteria::counterexample_weights(criteria::counterexample_root());
  f.push_back({"four_block_root", dense::with_weights(mps::rg_fixed_point(dense::four_block_tensor()), w)});
  return f;
}

}  // namespace

json SuiteResult::to_json() const {
  return {{"name", name}, {"cases", cases}, {"passed", passed()}, {"failures", failures}};
}

SuiteResult verify_invariance(const VerifyOptions& o) {
  const auto fixtures = invariance_fixtures();
  const int n_qubits = 8 * (o.depth + 1);
  SuiteResult r{"invariance", static_cast<int>(fixtures.size()) * o.seeds, {}};
  r.failures = run_cases(r.cases, o.jobs, [&](int k) -> json {
    const auto& fx = fixtures[k / o.seeds];
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(k % o.seeds);
    const auto rep = dense::lemma_invariance_experiment(fx.fp, n_qubits, o.depth, seed);
    if (rep.passed(kInvarianceTol)) return nullptr;
    json j = rep.to_json();
    j["fixture"] = fx.label;
    return j;
  });
  return r;
}

SuiteResult verify_causal_cone(const VerifyOptions& o) {
  const int n = 8 * (o.depth + 1);
  SuiteResult r{"causal_cone", o.seeds, {}};
  r.failures = run_cases(r.cases, o.jobs, [&](int k) -> json {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(k);
    std::mt19937_64 rng(seed);
    const auto psi = dense::make_state(n, 2, random_vector(std::size_t{1} << n, rng));
    const auto q = dense::random_brickwork(n, o.depth, seed);
    const auto part = dense::build_partition(n, o.depth, static_cast<int>(seed % 2));
    const auto net = dense::causal_cone_reduce(q, part);
    const double diff = (dense::sigma_direct(net, psi) - dense::sigma_reference(net, q, psi)).norm();
    double cptp = 0.0;
    for (const auto& ch : net.channels) cptp = std::max(cptp, dense::cptp_error(ch));
    if (diff < kSigmaTol && cptp < kCptpTol) return nullptr;
    return {{"seed", seed}, {"depth", o.depth}, {"sigma_error", diff}, {"cptp_error", cptp}};
  });
  return r;
}

SuiteResult verify_stabilizer_oracle(const VerifyOptions& o) {
  SuiteResult r{"stabilizer_oracle", o.seeds, {}};
  r.failures = run_cases(r.cases, o.jobs, [&](int k) -> json {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(k);
    std::mt19937_64 rng(seed);
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    const int depth = std::uniform_int_distribution<int>(1, 24)(rng);
    const auto ops = dense::random_clifford_circuit(n, depth, rng());
    const auto t = dense::run_clifford_tableau(n, ops);
    const auto psi = dense::run_clifford_dense(n, ops);
    const auto a = random_region(n, 3, rng);
    const auto b = random_region(n, 3, rng, a);
    const int s_t = stabilizer::entropy(t, a);
    const double s_d = dense::von_neumann_entropy(dense::reduced_density(psi, a));
    const int i_t = stabilizer::mutual_information(t, a, b);
    const double i_d = dense::mutual_information(psi, a, b);
    if (std::abs(s_t - s_d) < kOracleTol && std::abs(i_t - i_d) < kOracleTol) return nullptr;
    return {{"seed", seed}, {"n", n}, {"A", a}, {"B", b}, {"S_tableau", s_t}, {"S_dense", s_d},
            {"I_tableau", i_t}, {"I_dense", i_d}};
  });
  return r;
}

SuiteResult verify_fannes(const VerifyOptions& o) {
  SuiteResult r{"fannes", o.seeds, {}};
  r.failures = run_cases(r.cases, o.jobs, [&](int k) -> json {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(k);
    std::mt19937_64 rng(seed);
    const int dim = 1 << std::uniform_int_distribution<int>(1, 3)(rng);
    const auto rho = random_density(dim, rng);
    const auto sigma = random_density(dim, rng);
    const auto f = dense::fannes_check(rho, sigma);
    if (f.holds) return nullptr;
    return {{"seed", seed}, {"delta", f.delta}, {"lhs", f.lhs}, {"bound", f.bound}};
  });
  return r;
}

SuiteResult verify_tableau_file(const std::string& path) {
  SuiteResult r{"tableau_file", 1, {}};
  std::ifstream in(path);
  if (!in) {
    r.failures.push_back({{"input", path}, {"error", "ParseError"}, {"message", "cannot open " + path}});
    return r;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    const auto t = stabilizer::StabilizerTableau::parse(ss.str());
    const auto psi = dense::tableau_to_dense(t);
    for (int q = 0; q < t.num_qubits(); ++q) {
      const int region[1] = {q};
      const double s_d = dense::von_neumann_entropy(dense::reduced_density(psi, region));
      const int s_t = stabilizer::entropy(t, region);
      if (std::abs(s_d - s_t) >= kOracleTol) {
        r.failures.push_back({{"input", path}, {"qubit", q}, {"S_tableau", s_t}, {"S_dense", s_d}});
      }
    }
  } catch (const Error& e) {
    r.failures.push_back({{"input", path}, {"error", e.kind()}, {"message", e.what()}});
  }
  return r;
}

std::vector<SuiteResult> verify_default(const VerifyOptions& o) {
  return {verify_invariance(o), verify_causal_cone(o), verify_stabilizer_oracle(o), verify_fannes(o)};
}

}  // namespace lrn::cli
