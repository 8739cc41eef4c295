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

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lrn/criteria/exact_weight.hpp"
#include "lrn/mps/weights.hpp"

namespace lrn::criteria {

enum class Status { kLrnCertified, kExactSrnExcluded, kInconclusive };

const char* to_string(Status s);

struct Verdict {
  Status status = Status::kInconclusive;
  nlohmann::json evidence = nlohmann::json::object();
  /// (period s, residue r) of a class that alone clears the integer gap.
  std::optional<std::pair<long, long>> residue_class;
};

/// Base-2 entropy with 0 log 0 = 0. Throws NotNormalized unless every entry
/// lies in [0, 1] and the sum is within 1e-9 of one.
double shannon_entropy(std::span<const double> p);

struct Theorem1Options {
  long n_min = 1000;
  long n_max = 2000;
  double tau_int = 1e-6;
  std::int64_t phase_qmax = 10000;
  double phase_tau = 1e-6;
};

/// Integer gap of H({p_k(N)}): exact per residue class for commensurate
/// phases, otherwise inf/sup over the N window.
Verdict theorem1_check(const mps::WeightSpectrum& w, const Theorem1Options& opts = {});

struct Theorem2Options {
  std::int64_t q_max = 1000000;
  double tau_rat = 1e-9;
};

/// Rationality of (w_i / w_j)^2 for the weights w = |alpha|^2. Only exact
/// forms can yield EXACT_SRN_EXCLUDED.
Verdict theorem2_check(std::span<const ExactWeight> weights, const Theorem2Options& opts = {});

enum class GhzLabel { kStabilizer, kSrn, kLrn };

const char* to_string(GhzLabel l);

/// Throws OutOfRange outside [0, 1].
GhzLabel ghz_classify(const ExactWeight& alpha_sq);

struct TypicalityParams {
  double eps0 = 0.01;
  double alpha = 1.0;
  int n_g = 3;
  double polylog_exponent = 2.0;
};

/// ln n_C + ln n_S - ln n_B at system size N with depth ceil(log2 N)^2.
double typicality_log_ratio(int n, const TypicalityParams& params = {});

/// Smallest t in (0, 0.1) with H(1/10, 3^(-1/4)/10, t, rest) = 1, by bisection.
double counterexample_root(double tol = 1e-14);
std::vector<double> counterexample_weights(double t);

}  // namespace lrn::criteria
