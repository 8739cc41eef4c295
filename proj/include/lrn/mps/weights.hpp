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

#include <vector>

#include "lrn/mps/tensor.hpp"

namespace lrn::mps {

struct WeightTerm {
  cplx c{1.0, 0.0};
  double phase = 0.0;  // radians, in (-pi, pi]
};

/// alpha_k(N) = sum_j c_j exp(i phase_j N) for each block k. Probabilities
/// are |alpha_k|^2 / c_N^2 with c_N = sqrt(sum_k |alpha_k|^2).
struct WeightSpectrum {
  std::vector<std::vector<WeightTerm>> blocks;

  std::vector<cplx> amplitudes(long n) const;
};

/// Wraps an angle into (-pi, pi].
double wrap_phase(double phase);

/// p_k(N). Throws DegenerateNormalization if c_N < 1e-14 and OutOfRange if
/// N < 1.
std::vector<double> evaluate_weights(const WeightSpectrum& w, long n);

}  // namespace lrn::mps
