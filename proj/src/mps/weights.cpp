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

#include "lrn/mps/weights.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lrn/errors.hpp"

namespace lrn::mps {

double wrap_phase(double phase) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(phase, two_pi);
  if (r <= -std::numbers::pi) r += two_pi;
  if (r > std::numbers::pi) r -= two_pi;
  return r;
}

std::vector<cplx> WeightSpectrum::amplitudes(long n) const {
  std::vector<cplx> out;
  out.reserve(blocks.size());
  for (const auto& terms : blocks) {
    cplx a = 0.0;
    for (const auto& t : terms) {
      const double arg = std::fmod(t.phase * static_cast<double>(n), 2.0 * std::numbers::pi);
      a += t.c * std::polar(1.0, arg);
    }
    out.push_back(a);
  }
  return out;
}

std::vector<double> evaluate_weights(const WeightSpectrum& w, long n) {
  if (n < 1) throw OutOfRange("N must be >= 1, got " + std::to_string(n));
  const auto a = w.amplitudes(n);
  double total = 0.0;
  for (const auto& x : a) total += std::norm(x);
  const double c_n = std::sqrt(total);
  if (c_n < 1e-14) {
    throw DegenerateNormalization("all block weights vanish at N=" + std::to_string(n));
  }
  std::vector<double> p;
  p.reserve(a.size());
  for (const auto& x : a) p.push_back(std::norm(x) / total);
  return p;
}

}  // namespace lrn::mps
