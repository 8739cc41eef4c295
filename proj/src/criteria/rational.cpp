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

#include "lrn/criteria/rational.hpp"

#include <cmath>
#include <numeric>

#include "lrn/errors.hpp"

namespace lrn::criteria {

std::string Rational::str() const {
  if (q == 1) return std::to_string(p);
  return std::to_string(p) + "/" + std::to_string(q);
}

Rational make_rational(std::int64_t p, std::int64_t q) {
  if (q == 0) throw InvalidWeight("zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p, q);
  return {p / g, q / g};
}

std::optional<Rational> rationality_test(double x, std::int64_t q_max, double tau) {
  if (!std::isfinite(x)) return std::nullopt;
  const bool neg = x < 0.0;
  const long double target = std::fabs(static_cast<long double>(x));
  long double y = target;
  // Convergent recurrences h_k = a_k h_{k-1} + h_{k-2}, likewise k.
  long double h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  for (int iter = 0; iter < 64; ++iter) {
    const long double a = std::floor(y);
    const long double h = a * h1 + h2;
    const long double k = a * k1 + k2;
    if (k > static_cast<long double>(q_max) || h > 9.0e18L) break;
    if (std::fabs(target - h / k) < static_cast<long double>(tau) / (k * k)) {
      const auto p = static_cast<std::int64_t>(h);
      return Rational{neg ? -p : p, static_cast<std::int64_t>(k)};
    }
    const long double frac = y - a;
    if (frac < 1e-30L) break;
    y = 1.0L / frac;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
  }
  return std::nullopt;
}

}  // namespace lrn::criteria
