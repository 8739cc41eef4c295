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

#include <cstdint>
#include <optional>
#include <string>

namespace lrn::criteria {

/// p/q with q > 0, in lowest terms.
struct Rational {
  std::int64_t p = 0;
  std::int64_t q = 1;

  double value() const { return static_cast<double>(p) / static_cast<double>(q); }
  std::string str() const;
  bool operator==(const Rational&) const = default;
};

/// Normalises sign and common factors. Throws InvalidWeight if q == 0.
Rational make_rational(std::int64_t p, std::int64_t q);

/// First continued-fraction convergent p/q of x with q <= q_max and
/// |x - p/q| < tau / q^2.
std::optional<Rational> rationality_test(double x, std::int64_t q_max = 1000000, double tau = 1e-9);

}  // namespace lrn::criteria
