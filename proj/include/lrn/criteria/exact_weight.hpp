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

#include <string>

#include <json.hpp>

#include "lrn/criteria/rational.hpp"

namespace lrn::criteria {

/// A weight given as a float, a rational, or a scaled root r * (p/q)^(1/n).
/// A rational is stored as the root form with base 1 and n = 1.
class ExactWeight {
 public:
  enum class Kind { kFloat, kRational, kRoot };

  static ExactWeight from_float(double x);
  static ExactWeight rational(std::int64_t p, std::int64_t q);
  /// r * base^(1/n). Throws InvalidWeight for n < 1 or a negative base.
  static ExactWeight root(Rational r, Rational base, int n);

  Kind kind() const { return kind_; }
  bool exact() const { return kind_ != Kind::kFloat; }
  double value() const;
  const Rational& coefficient() const { return coeff_; }
  const Rational& base() const { return base_; }
  int index() const { return n_; }
  double float_value() const { return x_; }

  bool is_zero() const;
  std::string str() const;

 private:
  Kind kind_ = Kind::kFloat;
  double x_ = 0.0;
  Rational coeff_{0, 1};
  Rational base_{1, 1};
  int n_ = 1;
};

/// {"float": x} | {"rat": [p, q]} | {"root": {"r": [p, q], "base": [p, q], "n": n}}.
/// Throws InvalidWeight.
ExactWeight exact_weight_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExactWeight& w);

}  // namespace lrn::criteria
