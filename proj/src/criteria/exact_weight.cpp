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

#include "lrn/criteria/exact_weight.hpp"

#include <cmath>

#include "lrn/errors.hpp"

namespace lrn::criteria {

using nlohmann::json;

ExactWeight ExactWeight::from_float(double x) {
  if (!std::isfinite(x)) throw InvalidWeight("float weight must be finite");
  ExactWeight w;
  w.kind_ = Kind::kFloat;
  w.x_ = x;
  return w;
}

ExactWeight ExactWeight::rational(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw InvalidWeight("rational weight needs a positive denominator");
  ExactWeight w;
  w.kind_ = Kind::kRational;
  w.coeff_ = make_rational(p, q);
  w.x_ = w.coeff_.value();
  return w;
}

ExactWeight ExactWeight::root(Rational r, Rational base, int n) {
  if (r.q <= 0 || base.q <= 0) throw InvalidWeight("root weight needs positive denominators");
  if (n < 1) throw InvalidWeight("root index must be >= 1");
  if (base.p < 0) throw InvalidWeight("root base must be nonnegative");
  ExactWeight w;
  w.kind_ = Kind::kRoot;
  w.coeff_ = make_rational(r.p, r.q);
  w.base_ = make_rational(base.p, base.q);
  w.n_ = n;
  w.x_ = w.coeff_.value() * std::pow(w.base_.value(), 1.0 / n);
  return w;
}

double ExactWeight::value() const { return x_; }

bool ExactWeight::is_zero() const {
  if (kind_ == Kind::kFloat) return x_ == 0.0;
  return coeff_.p == 0 || base_.p == 0;
}

std::string ExactWeight::str() const {
  switch (kind_) {
    case Kind::kFloat: {
      json j = x_;
      return j.dump();
    }
    case Kind::kRational:
      return coeff_.str();
    case Kind::kRoot:
      return "(" + coeff_.str() + ")*(" + base_.str() + ")^(1/" + std::to_string(n_) + ")";
  }
  return "?";
}

namespace {

Rational pair_to_rational(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw InvalidWeight(std::string(what) + " must be [p, q] with integers");
  }
  const auto q = j[1].get<std::int64_t>();
  if (q <= 0) throw InvalidWeight(std::string(what) + " needs a positive denominator");
  return make_rational(j[0].get<std::int64_t>(), q);
}

}  // namespace

ExactWeight exact_weight_from_json(const json& j) {
  if (j.is_number()) return ExactWeight::from_float(j.get<double>());
  if (!j.is_object() || j.size() != 1) throw InvalidWeight("weight must be an object with one key");
  if (j.contains("float")) {
    if (!j["float"].is_number()) throw InvalidWeight("\"float\" must be a number");
    return ExactWeight::from_float(j["float"].get<double>());
  }
  if (j.contains("rat")) {
    const Rational r = pair_to_rational(j["rat"], "rat");
    return ExactWeight::rational(r.p, r.q);
  }
  if (j.contains("root")) {
    const json& r = j["root"];
    if (!r.is_object() || !r.contains("r") || !r.contains("base") || !r.contains("n") ||
        !r["n"].is_number_integer()) {
      throw InvalidWeight("\"root\" needs r, base and integer n");
    }
    return ExactWeight::root(pair_to_rational(r["r"], "r"), pair_to_rational(r["base"], "base"),
                             r["n"].get<int>());
  }
  throw InvalidWeight("unknown weight form " + j.dump());
}

json to_json(const ExactWeight& w) {
  switch (w.kind()) {
    case ExactWeight::Kind::kFloat:
      return {{"float", w.float_value()}};
    case ExactWeight::Kind::kRational:
      return {{"rat", {w.coefficient().p, w.coefficient().q}}};
    case ExactWeight::Kind::kRoot:
      return {{"root",
               {{"r", {w.coefficient().p, w.coefficient().q}},
                {"base", {w.base().p, w.base().q}},
                {"n", w.index()}}}};
  }
  return nullptr;
}

}  // namespace lrn::criteria
