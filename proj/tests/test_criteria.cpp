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


#include <cmath>
#include <numbers>
#include <numeric>

#include <doctest.h>

#include "lrn/criteria/exact_weight.hpp"
#include "lrn/criteria/rational.hpp"
#include "lrn/criteria/theorems.hpp"
#include "lrn/errors.hpp"

using namespace lrn;
using namespace lrn::criteria;

namespace {

mps::WeightSpectrum constant_weights(std::initializer_list<double> probs) {
  mps::WeightSpectrum w;
  for (double p : probs) w.blocks.push_back({mps::WeightTerm{std::sqrt(p), 0.0}});
  return w;
}

// Root of H(weights(t)) - 1 by the secant method, started away from the
// bisection bracket.
double secant_root() {
  auto f = [](double t) { return shannon_entropy(counterexample_weights(t)) - 1.0; };
  double x0 = 0.01, x1 = 0.03;
  for (int k = 0; k < 100 && std::abs(x1 - x0) > 1e-16; ++k) {
    const double f0 = f(x0), f1 = f(x1);
    if (f1 == f0) break;
    const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    x0 = x1;
    x1 = x2;
  }
  return x1;
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("every fraction with denominator up to 1000 is recovered") {
    for (std::int64_t q = 1; q <= 1000; ++q) {
      for (std::int64_t p = 0; p <= q; p += std::max<std::int64_t>(1, q / 37)) {
        const auto r = rationality_test(static_cast<double>(p) / q, 1000000, 1e-9);
        REQUIRE(r.has_value());
        const std::int64_t g = std::gcd(p, q);
        CHECK(r->p == p / g);
        CHECK(r->q == q / g);
      }
    }
  }

  TEST_CASE("quadratic irrationals are rejected") {
    CHECK_FALSE(rationality_test(std::sqrt(2.0)).has_value());
    CHECK_FALSE(rationality_test(std::numbers::phi).has_value());
    CHECK_FALSE(rationality_test(std::sqrt(3.0)).has_value());
  }

  TEST_CASE("normalisation") {
    CHECK(make_rational(-4, -6) == Rational{2, 3});
    CHECK(make_rational(3, -9) == Rational{-1, 3});
    CHECK_THROWS_AS(make_rational(1, 0), InvalidWeight);
  }
}

TEST_SUITE("exact weights") {
  TEST_CASE("json forms round trip") {
    for (const auto& w : {ExactWeight::from_float(0.25), ExactWeight::rational(3, 10),
                          ExactWeight::root({1, 10}, {1, 3}, 4)}) {
      const auto back = exact_weight_from_json(to_json(w));
      CHECK(back.kind() == w.kind());
      CHECK(back.value() == doctest::Approx(w.value()).epsilon(1e-15));
    }
    CHECK(ExactWeight::root({1, 10}, {1, 3}, 4).value() == doctest::Approx(std::pow(3.0, -0.25) / 10.0));
    CHECK_THROWS_AS(exact_weight_from_json(nlohmann::json{{"rat", {1, 0}}}), InvalidWeight);
    CHECK_THROWS_AS(exact_weight_from_json(nlohmann::json{{"what", 1}}), InvalidWeight);
  }
}

TEST_SUITE("entropy") {
  TEST_CASE("shannon entropy") {
    const double p[2] = {0.5, 0.5};
    CHECK(shannon_entropy(p) == doctest::Approx(1.0));
    const double q[3] = {1.0, 0.0, 0.0};
    CHECK(shannon_entropy(q) == 0.0);
    const double bad[2] = {0.5, 0.6};
    CHECK_THROWS_AS(shannon_entropy(bad), NotNormalized);
  }
}

TEST_SUITE("integer gap") {
  TEST_CASE("constant weights off the integers are certified") {
    const auto v = theorem1_check(constant_weights({0.3, 0.7}));
    CHECK(v.status == Status::kLrnCertified);
    CHECK(v.evidence["min_distance"].get<double>() == doctest::Approx(1.0 - 0.8812908992306927));
  }

  TEST_CASE("H = 1 is inconclusive") {
    CHECK(theorem1_check(constant_weights({0.5, 0.5})).status == Status::kInconclusive);
    CHECK(theorem1_check(constant_weights({0.25, 0.25, 0.25, 0.25})).status == Status::kInconclusive);
  }

  TEST_CASE("commensurate phases are decided per residue class") {
    mps::WeightSpectrum w;
    w.blocks = {{mps::WeightTerm{1.0, 0.0}},
                {mps::WeightTerm{1.0, std::numbers::pi / 3.0}, mps::WeightTerm{1.0, -std::numbers::pi / 3.0}}};
    const auto v = theorem1_check(w);
    CHECK(v.evidence["mode"] == "commensurate");
    CHECK(v.evidence["period"] == 6);
    CHECK(v.status == Status::kInconclusive);
    REQUIRE(v.residue_class.has_value());
    CHECK(v.residue_class->first == 6);
  }

  TEST_CASE("incommensurate phases use the N window") {
    mps::WeightSpectrum w;
    w.blocks = {{mps::WeightTerm{1.0, 0.0}},
                {mps::WeightTerm{1.0, std::sqrt(2.0)}, mps::WeightTerm{1.0, -std::sqrt(2.0)}}};
    const auto v = theorem1_check(w);
    CHECK(v.evidence["mode"] == "incommensurate");
    CHECK(v.evidence.contains("H_inf"));
    CHECK(v.evidence.contains("H_sup"));
  }
}

TEST_SUITE("rational ratios") {
  TEST_CASE("counterexample weights are excluded with ratio sqrt(3)") {
    const double t = counterexample_root();
    const auto w = counterexample_weights(t);
    const ExactWeight exact[4] = {ExactWeight::rational(1, 10), ExactWeight::root({1, 10}, {1, 3}, 4),
                                  ExactWeight::from_float(w[2]), ExactWeight::from_float(w[3])};
    const auto v = theorem2_check(exact);
    CHECK(v.status == Status::kExactSrnExcluded);
    CHECK(v.evidence["offending_ratio"] == "3^(1/2)");
    CHECK(v.evidence["offending_value"].get<double>() == doctest::Approx(std::sqrt(3.0)));
  }

  TEST_CASE("rational and float weights never exclude") {
    const ExactWeight r[2] = {ExactWeight::rational(1, 4), ExactWeight::rational(3, 4)};
    CHECK(theorem2_check(r).status == Status::kInconclusive);
    const ExactWeight f[2] = {ExactWeight::from_float(0.2), ExactWeight::from_float(std::sqrt(0.5) * 0.3)};
    CHECK(theorem2_check(f).status == Status::kInconclusive);
  }
}

TEST_SUITE("ghz") {
  TEST_CASE("classification") {
    CHECK(ghz_classify(ExactWeight::rational(1, 2)) == GhzLabel::kSrn);
    CHECK(ghz_classify(ExactWeight::rational(0, 1)) == GhzLabel::kStabilizer);
    CHECK(ghz_classify(ExactWeight::from_float(1.0)) == GhzLabel::kStabilizer);
    CHECK(ghz_classify(ExactWeight::from_float(0.3)) == GhzLabel::kLrn);
    CHECK(ghz_classify(ExactWeight::root({1, 2}, {1, 1}, 2)) == GhzLabel::kSrn);
    CHECK_THROWS_AS(ghz_classify(ExactWeight::from_float(1.5)), OutOfRange);
  }
}

TEST_SUITE("counterexample") {
  TEST_CASE("bisection agrees with an independent secant solve") {
    const double t = counterexample_root();
    CHECK(t == doctest::Approx(0.023).epsilon(0.05));
    CHECK(std::abs(t - secant_root()) < 1e-10);
    CHECK(std::abs(shannon_entropy(counterexample_weights(t)) - 1.0) < 1e-6);
  }
}

TEST_SUITE("typicality") {
  TEST_CASE("negative and decreasing for N = 20..40") {
    double prev = typicality_log_ratio(20);
    CHECK(prev < 0.0);
    for (int n = 21; n <= 40; ++n) {
      const double r = typicality_log_ratio(n);
      CHECK(r < 0.0);
      CHECK(r < prev);
      prev = r;
    }
    CHECK_THROWS_AS(typicality_log_ratio(1), OutOfRange);
  }
}
