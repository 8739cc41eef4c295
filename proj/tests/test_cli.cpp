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


#include <string>

#include <doctest.h>
#include <json.hpp>

#include "lrn/cli/pipelines.hpp"
#include "lrn/cli/request.hpp"
#include "lrn/errors.hpp"

using namespace lrn;
using namespace lrn::cli;

namespace {

std::string fixture(const std::string& name) { return std::string(LRN_FIXTURES) + "/" + name; }

AnalysisRequest analyze(const std::string& name) {
  AnalysisRequest r;
  r.pipeline = "analyze";
  r.input = fixture(name);
  r.n_min = 8;
  r.n_max = 8;
  return r;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("analyze exit codes") {
    CHECK(run(analyze("ghz_p03.json")).exit_code == kExitCertified);
    CHECK(run(analyze("ghz.json")).exit_code == kExitInconclusive);
    CHECK(run(analyze("product.json")).exit_code == kExitInconclusive);
    CHECK(run(analyze("chi3_pi3.json")).exit_code == kExitInconclusive);

    const auto r = run(analyze("counterexample.json"));
    CHECK(r.exit_code == kExitSrnExcluded);
    const auto j = nlohmann::json::parse(r.body);
    CHECK(j["verdicts"]["theorem2"]["evidence"]["offending_ratio"] == "3^(1/2)");
    CHECK(j["exit_code"] == kExitSrnExcluded);
  }

  TEST_CASE("ghz and stab pipelines") {
    AnalysisRequest g;
    g.pipeline = "ghz";
    g.value = "1/2";
    CHECK(run(g).exit_code == kExitInconclusive);
    g.value = "0.3";
    CHECK(run(g).exit_code == kExitCertified);

    AnalysisRequest s;
    s.pipeline = "stab";
    s.input = fixture("bell.tab");
    s.region = {0};
    s.region_b = {1};
    const auto j = nlohmann::json::parse(run(s).body);
    CHECK(j["entropy"] == 1);
    CHECK(j["mutual_information"] == 2);
  }

  TEST_CASE("verify reports corrupted tableaux") {
    AnalysisRequest v;
    v.pipeline = "verify";
    v.input = fixture("corrupted.tab");
    const auto r = run(v);
    CHECK(r.exit_code == kExitError);
    CHECK(r.body.find("DependentGenerators") != std::string::npos);
  }

  TEST_CASE("reports replay byte for byte") {
    AnalysisRequest t;
    t.pipeline = "typicality";
    t.value = "30";
    for (const char* format : {"json", "csv"}) {
      t.format = format;
      const auto first = run(t);
      const auto again = replay(first.body);
      CHECK(again.identical);
      CHECK(again.report.exit_code == first.exit_code);
    }
    AnalysisRequest rg;
    rg.pipeline = "rg";
    rg.input = fixture("random_normal_chi2.json");
    rg.format = "csv";
    CHECK(replay(run(rg).body).identical);
    CHECK(request_from_report(run(rg).body).input == rg.input);
    CHECK_THROWS_AS(request_from_report("not a report"), ParseError);
  }

  TEST_CASE("request round trip") {
    AnalysisRequest r = analyze("ghz.json");
    r.seed = 42;
    r.tol_int = 1e-5;
    const auto back = AnalysisRequest::from_json(r.to_json());
    CHECK(back.to_json() == r.to_json());
  }

  TEST_CASE("invalid requests are rejected") {
    AnalysisRequest r;
    r.pipeline = "nope";
    CHECK_THROWS_AS(r.validate(), OutOfRange);
    r = analyze("ghz.json");
    r.format = "xml";
    CHECK_THROWS_AS(r.validate(), OutOfRange);
    r = analyze("ghz.json");
    r.n_min = 9;
    CHECK_THROWS_AS(r.validate(), OutOfRange);
    r = analyze("ghz.json");
    r.value = "1";
    CHECK_THROWS_AS(r.validate(), OutOfRange);
    r.pipeline = "stab";
    r.value.reset();
    CHECK_THROWS_AS(r.validate(), OutOfRange);
  }
}
