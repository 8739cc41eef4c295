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


#include "lrn/cli/request.hpp"

#include <algorithm>
#include <iterator>

#include "lrn/errors.hpp"

namespace lrn::cli {

using nlohmann::json;

void AnalysisRequest::validate() const {
  if (std::find(std::begin(kPipelines), std::end(kPipelines), pipeline) == std::end(kPipelines)) {
    throw OutOfRange("unknown pipeline \"" + pipeline + "\"");
  }
  if (format != "json" && format != "csv") throw OutOfRange("format must be json or csv");
  if (jobs < 1) throw OutOfRange("--jobs must be at least 1");
  if (n_min && n_max && *n_min > *n_max) throw OutOfRange("--n-min exceeds --n-max");
  if (n_min && *n_min < 1) throw OutOfRange("--n-min must be positive");
  if (!(tol_int > 0.0 && tol_int < 0.5)) throw OutOfRange("--tol-int must lie in (0, 0.5)");
  if (qmax < 1) throw OutOfRange("--qmax must be positive");
  if ((pipeline == "analyze" || pipeline == "rg" || pipeline == "stab") && input.empty()) {
    throw OutOfRange(pipeline + " needs --input");
  }
  if (pipeline == "stab" && region.empty()) throw OutOfRange("stab needs --region");
  if (pipeline != "stab" && (!region.empty() || !region_b.empty())) {
    throw OutOfRange("--region applies to the stab pipeline only");
  }
  if (pipeline == "ghz" && !value && input.empty()) throw OutOfRange("ghz needs --value or --input");
  if (pipeline == "verify" && depth < 1) throw OutOfRange("--depth must be at least 1");
  if (value && pipeline != "ghz" && pipeline != "typicality" && pipeline != "verify") {
    throw OutOfRange("--value applies to ghz, typicality and verify only");
  }
}

json AnalysisRequest::to_json() const {
  json j = {{"pipeline", pipeline}, {"input", input},     {"format", format}, {"seed", seed},
            {"jobs", jobs},         {"depth", depth},     {"tol_int", tol_int}, {"qmax", qmax},
            {"region", region},     {"region_b", region_b}};
  j["n_min"] = n_min ? json(*n_min) : json(nullptr);
  j["n_max"] = n_max ? json(*n_max) : json(nullptr);
  j["value"] = value ? json(*value) : json(nullptr);
  return j;
}

AnalysisRequest AnalysisRequest::from_json(const json& j) {
  try {
    AnalysisRequest r;
    r.pipeline = j.at("pipeline").get<std::string>();
    r.input = j.value("input", "");
    r.format = j.value("format", "json");
    r.seed = j.value("seed", std::uint64_t{0});
    r.jobs = j.value("jobs", 1);
    r.depth = j.value("depth", 1);
    r.tol_int = j.value("tol_int", 1e-6);
    r.qmax = j.value("qmax", std::int64_t{1000000});
    r.region = j.value("region", std::vector<int>{});
    r.region_b = j.value("region_b", std::vector<int>{});
    if (j.contains("n_min") && !j["n_min"].is_null()) r.n_min = j["n_min"].get<long>();
    if (j.contains("n_max") && !j["n_max"].is_null()) r.n_max = j["n_max"].get<long>();
    if (j.contains("value") && !j["value"].is_null()) r.value = j["value"].get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad request: ") + e.what());
  }
}

}  // namespace lrn::cli
