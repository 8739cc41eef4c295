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
#include <vector>

#include <json.hpp>

namespace lrn::cli {

/// One invocation of a pipeline. The output path is not part of the
/// serialized request, so a report replays identically wherever it was
/// written.
struct AnalysisRequest {
  std::string pipeline;
  std::string input;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 0;
  int jobs = 1;
  std::optional<long> n_min;
  std::optional<long> n_max;
  int depth = 1;
  double tol_int = 1e-6;
  std::int64_t qmax = 1000000;
  std::vector<int> region;
  std::vector<int> region_b;
  std::optional<std::string> value;

  /// Throws OutOfRange when an option does not fit the pipeline.
  void validate() const;

  nlohmann::json to_json() const;
  /// Throws ParseError.
  static AnalysisRequest from_json(const nlohmann::json& j);
};

inline constexpr const char* kPipelines[] = {"analyze", "rg", "verify", "stab", "ghz", "typicality"};

}  // namespace lrn::cli
