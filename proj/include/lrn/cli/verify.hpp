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
#include <string>
#include <vector>

#include <json.hpp>

namespace lrn::cli {

/// Result of one dense-oracle suite. Each failure carries the parameters
/// needed to rerun that single case.
struct SuiteResult {
  std::string name;
  int cases = 0;
  std::vector<nlohmann::json> failures;

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int seeds = 4;  // cases per suite
  int depth = 1;
  int jobs = 1;
};

SuiteResult verify_invariance(const VerifyOptions& o);
SuiteResult verify_causal_cone(const VerifyOptions& o);
SuiteResult verify_stabilizer_oracle(const VerifyOptions& o);
SuiteResult verify_fannes(const VerifyOptions& o);
/// Parses a tableau file; any library error becomes a failure.
SuiteResult verify_tableau_file(const std::string& path);

std::vector<SuiteResult> verify_default(const VerifyOptions& o);

}  // namespace lrn::cli
