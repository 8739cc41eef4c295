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

#include "lrn/cli/request.hpp"

namespace lrn::cli {

/// Exit codes: 0 LRN_CERTIFIED, 2 EXACT_SRN_EXCLUDED only, 3 INCONCLUSIVE,
/// 1 error or failed suite.
inline constexpr int kExitCertified = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitSrnExcluded = 2;
inline constexpr int kExitInconclusive = 3;

struct Report {
  int exit_code = kExitError;
  std::string body;  // formatted per the request, newline terminated
};

Report cmd_analyze(const AnalysisRequest& req);
Report cmd_rg(const AnalysisRequest& req);
Report cmd_verify(const AnalysisRequest& req);
Report cmd_stab(const AnalysisRequest& req);
Report cmd_ghz(const AnalysisRequest& req);
Report cmd_typicality(const AnalysisRequest& req);

/// Validates and dispatches on req.pipeline.
Report run(const AnalysisRequest& req);

/// Recovers the request embedded in a JSON report or in the leading
/// "# request: " line of a CSV report. Throws ParseError.
AnalysisRequest request_from_report(const std::string& body);

/// Reruns the request embedded in `body`; `identical` tells whether the new
/// report matches byte for byte.
struct ReplayResult {
  Report report;
  bool identical = false;
};

ReplayResult replay(const std::string& body);

}  // namespace lrn::cli
