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


// lrn-detect: batch front end for the analysis pipelines.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lrn/cli/pipelines.hpp"
#include "lrn/errors.hpp"

namespace {

int emit(const lrn::cli::Report& r, const std::string& out) {
  if (out.empty()) {
    std::cout << r.body;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out << "\n";
      return lrn::cli::kExitError;
    }
    f << r.body;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Long-range nonstabilizerness detection for translation-invariant MPS"};
  lrn::cli::AnalysisRequest req;
  std::string replay_path;
  long n_min = 0, n_max = 0;
  std::string value;

  app.add_option("--input", req.input, "Tensor JSON, exact-weight JSON or tableau file");
  app.add_option("--pipeline", req.pipeline, "analyze | rg | verify | stab | ghz | typicality");
  app.add_option("--out", req.out, "Report path (default: stdout)");
  app.add_option("--format", req.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", req.seed, "Seed for every random draw");
  app.add_option("--jobs", req.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  auto* o_min = app.add_option("--n-min", n_min, "Lower end of the N window");
  auto* o_max = app.add_option("--n-max", n_max, "Upper end of the N window");
  app.add_option("--depth", req.depth, "Circuit depth for verify");
  app.add_option("--tol-int", req.tol_int, "Integer-gap tolerance");
  app.add_option("--qmax", req.qmax, "Denominator bound for rationality tests");
  app.add_option("--region", req.region, "Qubits of region A (stab)")->delimiter(',');
  app.add_option("--region-b", req.region_b, "Qubits of region B (stab)")->delimiter(',');
  auto* o_value = app.add_option("--value", value, "|alpha|^2 for ghz, N for typicality, cases for verify");
  app.add_option("--replay", replay_path, "Rerun the request embedded in a report and compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : lrn::cli::kExitError;
  }
  if (o_min->count() > 0) req.n_min = n_min;
  if (o_max->count() > 0) req.n_max = n_max;
  if (o_value->count() > 0) req.value = value;

  try {
    if (!replay_path.empty()) {
      std::ifstream in(replay_path, std::ios::binary);
      if (!in) throw lrn::ParseError("cannot open " + replay_path);
      std::stringstream ss;
      ss << in.rdbuf();
      const auto r = lrn::cli::replay(ss.str());
      if (!r.identical) {
        std::cerr << "replay: regenerated report differs from " << replay_path << "\n";
        return lrn::cli::kExitError;
      }
      std::cerr << "replay: identical\n";
      return r.report.exit_code;
    }
    if (req.pipeline.empty()) {
      std::cerr << "error: --pipeline is required\n";
      return lrn::cli::kExitError;
    }
    return emit(lrn::cli::run(req), req.out);
  } catch (const lrn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return lrn::cli::kExitError;
}
