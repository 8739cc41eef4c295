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


#include "lrn/cli/pipelines.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lrn/cli/cache.hpp"
#include "lrn/cli/verify.hpp"
#include "lrn/criteria/exact_weight.hpp"
#include "lrn/criteria/theorems.hpp"
#include "lrn/dense/density.hpp"
#include "lrn/errors.hpp"
#include "lrn/mps/canonical.hpp"
#include "lrn/mps/io.hpp"
#include "lrn/mps/rg.hpp"
#include "lrn/stabilizer/tableau.hpp"

namespace lrn::cli {

using nlohmann::json;

namespace {

constexpr long kDefaultNMin = 1000;
constexpr long kDefaultNMax = 2000;
constexpr long kTypicalityNMin = 20;
constexpr long kTypicalityNMax = 40;
constexpr int kDefaultVerifyCases = 4;

json pair(cplx z) { return json::array({z.real(), z.imag()}); }

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// JSON reports embed the request; CSV reports carry it on the first line.
Report finish(const AnalysisRequest& req, int exit_code, json body, const std::string& csv) {
  Report r;
  r.exit_code = exit_code;
  if (req.format == "csv") {
    r.body = "# request: " + req.to_json().dump() + "\n" + csv;
  } else {
    body["request"] = req.to_json();
    body["exit_code"] = exit_code;
    r.body = body.dump(2) + "\n";
  }
  return r;
}

std::string kv_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::string s = "quantity,value\n";
  for (const auto& [k, v] : rows) s += k + "," + v + "\n";
  return s;
}

json verdict_json(const criteria::Verdict& v) {
  json j = {{"status", criteria::to_string(v.status)}, {"evidence", v.evidence}};
  j["residue_class"] = v.residue_class ? json::array({v.residue_class->first, v.residue_class->second}) : json(nullptr);
  return j;
}

json weights_json(const mps::WeightSpectrum& w) {
  json out = json::array();
  for (const auto& block : w.blocks) {
    json terms = json::array();
    for (const auto& t : block) terms.push_back({{"c", pair(t.c)}, {"phase", t.phase}});
    out.push_back(terms);
  }
  return out;
}

criteria::ExactWeight parse_value(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      return criteria::ExactWeight::rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
    std::size_t used = 0;
    const double x = std::stod(s, &used);
    if (used != s.size()) throw ParseError("trailing characters in \"" + s + "\"");
    return criteria::ExactWeight::from_float(x);
  } catch (const std::logic_error&) {
    throw ParseError("cannot read a weight from \"" + s + "\"");
  }
}

}  // namespace

Report cmd_analyze(const AnalysisRequest& req) {
  const mps::TensorInput in = mps::load_tensor(req.input);
  const json spectral = spectral_summary(in.tensor);
  const mps::CanonicalForm cf = mps::canonical_decompose(in.tensor);
  const mps::FixedPointState fp = mps::rg_fixed_point(in.tensor);

  mps::WeightSpectrum weights = cf.weights;
  std::vector<criteria::ExactWeight> exact;
  if (in.exact_weights) {
    if (!in.exact_weights->is_array()) throw InvalidWeight("exact_weights must be an array");
    for (const auto& w : *in.exact_weights) exact.push_back(criteria::exact_weight_from_json(w));
    if (exact.size() != cf.representatives.size()) {
      throw InvalidWeight(std::to_string(exact.size()) + " exact weights for " +
                          std::to_string(cf.representatives.size()) + " classes");
    }
    weights.blocks.clear();
    for (const auto& w : exact) {
      if (w.value() < 0.0) throw InvalidWeight("negative weight " + w.str());
      weights.blocks.push_back({mps::WeightTerm{cplx(std::sqrt(w.value()), 0.0), 0.0}});
    }
  }

  criteria::Theorem1Options t1;
  t1.n_min = req.n_min.value_or(kDefaultNMin);
  t1.n_max = req.n_max.value_or(kDefaultNMax);
  t1.tau_int = req.tol_int;
  const criteria::Verdict v1 = criteria::theorem1_check(weights, t1);
  std::optional<criteria::Verdict> v2;
  if (!exact.empty()) {
    criteria::Theorem2Options t2;
    t2.q_max = req.qmax;
    v2 = criteria::theorem2_check(exact, t2);
  }

  int code = kExitInconclusive;
  criteria::Status status = criteria::Status::kInconclusive;
  if (v1.status == criteria::Status::kLrnCertified) {
    code = kExitCertified;
    status = v1.status;
  } else if (v2 && v2->status == criteria::Status::kExactSrnExcluded) {
    code = kExitSrnExcluded;
    status = v2->status;
  }
  const double h = criteria::shannon_entropy(mps::evaluate_weights(weights, t1.n_min));

  json blocks = json::array();
  for (std::size_t k = 0; k < cf.blocks.size(); ++k) {
    const auto& b = cf.blocks[k];
    blocks.push_back({{"mu", pair(b.mu)},
                      {"bond_dim", b.tensor.bond_dim()},
                      {"dominant", b.dominant},
                      {"class", cf.class_of[k]},
                      {"leading_index", b.leading_index}});
  }
  json schmidt = json::array();
  for (const auto& b : fp.blocks) schmidt.push_back(b.schmidt);

  json body;
  body["status"] = criteria::to_string(status);
  body["canonical_form"] = {{"blocking", cf.blocking},
                            {"residual", cf.residual},
                            {"classes", cf.representatives.size()},
                            {"blocks", blocks}};
  body["spectral"] = spectral;
  body["fixed_point"] = {{"rg_steps", fp.steps}, {"last_lambda2", fp.last_lambda2}, {"schmidt", schmidt}};
  body["weight_spectrum"] = weights_json(weights);
  body["H"] = h;
  body["verdicts"]["theorem1"] = verdict_json(v1);
  if (v2) {
    body["verdicts"]["theorem2"] = verdict_json(*v2);
    json ex = json::array();
    for (const auto& w : exact) ex.push_back(w.str());
    body["exact_weights"] = ex;
  }

  std::vector<std::pair<std::string, std::string>> rows = {
      {"status", criteria::to_string(status)},
      {"theorem1", criteria::to_string(v1.status)},
      {"theorem2", v2 ? criteria::to_string(v2->status) : "n/a"},
      {"H", num(h)},
      {"min_distance", num(v1.evidence.value("min_distance", 0.0))},
      {"blocking", std::to_string(cf.blocking)},
      {"classes", std::to_string(cf.representatives.size())},
      {"rg_steps", std::to_string(fp.steps)}};
  if (v2 && v2->evidence.contains("offending_ratio")) {
    rows.emplace_back("offending_ratio", v2->evidence["offending_ratio"].get<std::string>());
  }
  return finish(req, code, std::move(body), kv_csv(rows));
}

Report cmd_rg(const AnalysisRequest& req) {
  const mps::TensorInput in = mps::load_tensor(req.input);
  const mps::FixedPointState fp = mps::rg_fixed_point(in.tensor);
  json trace = json::array();
  std::string csv;
  json schmidt = json::array();
  for (const auto& b : fp.blocks) schmidt.push_back(b.schmidt);
  const json summary = {{"steps", fp.steps},
                        {"blocking", fp.blocking},
                        {"classes", fp.blocks.size()},
                        {"last_lambda2", fp.last_lambda2},
                        {"multi_block", fp.blocks.size() > 1},
                        {"schmidt", schmidt}};
  csv += "# fixed_point: " + summary.dump() + "\n";
  csv += "step,block,abs_lambda2,d_eff,multi_block\n";
  for (const auto& row : fp.trace) {
    trace.push_back({{"step", row.step},
                     {"block", row.block},
                     {"abs_lambda2", row.abs_lambda2},
                     {"d_eff", row.d_eff},
                     {"multi_block", row.multi_block}});
    csv += std::to_string(row.step) + "," + std::to_string(row.block) + "," + num(row.abs_lambda2) + "," +
           std::to_string(row.d_eff) + "," + (row.multi_block ? "1" : "0") + "\n";
  }
  json body = {{"trace", trace}, {"fixed_point", summary}};
  return finish(req, kExitCertified, std::move(body), csv);
}

Report cmd_verify(const AnalysisRequest& req) {
  VerifyOptions o;
  o.seed = req.seed;
  o.depth = req.depth;
  o.jobs = req.jobs;
  o.seeds = req.value ? std::stoi(*req.value) : kDefaultVerifyCases;
  if (o.seeds < 1) throw OutOfRange("verify needs at least one case per suite");
  std::vector<SuiteResult> suites;
  if (!req.input.empty()) {
    suites.push_back(verify_tableau_file(req.input));
  } else {
    suites = verify_default(o);
  }
  bool ok = true;
  json arr = json::array();
  std::string csv = "suite,cases,passed,failures\n";
  for (auto& s : suites) {
    ok = ok && s.passed();
    for (auto& f : s.failures) {
      if (f.contains("seed")) {
        AnalysisRequest again = req;
        again.seed = f["seed"].get<std::uint64_t>();
        again.value = "1";
        f["replay"] = again.to_json();
      }
    }
    arr.push_back(s.to_json());
    csv += s.name + "," + std::to_string(s.cases) + "," + (s.passed() ? "1" : "0") + "," +
           std::to_string(s.failures.size()) + "\n";
  }
  json body = {{"suites", arr}, {"passed", ok}};
  return finish(req, ok ? kExitCertified : kExitError, std::move(body), csv);
}

Report cmd_stab(const AnalysisRequest& req) {
  const auto t = stabilizer::StabilizerTableau::parse(read_file(req.input));
  const int s = stabilizer::entropy(t, req.region);
  json body = {{"n_qubits", t.num_qubits()}, {"region", req.region}, {"entropy", s}};
  json gens = json::array();
  const auto canonical = t.canonicalized();
  for (const auto& g : canonical.generators()) gens.push_back(g.str());
  body["canonical_generators"] = gens;
  std::vector<std::pair<std::string, std::string>> rows = {{"n_qubits", std::to_string(t.num_qubits())},
                                                           {"entropy", std::to_string(s)}};
  if (!req.region_b.empty()) {
    const int i = stabilizer::mutual_information(t, req.region, req.region_b);
    body["region_b"] = req.region_b;
    body["mutual_information"] = i;
    rows.emplace_back("mutual_information", std::to_string(i));
  }
  return finish(req, kExitCertified, std::move(body), kv_csv(rows));
}

Report cmd_ghz(const AnalysisRequest& req) {
  const criteria::ExactWeight w = req.value ? parse_value(*req.value)
                                            : criteria::exact_weight_from_json(json::parse(read_file(req.input)));
  const criteria::GhzLabel label = criteria::ghz_classify(w);
  const double p = w.value();
  mps::WeightSpectrum weights;
  weights.blocks = {{mps::WeightTerm{cplx(std::sqrt(p), 0.0), 0.0}}, {mps::WeightTerm{cplx(std::sqrt(1.0 - p), 0.0), 0.0}}};
  criteria::Theorem1Options t1;
  t1.tau_int = req.tol_int;
  const criteria::Verdict v = criteria::theorem1_check(weights, t1);
  const int code = label == criteria::GhzLabel::kLrn ? kExitCertified : kExitInconclusive;
  json body = {{"alpha_sq", criteria::to_json(w)},
               {"label", criteria::to_string(label)},
               {"H", dense::binary_entropy(p)},
               {"theorem1", verdict_json(v)}};
  return finish(req, code, std::move(body),
                kv_csv({{"alpha_sq", w.str()},
                        {"label", criteria::to_string(label)},
                        {"H", num(dense::binary_entropy(p))},
                        {"theorem1", criteria::to_string(v.status)}}));
}

Report cmd_typicality(const AnalysisRequest& req) {
  long lo = req.n_min.value_or(kTypicalityNMin), hi = req.n_max.value_or(kTypicalityNMax);
  if (req.value) lo = hi = std::stol(*req.value);
  if (lo < 2) throw OutOfRange("typicality needs N >= 2");
  json rows = json::array();
  std::string csv = "N,log_ratio\n";
  for (long n = lo; n <= hi; ++n) {
    const double r = criteria::typicality_log_ratio(static_cast<int>(n));
    rows.push_back({{"N", n}, {"log_ratio", r}});
    csv += std::to_string(n) + "," + num(r) + "\n";
  }
  const criteria::TypicalityParams p;
  json body = {{"params",
                {{"eps0", p.eps0}, {"alpha", p.alpha}, {"n_g", p.n_g}, {"polylog_exponent", p.polylog_exponent}}},
               {"rows", rows}};
  return finish(req, kExitCertified, std::move(body), csv);
}

Report run(const AnalysisRequest& req) {
  req.validate();
  if (req.pipeline == "analyze") return cmd_analyze(req);
  if (req.pipeline == "rg") return cmd_rg(req);
  if (req.pipeline == "verify") return cmd_verify(req);
  if (req.pipeline == "stab") return cmd_stab(req);
  if (req.pipeline == "ghz") return cmd_ghz(req);
  return cmd_typicality(req);
}

AnalysisRequest request_from_report(const std::string& body) {
  static constexpr std::string_view kPrefix = "# request: ";
  if (body.starts_with(kPrefix)) {
    const auto eol = body.find('\n');
    const json j = json::parse(body.substr(kPrefix.size(), eol - kPrefix.size()), nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed request line");
    return AnalysisRequest::from_json(j);
  }
  const json j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("request")) {
    throw ParseError("report carries no request");
  }
  return AnalysisRequest::from_json(j["request"]);
}

ReplayResult replay(const std::string& body) {
  ReplayResult r;
  r.report = run(request_from_report(body));
  r.identical = r.report.body == body;
  return r;
}

}  // namespace lrn::cli
