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

#include "lrn/criteria/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "lrn/errors.hpp"

namespace lrn::criteria {

using nlohmann::json;

const char* to_string(Status s) {
  switch (s) {
    case Status::kLrnCertified: return "LRN_CERTIFIED";
    case Status::kExactSrnExcluded: return "EXACT_SRN_EXCLUDED";
    case Status::kInconclusive: return "INCONCLUSIVE";
  }
  return "UNKNOWN";
}

const char* to_string(GhzLabel l) {
  switch (l) {
    case GhzLabel::kStabilizer: return "STABILIZER";
    case GhzLabel::kSrn: return "SRN";
    case GhzLabel::kLrn: return "LRN";
  }
  return "UNKNOWN";
}

double shannon_entropy(std::span<const double> p) {
  double sum = 0.0;
  for (double x : p) {
    if (!(x >= 0.0 && x <= 1.0)) throw NotNormalized("entry " + std::to_string(x) + " outside [0, 1]");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw NotNormalized("entries sum to " + std::to_string(sum));
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

namespace {

double integer_distance(double h) { return std::abs(h - std::round(h)); }

}  // namespace

Verdict theorem1_check(const mps::WeightSpectrum& w, const Theorem1Options& opts) {
  Verdict v;
  // Commensurability of every phase.
  std::int64_t period = 1;
  bool commensurate = true;
  json phases = json::array();
  for (const auto& block : w.blocks) {
    for (const auto& t : block) {
      const auto r = rationality_test(t.phase / (2.0 * std::numbers::pi), opts.phase_qmax, opts.phase_tau);
      if (!r) {
        commensurate = false;
        phases.push_back({{"phase", t.phase}, {"rational", false}});
        continue;
      }
      phases.push_back({{"phase", t.phase}, {"rational", true}, {"over_two_pi", r->str()}});
      period = std::lcm(period, r->q);
      if (period > 1000000) commensurate = false;
    }
  }
  v.evidence["phases"] = phases;

  if (commensurate) {
    json classes = json::array();
    double min_dist = std::numeric_limits<double>::infinity();
    std::optional<std::pair<long, long>> certifying;
    for (std::int64_t r = 0; r < period; ++r) {
      const long n = r == 0 ? period : r;
      std::vector<double> p;
      try {
        p = mps::evaluate_weights(w, n);
      } catch (const DegenerateNormalization&) {
        classes.push_back({{"residue", r}, {"N", n}, {"vanishing", true}});
        continue;
      }
      const double h = shannon_entropy(p);
      const double dist = integer_distance(h);
      classes.push_back({{"residue", r}, {"N", n}, {"H", h}, {"distance", dist}});
      min_dist = std::min(min_dist, dist);
      if (dist > opts.tau_int && !certifying) certifying = std::make_pair(static_cast<long>(period), static_cast<long>(r));
    }
    if (!std::isfinite(min_dist)) throw DegenerateNormalization("weights vanish on every residue class");
    v.evidence["mode"] = "commensurate";
    v.evidence["period"] = period;
    v.evidence["classes"] = classes;
    v.evidence["min_distance"] = min_dist;
    v.evidence["tau_int"] = opts.tau_int;
    if (min_dist > opts.tau_int) {
      v.status = Status::kLrnCertified;
    } else if (certifying) {
      v.residue_class = certifying;
    }
    return v;
  }

  double h_inf = std::numeric_limits<double>::infinity();
  double h_sup = -h_inf;
  double min_dist = h_inf;
  for (long n = opts.n_min; n <= opts.n_max; ++n) {
    const double h = shannon_entropy(mps::evaluate_weights(w, n));
    h_inf = std::min(h_inf, h);
    h_sup = std::max(h_sup, h);
    min_dist = std::min(min_dist, integer_distance(h));
  }
  v.evidence["mode"] = "incommensurate";
  v.evidence["window"] = {opts.n_min, opts.n_max};
  v.evidence["H_inf"] = h_inf;
  v.evidence["H_sup"] = h_sup;
  v.evidence["min_distance"] = min_dist;
  v.evidence["tau_int"] = opts.tau_int;
  if (min_dist > opts.tau_int) v.status = Status::kLrnCertified;
  return v;
}

namespace {

bool mul(std::int64_t a, std::int64_t b, std::int64_t& out) { return !__builtin_mul_overflow(a, b, &out); }

bool ipow(std::int64_t base, int e, std::int64_t& out) {
  out = 1;
  for (int k = 0; k < e; ++k) {
    if (!mul(out, base, out)) return false;
  }
  return true;
}

// Exact k-th root of x >= 0 when it exists.
std::optional<std::int64_t> iroot(std::int64_t x, int k) {
  if (x < 2 || k == 1) return x;
  const auto guess = static_cast<std::int64_t>(std::llround(std::pow(static_cast<double>(x), 1.0 / k)));
  for (std::int64_t r = std::max<std::int64_t>(0, guess - 1); r <= guess + 1; ++r) {
    std::int64_t p = 0;
    if (ipow(r, k, p) && p == x) return r;
  }
  return std::nullopt;
}

struct SymbolicRatio {
  Rational coeff;  // R
  Rational radicand;  // c'
  int index = 1;   // L'
  bool rational() const { return index == 1 || radicand.p == radicand.q; }
  std::string str() const {
    if (rational()) {
      std::int64_t p = 0, q = 0;
      if (mul(coeff.p, radicand.p, p) && mul(coeff.q, radicand.q, q)) return make_rational(p, q).str();
      return coeff.str() + "*" + radicand.str();
    }
    const std::string root = (radicand.q == 1 ? radicand.str() : "(" + radicand.str() + ")") + "^(1/" +
                             std::to_string(index) + ")";
    if (coeff.p == coeff.q) return root;
    return coeff.str() + "*" + root;
  }
};

// (w_i / w_j)^2 for two nonzero exact weights r (p/q)^(1/n); nullopt on overflow.
std::optional<SymbolicRatio> symbolic_ratio(const ExactWeight& a, const ExactWeight& b) {
  const Rational& ra = a.coefficient();
  const Rational& rb = b.coefficient();
  std::int64_t num = 0, den = 0;
  if (!mul(ra.p, rb.q, num) || !mul(ra.q, rb.p, den)) return std::nullopt;
  Rational r = make_rational(num, den);
  if (!mul(r.p, r.p, num) || !mul(r.q, r.q, den)) return std::nullopt;
  const Rational coeff = make_rational(num, den);

  const int l = std::lcm(a.index(), b.index());
  const int ea = 2 * l / a.index();
  const int eb = 2 * l / b.index();
  std::int64_t ap = 0, aq = 0, bp = 0, bq = 0;
  if (!ipow(a.base().p, ea, ap) || !ipow(a.base().q, ea, aq) || !ipow(b.base().p, eb, bp) ||
      !ipow(b.base().q, eb, bq)) {
    return std::nullopt;
  }
  if (!mul(ap, bq, num) || !mul(aq, bp, den)) return std::nullopt;
  const Rational c = make_rational(num, den);

  for (int k = l; k >= 1; --k) {
    if (l % k != 0) continue;
    const auto p = iroot(c.p, k);
    const auto q = iroot(c.q, k);
    if (p && q) return SymbolicRatio{coeff, make_rational(*p, *q), l / k};
  }
  return SymbolicRatio{coeff, c, l};
}

}  // namespace

Verdict theorem2_check(std::span<const ExactWeight> weights, const Theorem2Options& opts) {
  Verdict v;
  json pairs = json::array();
  bool excluded = false;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t j = i + 1; j < weights.size(); ++j) {
      const auto& a = weights[i];
      const auto& b = weights[j];
      if (a.is_zero() || b.is_zero()) continue;
      json entry = {{"i", i}, {"j", j}};
      std::optional<SymbolicRatio> s;
      if (a.exact() && b.exact()) s = symbolic_ratio(a, b);
      if (s) {
        entry["path"] = "symbolic";
        entry["ratio"] = s->str();
        entry["value"] = s->coeff.value() * std::pow(s->radicand.value(), 1.0 / s->index);
        entry["rational"] = s->rational();
        if (!s->rational()) {
          excluded = true;
          if (!v.evidence.contains("offending_ratio")) {
            v.evidence["offending_ratio"] = entry["ratio"];
            v.evidence["offending_value"] = entry["value"];
            v.evidence["offending_pair"] = {i, j};
          }
        }
      } else {
        const double x = std::pow(a.value() / b.value(), 2);
        const auto r = rationality_test(x, opts.q_max, opts.tau_rat);
        entry["path"] = "heuristic";
        entry["value"] = x;
        entry["rational"] = r.has_value();
        if (r) entry["ratio"] = r->str();
      }
      pairs.push_back(std::move(entry));
    }
  }
  v.evidence["pairs"] = pairs;
  if (weights.size() < 2) v.evidence["note"] = "fewer than two blocks";
  v.status = excluded ? Status::kExactSrnExcluded : Status::kInconclusive;
  return v;
}

namespace {

// r * b^(1/n) == t for rational t >= 0, decided exactly; nullopt on overflow.
std::optional<bool> root_equals(const ExactWeight& w, Rational t) {
  const Rational& r = w.coefficient();
  if (r.p == 0 || w.base().p == 0) return t.p == 0;
  if (t.p == 0) return false;
  // b == (t / r)^n
  std::int64_t num = 0, den = 0;
  if (!mul(t.p, r.q, num) || !mul(t.q, r.p, den)) return std::nullopt;
  const Rational x = make_rational(num, den);
  if (x.p < 0) return false;
  std::int64_t xp = 0, xq = 0;
  if (!ipow(x.p, w.index(), xp) || !ipow(x.q, w.index(), xq)) return std::nullopt;
  return make_rational(xp, xq) == w.base();
}

}  // namespace

GhzLabel ghz_classify(const ExactWeight& alpha_sq) {
  const double x = alpha_sq.value();
  if (!(x >= -1e-15 && x <= 1.0 + 1e-15)) throw OutOfRange("|alpha|^2 = " + alpha_sq.str() + " outside [0, 1]");
  auto equals = [&](Rational t) {
    if (alpha_sq.exact()) {
      if (auto e = root_equals(alpha_sq, t)) return *e;
    }
    return std::abs(x - t.value()) <= 1e-15;
  };
  if (equals({0, 1}) || equals({1, 1})) return GhzLabel::kStabilizer;
  if (equals({1, 2})) return GhzLabel::kSrn;
  return GhzLabel::kLrn;
}

double typicality_log_ratio(int n, const TypicalityParams& params) {
  if (n < 2) throw OutOfRange("typicality needs N >= 2");
  const double nn = static_cast<double>(n);
  const double eps = params.eps0 / std::pow(nn, params.alpha);
  const double depth = std::pow(std::ceil(std::log2(nn)), 2.0);
  const double ln_b = (1.0 - eps * eps) * std::ldexp(1.0, n - 1);
  const double ln_s = 0.5 * nn * nn * std::numbers::ln2;
  const double ln_c =
      std::log(static_cast<double>(params.n_g)) * nn * depth * std::pow(std::log(nn * depth / eps), params.polylog_exponent);
  return ln_c + ln_s - ln_b;
}

std::vector<double> counterexample_weights(double t) {
  const double a1 = 0.1;
  const double a2 = std::pow(3.0, -0.25) / 10.0;
  return {a1, a2, t, 1.0 - t - a1 - a2};
}

double counterexample_root(double tol) {
  auto f = [](double t) { return shannon_entropy(counterexample_weights(t)) - 1.0; };
  double lo = 1e-12, hi = 0.1;
  if (f(lo) * f(hi) > 0.0) throw OutOfRange("no sign change of H - 1 on (0, 0.1)");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (f(lo) * f(mid) <= 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace lrn::criteria
