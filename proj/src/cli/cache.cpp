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


#include "lrn/cli/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lrn/errors.hpp"
#include "lrn/mps/io.hpp"

namespace lrn::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kKeptEigenvalues = 16;

json pair(cplx z) { return json::array({z.real(), z.imag()}); }

json compute_summary(const mps::MpsTensor& a) {
  json j;
  try {
    const auto s = mps::spectral(mps::transfer_matrix(a));
    const auto xi = mps::correlation_length(s);
    j["spectral_radius"] = s.spectral_radius;
    j["peripheral"] = json::array();
    for (cplx z : s.peripheral) j["peripheral"].push_back(pair(z));
    j["eigenvalues"] = json::array();
    for (std::size_t k = 0; k < s.eigenvalues.size() && k < kKeptEigenvalues; ++k) {
      j["eigenvalues"].push_back(pair(s.eigenvalues[k]));
    }
    j["abs_lambda2"] = xi.abs_lambda2;
    j["multi_block"] = xi.multi_block;
  } catch (const Error& e) {
    j = {{"error", e.kind()}, {"message", e.what()}};
  }
  return j;
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<std::string> cache_dir() {
  const char* dir = std::getenv("LRN_DETECT_CACHE");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::string(dir);
}

json spectral_summary(const mps::MpsTensor& a) {
  const auto dir = cache_dir();
  if (!dir) return compute_summary(a);

  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json",
                static_cast<unsigned long long>(fnv1a(mps::tensor_to_json(a).dump())));
  const std::filesystem::path path = std::filesystem::path(*dir) / name;
  if (std::ifstream in(path); in) {
    std::stringstream ss;
    ss << in.rdbuf();
    json cached = json::parse(ss.str(), nullptr, false);
    if (!cached.is_discarded()) return cached;
  }
  json j = compute_summary(a);
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  if (std::ofstream out(path); out) out << j.dump() << '\n';
  return j;
}

}  // namespace lrn::cli
