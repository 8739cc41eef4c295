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

#include "lrn/mps/io.hpp"

#include <fstream>

#include "lrn/errors.hpp"

namespace lrn::mps {

using nlohmann::json;

namespace {

cplx entry(const json& e, int i, int r, int c) {
  auto where = [&] {
    return "matrices[" + std::to_string(i) + "][" + std::to_string(r) + "][" + std::to_string(c) + "]";
  };
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    throw ParseError(where() + " must be [re, im]");
  }
  return {e[0].get<double>(), e[1].get<double>()};
}

}  // namespace

TensorInput tensor_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("tensor file must be a JSON object");
  for (const char* key : {"d", "chi", "matrices"}) {
    if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  }
  if (!j["d"].is_number_integer() || !j["chi"].is_number_integer()) {
    throw ParseError("\"d\" and \"chi\" must be integers");
  }
  const int d = j["d"].get<int>();
  const int chi = j["chi"].get<int>();
  if (d < 1 || chi < 1) throw InvalidTensor("d and chi must be >= 1");
  const json& mats = j["matrices"];
  if (!mats.is_array() || static_cast<int>(mats.size()) != d) {
    throw InvalidTensor("\"matrices\" must hold d=" + std::to_string(d) + " matrices");
  }
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(d);
  for (int i = 0; i < d; ++i) {
    const json& m = mats[i];
    if (!m.is_array() || static_cast<int>(m.size()) != chi) {
      throw InvalidTensor("matrix " + std::to_string(i) + " must have chi rows");
    }
    Eigen::MatrixXcd a(chi, chi);
    for (int r = 0; r < chi; ++r) {
      if (!m[r].is_array() || static_cast<int>(m[r].size()) != chi) {
        throw InvalidTensor("matrix " + std::to_string(i) + " row " + std::to_string(r) + " must have chi entries");
      }
      for (int c = 0; c < chi; ++c) a(r, c) = entry(m[r][c], i, r, c);
    }
    out.push_back(std::move(a));
  }
  TensorInput in{MpsTensor(std::move(out)), std::nullopt};
  if (j.contains("exact_weights")) in.exact_weights = j["exact_weights"];
  return in;
}

TensorInput load_tensor(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return tensor_from_json(j);
}

json tensor_to_json(const MpsTensor& a) {
  json mats = json::array();
  for (const auto& m : a.matrices()) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  return {{"d", a.physical_dim()}, {"chi", a.bond_dim()}, {"matrices", std::move(mats)}};
}

}  // namespace lrn::mps
