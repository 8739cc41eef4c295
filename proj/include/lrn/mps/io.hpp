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

#include <optional>
#include <string>

#include <json.hpp>

#include "lrn/mps/tensor.hpp"

namespace lrn::mps {

/// Parsed tensor file: {"d", "chi", "matrices"[i][row][col] = [re, im]} plus
/// an optional "exact_weights" array kept verbatim.
struct TensorInput {
  MpsTensor tensor;
  std::optional<nlohmann::json> exact_weights;
};

/// Throws ParseError on malformed JSON and InvalidTensor on bad shapes.
TensorInput tensor_from_json(const nlohmann::json& j);
TensorInput load_tensor(const std::string& path);

nlohmann::json tensor_to_json(const MpsTensor& a);

}  // namespace lrn::mps
