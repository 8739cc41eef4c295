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
#include <string_view>

#include <json.hpp>

#include "lrn/mps/spectral.hpp"
#include "lrn/mps/tensor.hpp"

namespace lrn::cli {

std::uint64_t fnv1a(std::string_view bytes);

/// Eigenvalues, peripheral count and spectral radius of the transfer
/// operator, memoized under $LRN_DETECT_CACHE when it names a directory.
nlohmann::json spectral_summary(const mps::MpsTensor& a);

/// Directory named by LRN_DETECT_CACHE, if set and non-empty.
std::optional<std::string> cache_dir();

}  // namespace lrn::cli
