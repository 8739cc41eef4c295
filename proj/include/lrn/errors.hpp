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

#include <stdexcept>
#include <string>

namespace lrn {

/// Base of every error raised by the library. `kind()` is the stable
/// machine-readable name used in CLI reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define LRN_DEFINE_ERROR(Name)                                             \
  class Name : public Error {                                              \
   public:                                                                 \
    explicit Name(const std::string& what) : Error(#Name, what) {}        \
  }

// mps
LRN_DEFINE_ERROR(InvalidTensor);
LRN_DEFINE_ERROR(PhysicalDimCap);
LRN_DEFINE_ERROR(NonDiagonalizablePeripheral);
LRN_DEFINE_ERROR(ConvergenceFailure);
LRN_DEFINE_ERROR(DecompositionFailure);
LRN_DEFINE_ERROR(RankTolerance);
LRN_DEFINE_ERROR(DimensionMismatch);
LRN_DEFINE_ERROR(NotNormalInput);
LRN_DEFINE_ERROR(DegenerateNormalization);
// criteria
LRN_DEFINE_ERROR(NotNormalized);
LRN_DEFINE_ERROR(OutOfRange);
LRN_DEFINE_ERROR(InvalidWeight);
// stabilizer
LRN_DEFINE_ERROR(TargetOutOfRange);
LRN_DEFINE_ERROR(DependentGenerators);
LRN_DEFINE_ERROR(OverlappingRegions);
LRN_DEFINE_ERROR(ParseError);
// dense
LRN_DEFINE_ERROR(SizeCap);
LRN_DEFINE_ERROR(ZeroState);
LRN_DEFINE_ERROR(NotPSD);
LRN_DEFINE_ERROR(GeometryMismatch);
LRN_DEFINE_ERROR(PartitionTooSmall);
LRN_DEFINE_ERROR(BadFactorization);

#undef LRN_DEFINE_ERROR

}  // namespace lrn
