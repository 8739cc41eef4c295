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
#include <string_view>
#include <vector>

namespace lrn::stabilizer {

/// i^phase * P_0 (x) ... (x) P_{n-1}, with (x, z) = (1, 1) denoting Y.
/// Bits are packed 64 qubits per word.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n);

  int num_qubits() const { return n_; }
  /// Exponent of i, in 0..3.
  int phase() const { return phase_; }
  void set_phase(int k) { phase_ = static_cast<std::uint8_t>(((k % 4) + 4) % 4); }

  bool x(int q) const { return (x_[q >> 6] >> (q & 63)) & 1u; }
  bool z(int q) const { return (z_[q >> 6] >> (q & 63)) & 1u; }
  void set_x(int q, bool v);
  void set_z(int q, bool v);

  std::vector<std::uint64_t>& x_words() { return x_; }
  std::vector<std::uint64_t>& z_words() { return z_; }
  const std::vector<std::uint64_t>& x_words() const { return x_; }
  const std::vector<std::uint64_t>& z_words() const { return z_; }

  bool commutes(const PauliString& other) const;
  /// this <- this * other, with exact phase.
  PauliString& operator*=(const PauliString& other);
  bool operator==(const PauliString&) const = default;

  /// Sign prefix then one of I, X, Y, Z per qubit: "+XXI", "-iZ".
  std::string str() const;
  /// Accepts an optional sign (+, -, or U+2212), an optional i, then
  /// I/X/Y/Z or '_'. Throws ParseError.
  static PauliString parse(std::string_view text);

 private:
  int n_ = 0;
  std::uint8_t phase_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

}  // namespace lrn::stabilizer
